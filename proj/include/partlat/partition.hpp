#ifndef PARTLAT_PARTITION_HPP
#define PARTLAT_PARTITION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "partlat/rng.hpp"

namespace partlat {

/// A partition of {1..n}, identified with the corresponding equivalence
/// relation. Stored as a block-id array in first-occurrence canonical form:
/// scanning elements 1..n, the block ids appear as 0,1,2,... in the order
/// each block's minimum element is met. Canonical form makes equality and
/// hashing O(n) with no normalization at comparison time.
class Partition {
 public:
  Partition() = default;

  static Partition bottom(int n);  // all singletons
  static Partition top(int n);     // one block
  /// The atom equ(u,v): one block {u,v}, all other blocks singletons.
  static Partition atom(int n, int u, int v);
  /// Canonicalizes an arbitrary block-id assignment (1 value per element).
  static Partition from_block_ids(std::vector<std::uint16_t> raw);

  int size() const { return static_cast<int>(id_.size()); }
  int block_count() const { return blocks_; }
  /// Block id of a 1-based element.
  int block_of(int e) const { return id_[static_cast<std::size_t>(e) - 1]; }
  bool same_block(int u, int v) const { return block_of(u) == block_of(v); }
  const std::vector<std::uint16_t>& block_ids() const { return id_; }

  bool operator==(const Partition&) const = default;
  std::uint64_t hash() const;

  /// "1,3|2,4|5": blocks by minimum element, elements ascending, singletons
  /// included (so n is recoverable from the string alone).
  std::string to_canonical() const;
  static Partition from_canonical(std::string_view text, int n);

 private:
  std::vector<std::uint16_t> id_;
  int blocks_ = 0;
};

Partition meet(const Partition& x, const Partition& y);
Partition join(const Partition& x, const Partition& y);
bool leq(const Partition& x, const Partition& y);

/// Hasse-graph distance in the semimodular lattice Part(n):
/// (blocks(x) - blocks(x+y)) + (blocks(y) - blocks(x+y)).
int distance(const Partition& x, const Partition& y);

/// All partitions of {1..n} with exactly r blocks, in lexicographic order
/// of their canonical serialization. Throws on r outside [1, n].
std::vector<Partition> enumerate_r_block_partitions(int n, int r);

/// All partitions of {1..n} (Bell(n) of them), same ordering.
std::vector<Partition> enumerate_partitions(int n);

/// Uniform over all Bell(n) partitions, by unranking a uniform index
/// against restricted-growth-string counts. Deterministic per rng stream.
Partition random_partition(int n, Rng& rng);

}  // namespace partlat

#endif
