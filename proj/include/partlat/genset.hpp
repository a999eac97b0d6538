#ifndef PARTLAT_GENSET_HPP
#define PARTLAT_GENSET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "partlat/tuple.hpp"

namespace partlat {

struct ClosureResult {
  /// True iff the generated sublattice contains every atom of the power
  /// (Part(n)^t is atomistic, and the join of the atoms below any element
  /// recovers it, so atom cover is equivalent to generating everything).
  bool generating = false;
  bool completed = false;        // reached the fixpoint (no early stop)
  std::size_t closure_size = 0;  // elements found at the time of stopping
  long long atoms_covered = 0;   // out of t * n(n-1)/2
  long long steps = 0;           // worklist elements fully processed
  bool limit_hit = false;
};

struct ClosureOptions {
  std::size_t limit = 5'000'000;  // abort when the closure grows past this
  /// Stop as soon as every atom is present; the verdict is already decided
  /// then, and the remaining growth is the expensive part.
  bool early_exit = true;
};

/// Worklist fixpoint of the generators under pairwise meet and join.
/// Dispatches to a table-driven fast path for single partitions with
/// n <= 7. Throws on an empty set or mixed shapes.
ClosureResult closure(std::span<const PartitionTuple> generators,
                      const ClosureOptions& options = {});

/// Atom-cover verdict with early exit.
bool is_generating(std::span<const PartitionTuple> generators);

/// Part(n) with all meets and joins precomputed as index tables; practical
/// for n <= 7 (Bell(7) = 877).
class SmallLattice {
 public:
  explicit SmallLattice(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const Partition& element(int idx) const { return elems_[idx]; }
  int index_of(const Partition& p) const;
  int meet_of(int x, int y) const { return meet_[id(x, y)]; }
  int join_of(int x, int y) const { return join_[id(x, y)]; }
  const std::vector<int>& atom_indices() const { return atoms_; }

  /// Closure in index space; same semantics as the generic closure.
  ClosureResult closure_indexed(std::span<const int> generators,
                                const ClosureOptions& options = {}) const;

  /// Lazily built, cached per n.
  static const SmallLattice& get(int n);

 private:
  std::size_t id(int x, int y) const {
    return static_cast<std::size_t>(x) * elems_.size() + y;
  }

  int n_;
  std::vector<Partition> elems_;
  std::unordered_map<std::string, int> index_;  // canonical text -> index
  std::vector<std::uint16_t> meet_, join_;
  std::vector<int> atoms_;
};

struct ExperimentReport {
  int n = 0;
  int subset_size = 0;
  long long samples = 0;
  long long found = 0;  // samples whose subset generates Part(n)
  double fraction = 0.0;
  std::uint64_t seed = 0;
};

/// Draws `samples` subsets of `subset_size` distinct uniform partitions of
/// {1..n} (subsets may repeat across samples) and counts the generating
/// ones. Deterministic per seed: sample s uses the s-th substream.
ExperimentReport sample_generating_fraction(int n, int subset_size,
                                            long long samples,
                                            std::uint64_t seed);

}  // namespace partlat

#endif
