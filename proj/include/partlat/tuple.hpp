#ifndef PARTLAT_TUPLE_HPP
#define PARTLAT_TUPLE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "partlat/partition.hpp"

namespace partlat {

/// Identifies the lattice Part(n)^t. Text form "P<n>^<t>", e.g. "P12^61";
/// "P12" is accepted for t=1.
struct LatticeShape {
  int n = 0;
  int t = 1;

  bool operator==(const LatticeShape&) const = default;
  std::string to_string() const;
  static LatticeShape parse(std::string_view text);
};

/// An element of Part(n)^t with componentwise lattice structure.
class PartitionTuple {
 public:
  PartitionTuple() = default;
  PartitionTuple(LatticeShape shape, std::vector<Partition> coords);
  /// Lifts a single partition to shape {n, 1}.
  explicit PartitionTuple(Partition p);

  static PartitionTuple bottom(LatticeShape shape);
  static PartitionTuple top(LatticeShape shape);

  const LatticeShape& shape() const { return shape_; }
  const std::vector<Partition>& coords() const { return coords_; }
  const Partition& coord(int i) const { return coords_[i]; }

  bool operator==(const PartitionTuple&) const = default;
  std::uint64_t hash() const;

  /// Coordinates joined by ';', e.g. "1,2|3;1|2,3".
  std::string to_text() const;
  static PartitionTuple from_text(std::string_view text, LatticeShape shape);

 private:
  LatticeShape shape_;
  std::vector<Partition> coords_;
};

PartitionTuple meet(const PartitionTuple& x, const PartitionTuple& y);
PartitionTuple join(const PartitionTuple& x, const PartitionTuple& y);
bool leq(const PartitionTuple& x, const PartitionTuple& y);
/// Sum of coordinate distances.
long long distance(const PartitionTuple& x, const PartitionTuple& y);

}  // namespace partlat

#endif
