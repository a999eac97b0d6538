#include "partlat/tuple.hpp"

#include <charconv>
#include <stdexcept>

namespace partlat {

namespace {

void require_same_shape(const PartitionTuple& x, const PartitionTuple& y) {
  if (!(x.shape() == y.shape()))
    throw std::invalid_argument("tuple shapes differ: " +
                                x.shape().to_string() + " vs " +
                                y.shape().to_string());
}

}  // namespace

std::string LatticeShape::to_string() const {
  return "P" + std::to_string(n) + "^" + std::to_string(t);
}

LatticeShape LatticeShape::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("bad shape spec '" + std::string(text) +
                                "', expected P<n>^<t>");
  };
  if (text.empty() || text[0] != 'P') fail();
  LatticeShape s;
  const char* begin = text.data() + 1;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(begin, end, s.n);
  if (ec != std::errc()) fail();
  if (p == end) {
    s.t = 1;
  } else {
    if (*p != '^') fail();
    auto [q, ec2] = std::from_chars(p + 1, end, s.t);
    if (ec2 != std::errc() || q != end) fail();
  }
  if (s.n < 1 || s.t < 1) fail();
  return s;
}

PartitionTuple::PartitionTuple(LatticeShape shape,
                               std::vector<Partition> coords)
    : shape_(shape), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != shape_.t)
    throw std::invalid_argument("tuple has " +
                                std::to_string(coords_.size()) +
                                " coordinates, shape wants " +
                                std::to_string(shape_.t));
  for (const auto& c : coords_)
    if (c.size() != shape_.n)
      throw std::invalid_argument("coordinate ground-set size " +
                                  std::to_string(c.size()) +
                                  " does not match shape " +
                                  shape_.to_string());
}

PartitionTuple::PartitionTuple(Partition p)
    : shape_{p.size(), 1}, coords_{std::move(p)} {}

PartitionTuple PartitionTuple::bottom(LatticeShape shape) {
  return PartitionTuple(shape, std::vector<Partition>(
                                   shape.t, Partition::bottom(shape.n)));
}

PartitionTuple PartitionTuple::top(LatticeShape shape) {
  return PartitionTuple(shape,
                        std::vector<Partition>(shape.t, Partition::top(shape.n)));
}

std::uint64_t PartitionTuple::hash() const {
  std::uint64_t h = 0x2545f4914f6cdd1dULL;
  for (const auto& c : coords_) {
    h ^= c.hash();
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string PartitionTuple::to_text() const {
  std::string out;
  for (int i = 0; i < shape_.t; ++i) {
    if (i) out += ';';
    out += coords_[i].to_canonical();
  }
  return out;
}

PartitionTuple PartitionTuple::from_text(std::string_view text,
                                         LatticeShape shape) {
  std::vector<Partition> coords;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = text.find(';', pos);
    std::string_view piece = semi == std::string_view::npos
                                 ? text.substr(pos)
                                 : text.substr(pos, semi - pos);
    coords.push_back(Partition::from_canonical(piece, shape.n));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return PartitionTuple(shape, std::move(coords));
}

PartitionTuple meet(const PartitionTuple& x, const PartitionTuple& y) {
  require_same_shape(x, y);
  std::vector<Partition> coords;
  coords.reserve(x.coords().size());
  for (std::size_t i = 0; i < x.coords().size(); ++i)
    coords.push_back(meet(x.coords()[i], y.coords()[i]));
  return PartitionTuple(x.shape(), std::move(coords));
}

PartitionTuple join(const PartitionTuple& x, const PartitionTuple& y) {
  require_same_shape(x, y);
  std::vector<Partition> coords;
  coords.reserve(x.coords().size());
  for (std::size_t i = 0; i < x.coords().size(); ++i)
    coords.push_back(join(x.coords()[i], y.coords()[i]));
  return PartitionTuple(x.shape(), std::move(coords));
}

bool leq(const PartitionTuple& x, const PartitionTuple& y) {
  require_same_shape(x, y);
  for (std::size_t i = 0; i < x.coords().size(); ++i)
    if (!leq(x.coords()[i], y.coords()[i])) return false;
  return true;
}

long long distance(const PartitionTuple& x, const PartitionTuple& y) {
  require_same_shape(x, y);
  long long d = 0;
  for (std::size_t i = 0; i < x.coords().size(); ++i)
    d += distance(x.coords()[i], y.coords()[i]);
  return d;
}

}  // namespace partlat
