#include "partlat/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace partlat {

namespace {

void canonicalize(std::vector<std::uint16_t>& id, int& blocks) {
  constexpr std::uint16_t kUnset = 0xffff;
  std::vector<std::uint16_t> relabel;
  std::uint16_t next = 0;
  for (auto& b : id) {
    if (b >= relabel.size()) relabel.resize(b + 1, kUnset);
    if (relabel[b] == kUnset) relabel[b] = next++;
    b = relabel[b];
  }
  blocks = next;
}

// Minimal union-find over 0..n-1, path halving.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void require_same_size(const Partition& x, const Partition& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("partition ground-set sizes differ: " +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()));
}

}  // namespace

Partition Partition::bottom(int n) {
  if (n < 1) throw std::invalid_argument("ground-set size must be positive");
  std::vector<std::uint16_t> id(n);
  for (int i = 0; i < n; ++i) id[i] = static_cast<std::uint16_t>(i);
  return from_block_ids(std::move(id));
}

Partition Partition::top(int n) {
  if (n < 1) throw std::invalid_argument("ground-set size must be positive");
  return from_block_ids(std::vector<std::uint16_t>(n, 0));
}

Partition Partition::atom(int n, int u, int v) {
  if (u < 1 || u > n || v < 1 || v > n)
    throw std::invalid_argument("atom endpoints out of range");
  if (u == v) throw std::invalid_argument("atom endpoints must differ");
  std::vector<std::uint16_t> id(n);
  for (int i = 0; i < n; ++i) id[i] = static_cast<std::uint16_t>(i);
  id[std::max(u, v) - 1] = id[std::min(u, v) - 1];
  return from_block_ids(std::move(id));
}

Partition Partition::from_block_ids(std::vector<std::uint16_t> raw) {
  Partition p;
  p.id_ = std::move(raw);
  canonicalize(p.id_, p.blocks_);
  return p;
}

std::uint64_t Partition::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(size());
  for (auto b : id_) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Partition::to_canonical() const {
  // Block ids are already in first-occurrence order, so emitting blocks by
  // ascending id lists them by minimum element.
  std::vector<std::string> blocks(blocks_);
  for (int e = 1; e <= size(); ++e) {
    std::string& s = blocks[block_of(e)];
    if (!s.empty()) s += ',';
    s += std::to_string(e);
  }
  std::string out;
  for (int b = 0; b < blocks_; ++b) {
    if (b) out += '|';
    out += blocks[b];
  }
  return out;
}

Partition Partition::from_canonical(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("ground-set size must be positive");
  std::vector<std::uint16_t> id(n, 0xffff);
  std::uint16_t block = 0;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("partition parse error: " + what);
  };
  bool expect_number = true;
  while (i <= text.size()) {
    if (expect_number) {
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start)
        fail("expected element at position " + std::to_string(start));
      int e = 0;
      for (std::size_t j = start; j < i; ++j) e = e * 10 + (text[j] - '0');
      if (e < 1 || e > n)
        fail("element " + std::to_string(e) + " out of range 1.." +
             std::to_string(n));
      if (id[e - 1] != 0xffff) fail("duplicate element " + std::to_string(e));
      id[e - 1] = block;
      expect_number = false;
    } else if (i == text.size()) {
      break;
    } else if (text[i] == ',') {
      ++i;
      expect_number = true;
    } else if (text[i] == '|') {
      ++i;
      ++block;
      expect_number = true;
    } else {
      fail(std::string("unexpected character '") + text[i] + "'");
    }
  }
  for (int e = 1; e <= n; ++e)
    if (id[e - 1] == 0xffff) fail("missing element " + std::to_string(e));
  return from_block_ids(std::move(id));
}

Partition meet(const Partition& x, const Partition& y) {
  require_same_size(x, y);
  const int n = x.size();
  // Pairs (x-block, y-block) become the blocks of the meet.
  std::vector<std::uint16_t> id(n);
  std::vector<int> seen(static_cast<std::size_t>(x.block_count()) *
                            y.block_count(),
                        -1);
  std::uint16_t next = 0;
  for (int e = 1; e <= n; ++e) {
    std::size_t key =
        static_cast<std::size_t>(x.block_of(e)) * y.block_count() +
        y.block_of(e);
    if (seen[key] < 0) seen[key] = next++;
    id[e - 1] = static_cast<std::uint16_t>(seen[key]);
  }
  return Partition::from_block_ids(std::move(id));
}

Partition join(const Partition& x, const Partition& y) {
  require_same_size(x, y);
  const int n = x.size();
  UnionFind uf(n);
  // Seed with both relations' block edges: it suffices to link each element
  // to the first representative of its block in either partition.
  std::vector<int> first_x(x.block_count(), -1), first_y(y.block_count(), -1);
  for (int e = 0; e < n; ++e) {
    int bx = x.block_ids()[e], by = y.block_ids()[e];
    if (first_x[bx] < 0)
      first_x[bx] = e;
    else
      uf.unite(first_x[bx], e);
    if (first_y[by] < 0)
      first_y[by] = e;
    else
      uf.unite(first_y[by], e);
  }
  std::vector<std::uint16_t> id(n);
  for (int e = 0; e < n; ++e) id[e] = static_cast<std::uint16_t>(uf.find(e));
  return Partition::from_block_ids(std::move(id));
}

bool leq(const Partition& x, const Partition& y) {
  require_same_size(x, y);
  // Every x-block must be inside a single y-block.
  std::vector<int> ymap(x.block_count(), -1);
  for (int e = 1; e <= x.size(); ++e) {
    int bx = x.block_of(e);
    if (ymap[bx] < 0)
      ymap[bx] = y.block_of(e);
    else if (ymap[bx] != y.block_of(e))
      return false;
  }
  return true;
}

int distance(const Partition& x, const Partition& y) {
  Partition j = join(x, y);
  return (x.block_count() - j.block_count()) +
         (y.block_count() - j.block_count());
}

std::vector<Partition> enumerate_r_block_partitions(int n, int r) {
  if (n < 1) throw std::invalid_argument("ground-set size must be positive");
  if (r < 1 || r > n)
    throw std::invalid_argument("block count " + std::to_string(r) +
                                " out of range 1.." + std::to_string(n));
  // Restricted growth strings with max value exactly r-1.
  std::vector<Partition> out;
  std::vector<std::uint16_t> rgs(n, 0);
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == n) {
      if (used == r) out.push_back(Partition::from_block_ids(rgs));
      return;
    }
    if (used + (n - pos) < r) return;  // cannot reach r blocks any more
    int limit = std::min(used, r - 1);
    for (int b = 0; b <= limit; ++b) {
      rgs[pos] = static_cast<std::uint16_t>(b);
      self(self, pos + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) {
              return a.to_canonical() < b.to_canonical();
            });
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for (int r = 1; r <= n; ++r) {
    auto part = enumerate_r_block_partitions(n, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) {
              return a.to_canonical() < b.to_canonical();
            });
  return out;
}

Partition random_partition(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("ground-set size must be positive");
  // ways[i][j]: extensions of a growth string with i elements placed and j
  // distinct block ids used so far.
  std::vector<std::vector<BigCount>> ways(n + 1);
  for (int i = n; i >= 0; --i) {
    ways[i].assign(n + 2, 0);
    for (int j = 0; j <= n; ++j) {
      if (i == n)
        ways[i][j] = 1;
      else
        ways[i][j] = BigCount(j) * ways[i + 1][j] + ways[i + 1][j + 1];
    }
  }
  BigCount index = rng.below_big(ways[0][0]);
  std::vector<std::uint16_t> id(n);
  int used = 0;
  for (int i = 0; i < n; ++i) {
    int pick = -1;
    for (int b = 0; b <= used; ++b) {
      const BigCount& w = b < used ? ways[i + 1][used] : ways[i + 1][used + 1];
      if (index < w) {
        pick = b;
        break;
      }
      index -= w;
    }
    id[i] = static_cast<std::uint16_t>(pick);
    if (pick == used) ++used;
  }
  return Partition::from_block_ids(std::move(id));
}

}  // namespace partlat
