#include "partlat/genset.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "partlat/combinatorics.hpp"

namespace partlat {

namespace {

bool is_atom_partition(const Partition& p) {
  return p.block_count() == p.size() - 1;
}

// The unique non-singleton pair of an atom.
std::pair<int, int> atom_pair(const Partition& p) {
  std::vector<int> first(p.size(), 0);
  for (int e = 1; e <= p.size(); ++e) {
    int b = p.block_of(e);
    if (first[b]) return {first[b], e};
    first[b] = e;
  }
  return {0, 0};
}

long long pair_idx(int u, int v) {  // u < v, 1-based
  return static_cast<long long>(v - 1) * (v - 2) / 2 + (u - 1);
}

}  // namespace

ClosureResult closure(std::span<const PartitionTuple> generators,
                      const ClosureOptions& options) {
  if (generators.empty())
    throw std::invalid_argument("empty generator set");
  const LatticeShape shape = generators.front().shape();
  for (const auto& g : generators)
    if (!(g.shape() == shape))
      throw std::invalid_argument("generators of mixed shapes");

  if (shape.t == 1 && shape.n <= 7) {
    const SmallLattice& lat = SmallLattice::get(shape.n);
    std::vector<int> idx;
    idx.reserve(generators.size());
    for (const auto& g : generators) idx.push_back(lat.index_of(g.coord(0)));
    return lat.closure_indexed(idx, options);
  }

  const int n = shape.n, t = shape.t;
  const long long pairs_per = static_cast<long long>(n) * (n - 1) / 2;
  const long long total_atoms = t * pairs_per;

  ClosureResult res;
  std::vector<char> covered(total_atoms, 0);
  struct Hash {
    std::size_t operator()(const PartitionTuple& x) const { return x.hash(); }
  };
  std::unordered_set<PartitionTuple, Hash> seen;
  std::vector<const PartitionTuple*> elems;

  auto note = [&](const PartitionTuple& x) {
    int nz = -1;
    for (int j = 0; j < t; ++j) {
      const Partition& c = x.coord(j);
      if (c.block_count() == n) continue;  // bottom coordinate
      if (nz >= 0 || !is_atom_partition(c)) return;
      nz = j;
    }
    if (nz < 0) return;  // the all-bottom tuple
    auto [u, v] = atom_pair(x.coord(nz));
    long long id = nz * pairs_per + pair_idx(u, v);
    if (!covered[id]) {
      covered[id] = 1;
      ++res.atoms_covered;
    }
  };
  auto add = [&](PartitionTuple x) {
    auto [it, inserted] = seen.insert(std::move(x));
    if (inserted) {
      elems.push_back(&*it);
      note(*it);
    }
  };

  for (const auto& g : generators) add(g);
  bool stopped = options.early_exit && res.atoms_covered == total_atoms;
  for (std::size_t i = 0; i < elems.size() && !stopped; ++i) {
    ++res.steps;
    for (std::size_t j = 0; j < i; ++j) {
      add(meet(*elems[i], *elems[j]));
      add(join(*elems[i], *elems[j]));
      if (options.early_exit && res.atoms_covered == total_atoms) {
        stopped = true;
        break;
      }
      if (seen.size() > options.limit) {
        res.limit_hit = true;
        stopped = true;
        break;
      }
    }
  }
  res.closure_size = seen.size();
  res.completed = !stopped;
  res.generating = !res.limit_hit && res.atoms_covered == total_atoms;
  return res;
}

bool is_generating(std::span<const PartitionTuple> generators) {
  return closure(generators).generating;
}

SmallLattice::SmallLattice(int n) : n_(n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("index tables are built only for n <= 7");
  elems_ = enumerate_partitions(n);
  const int count = size();
  index_.reserve(count);
  for (int i = 0; i < count; ++i) index_[elems_[i].to_canonical()] = i;
  meet_.resize(static_cast<std::size_t>(count) * count);
  join_.resize(static_cast<std::size_t>(count) * count);
  for (int x = 0; x < count; ++x)
    for (int y = x; y < count; ++y) {
      auto m = static_cast<std::uint16_t>(
          index_.at(meet(elems_[x], elems_[y]).to_canonical()));
      auto j = static_cast<std::uint16_t>(
          index_.at(join(elems_[x], elems_[y]).to_canonical()));
      meet_[id(x, y)] = meet_[id(y, x)] = m;
      join_[id(x, y)] = join_[id(y, x)] = j;
    }
  for (int i = 0; i < count; ++i)
    if (is_atom_partition(elems_[i])) atoms_.push_back(i);
}

int SmallLattice::index_of(const Partition& p) const {
  auto it = index_.find(p.to_canonical());
  if (it == index_.end())
    throw std::invalid_argument("partition does not belong to this lattice");
  return it->second;
}

ClosureResult SmallLattice::closure_indexed(
    std::span<const int> generators, const ClosureOptions& options) const {
  if (generators.empty())
    throw std::invalid_argument("empty generator set");
  ClosureResult res;
  const long long total_atoms = static_cast<long long>(atoms_.size());
  std::vector<char> member(size(), 0), atom_flag(size(), 0);
  for (int a : atoms_) atom_flag[a] = 1;
  std::vector<int> elems;
  auto add = [&](int x) {
    if (member[x]) return;
    member[x] = 1;
    elems.push_back(x);
    if (atom_flag[x]) ++res.atoms_covered;
  };
  for (int g : generators) {
    if (g < 0 || g >= size())
      throw std::invalid_argument("generator index out of range");
    add(g);
  }
  bool stopped = options.early_exit && res.atoms_covered == total_atoms;
  for (std::size_t i = 0; i < elems.size() && !stopped; ++i) {
    ++res.steps;
    for (std::size_t j = 0; j < i; ++j) {
      add(meet_of(elems[i], elems[j]));
      add(join_of(elems[i], elems[j]));
      if (options.early_exit && res.atoms_covered == total_atoms) {
        stopped = true;
        break;
      }
      if (elems.size() > options.limit) {
        res.limit_hit = true;
        stopped = true;
        break;
      }
    }
  }
  res.closure_size = elems.size();
  res.completed = !stopped;
  res.generating = !res.limit_hit && res.atoms_covered == total_atoms;
  return res;
}

const SmallLattice& SmallLattice::get(int n) {
  static std::array<std::unique_ptr<SmallLattice>, 8> cache;
  if (n < 1 || n > 7)
    throw std::invalid_argument("index tables are built only for n <= 7");
  if (!cache[n]) cache[n] = std::make_unique<SmallLattice>(n);
  return *cache[n];
}

ExperimentReport sample_generating_fraction(int n, int subset_size,
                                            long long samples,
                                            std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("experiments need n >= 2");
  if (subset_size < 1 || samples < 1)
    throw std::invalid_argument("subset size and sample count must be >= 1");
  if (BigCount(subset_size) > bell(n))
    throw std::invalid_argument("subset size exceeds the number of "
                                "partitions of an n-element set");

  ExperimentReport rep;
  rep.n = n;
  rep.subset_size = subset_size;
  rep.samples = samples;
  rep.seed = seed;

  const bool fast = n <= 7;
  for (long long s = 0; s < samples; ++s) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(s));
    if (fast) {
      const SmallLattice& lat = SmallLattice::get(n);
      std::vector<char> in(lat.size(), 0);
      std::vector<int> subset;
      while (static_cast<int>(subset.size()) < subset_size) {
        int idx = lat.index_of(random_partition(n, rng));
        if (!in[idx]) {
          in[idx] = 1;
          subset.push_back(idx);
        }
      }
      rep.found += lat.closure_indexed(subset).generating ? 1 : 0;
    } else {
      std::vector<PartitionTuple> subset;
      while (static_cast<int>(subset.size()) < subset_size) {
        PartitionTuple cand{random_partition(n, rng)};
        bool dup = false;
        for (const auto& x : subset) dup = dup || x == cand;
        if (!dup) subset.push_back(std::move(cand));
      }
      rep.found += is_generating(subset) ? 1 : 0;
    }
  }
  rep.fraction = static_cast<double>(rep.found) / static_cast<double>(samples);
  return rep;
}

}  // namespace partlat
