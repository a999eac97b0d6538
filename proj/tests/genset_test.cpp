#include <doctest.h>

#include <vector>

#include "partlat/genset.hpp"
#include "partlat/power.hpp"
#include "partlat/zadori.hpp"

using namespace partlat;

namespace {

std::vector<PartitionTuple> lift(const std::vector<Partition>& ps) {
  std::vector<PartitionTuple> out;
  for (const auto& p : ps) out.emplace_back(p);
  return out;
}

}  // namespace

TEST_CASE("ladder quadruple closure is the whole lattice, n=5..7") {
  const std::size_t expected[] = {52, 203, 877};
  for (int n = 5; n <= 7; ++n) {
    auto gens = lift(config_quadruple(build_config(n)));
    auto res = closure(gens, {.limit = 5'000'000, .early_exit = false});
    INFO("n = ", n);
    CHECK(res.completed);
    CHECK(res.generating);
    CHECK(res.closure_size == expected[n - 5]);
    CHECK(res.atoms_covered == n * (n - 1) / 2);
  }
}

TEST_CASE("bottom alone generates nothing") {
  std::vector<PartitionTuple> gens = {PartitionTuple(Partition::bottom(5))};
  auto res = closure(gens, {.early_exit = false});
  CHECK(res.closure_size == 1);
  CHECK(!res.generating);
  CHECK(res.completed);
}

TEST_CASE("all atoms generate, including in a power") {
  std::vector<PartitionTuple> atoms4;
  for (int v = 2; v <= 4; ++v)
    for (int u = 1; u < v; ++u)
      atoms4.emplace_back(Partition::atom(4, u, v));
  CHECK(is_generating(atoms4));

  // Power shape: one atom per (coordinate, pair), bottom elsewhere.
  LatticeShape sh{4, 2};
  std::vector<PartitionTuple> atoms;
  for (int j = 0; j < 2; ++j)
    for (int v = 2; v <= 4; ++v)
      for (int u = 1; u < v; ++u) {
        std::vector<Partition> coords(2, Partition::bottom(4));
        coords[j] = Partition::atom(4, u, v);
        atoms.emplace_back(sh, coords);
      }
  auto res = closure(atoms, {.early_exit = false});
  CHECK(res.generating);
  CHECK(res.closure_size == 15 * 15);  // Bell(4)^2
}

TEST_CASE("closure respects the element limit") {
  auto gens = lift(config_quadruple(build_config(6)));
  auto res = closure(gens, {.limit = 10, .early_exit = false});
  CHECK(res.limit_hit);
  CHECK(!res.completed);
  CHECK(!res.generating);
}

TEST_CASE("early-exit verdict equals full-closure verdict") {
  Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<PartitionTuple> gens;
    for (int i = 0; i < 4; ++i)
      gens.emplace_back(random_partition(5, rng));
    auto quick = closure(gens);
    auto full = closure(gens, {.early_exit = false});
    CHECK(quick.generating == full.generating);
    CHECK(full.completed);
  }
}

TEST_CASE("three random partitions never generate Part(5)") {
  Rng rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<PartitionTuple> gens;
    for (int i = 0; i < 3; ++i)
      gens.emplace_back(random_partition(5, rng));
    CHECK(!is_generating(gens));
  }
}

TEST_CASE("closure output is closed under meet and join") {
  Rng rng(5);
  std::vector<PartitionTuple> gens = {PartitionTuple(random_partition(6, rng)),
                                      PartitionTuple(random_partition(6, rng)),
                                      PartitionTuple(random_partition(6, rng))};
  // Reconstruct the closure generically to get its members.
  const SmallLattice& lat = SmallLattice::get(6);
  std::vector<int> idx;
  for (const auto& g : gens) idx.push_back(lat.index_of(g.coord(0)));
  std::vector<char> member(lat.size(), 0);
  std::vector<int> elems = idx;
  for (int g : idx) member[g] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (int x : {lat.meet_of(elems[i], elems[j]),
                    lat.join_of(elems[i], elems[j])})
        if (!member[x]) {
          member[x] = 1;
          elems.push_back(x);
        }
  auto res = closure(gens, {.early_exit = false});
  CHECK(res.closure_size == elems.size());
  for (int trial = 0; trial < 1000; ++trial) {
    int a = elems[rng.below(elems.size())];
    int b = elems[rng.below(elems.size())];
    CHECK(member[lat.meet_of(a, b)]);
    CHECK(member[lat.join_of(a, b)]);
  }
}

TEST_CASE("index tables agree with direct computation") {
  const SmallLattice& lat = SmallLattice::get(5);
  CHECK(lat.size() == 52);
  CHECK(lat.atom_indices().size() == 10);
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Partition x = random_partition(5, rng), y = random_partition(5, rng);
    CHECK(lat.element(lat.meet_of(lat.index_of(x), lat.index_of(y))) ==
          meet(x, y));
    CHECK(lat.element(lat.join_of(lat.index_of(x), lat.index_of(y))) ==
          join(x, y));
  }
}

TEST_CASE("constructed four-generator families pass the closure oracle") {
  for (int n : {5, 6}) {
    auto tuples = generator_tuples(build_four_generators(n));
    CHECK(is_generating(tuples));
  }
  CHECK(is_generating(generator_tuples(build_ordertype_generators(7))));
}

TEST_CASE("sampling experiments are reproducible and validated") {
  auto a = sample_generating_fraction(4, 8, 2000, 42);
  auto b = sample_generating_fraction(4, 8, 2000, 42);
  CHECK(a.found == b.found);
  CHECK(a.fraction == doctest::Approx(0.8978).epsilon(0.05));
  auto c = sample_generating_fraction(4, 8, 2000, 43);
  CHECK(a.found != c.found);  // different seed, different subsets

  CHECK_THROWS_AS(sample_generating_fraction(4, 16, 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_generating_fraction(4, 0, 10, 1),
                  std::invalid_argument);
}
