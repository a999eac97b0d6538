#include <doctest.h>

#include <string>

#include "partlat/power.hpp"

using namespace partlat;

TEST_CASE("four-generator plan shapes") {
  auto g7 = build_four_generators(7);
  CHECK(g7.shape.t == 3);
  CHECK(g7.plan.U == std::vector<int>{2, 3});
  CHECK(g7.plan.W == std::vector<int>{5, 6, 7});
  CHECK(g7.plan.r_u == 1);
  CHECK(g7.plan.r_w == 2);
  CHECK(g7.full_exponent == 3);

  auto g9 = build_four_generators(9);
  CHECK(g9.shape.t == 21);

  auto g5 = build_four_generators(5);
  CHECK(g5.shape.t == 1);
  // The single augmented fourth still links both end rungs.
  CHECK(g5.fourth[0].same_block(1, 4));
  CHECK(g5.fourth[0].same_block(3, 5));
}

TEST_CASE("every augmented fourth extends the base") {
  for (int n : {5, 6, 7, 8, 9}) {
    auto g = build_four_generators(n);
    for (const auto& f : g.fourth) CHECK(leq(g.base_fourth, f));
  }
}

TEST_CASE("alpha meet fourth restricted to U and W is the pattern pair") {
  for (int n : {7, 9}) {
    auto g = build_four_generators(n);
    for (int i = 0; i < g.shape.t; ++i) {
      Partition ad = meet(g.alpha, g.fourth[i]);
      const auto& [kap, lam] = g.plan.pairs[i];
      for (std::size_t x = 0; x < g.plan.U.size(); ++x)
        for (std::size_t y = x + 1; y < g.plan.U.size(); ++y)
          CHECK(ad.same_block(g.plan.U[x], g.plan.U[y]) ==
                kap.same_block(static_cast<int>(x) + 1,
                               static_cast<int>(y) + 1));
      for (std::size_t x = 0; x < g.plan.W.size(); ++x)
        for (std::size_t y = x + 1; y < g.plan.W.size(); ++y)
          CHECK(ad.same_block(g.plan.W[x], g.plan.W[y]) ==
                lam.same_block(static_cast<int>(x) + 1,
                               static_cast<int>(y) + 1));
    }
  }
}

TEST_CASE("exponent prefix and bounds") {
  auto g2 = build_four_generators(7, 2);
  auto g3 = build_four_generators(7, 3);
  CHECK(g2.shape.t == 2);
  CHECK(g2.fourth[0] == g3.fourth[0]);
  CHECK(g2.fourth[1] == g3.fourth[1]);
  CHECK_THROWS_WITH_AS(build_four_generators(7, 5),
                       doctest::Contains("certified maximum 3"),
                       std::invalid_argument);
  CHECK_THROWS_AS(build_four_generators(7, 0), std::invalid_argument);
}

TEST_CASE("zigzag cycle layout") {
  CHECK(zigzag_cycle(build_config(5)) == std::vector<int>{1, 4, 2, 5, 3});
  CHECK(zigzag_cycle(build_config(8)) ==
        std::vector<int>{1, 5, 2, 6, 3, 7, 4, 8});
}

TEST_CASE("four-generation certificates are valid") {
  for (int n : {5, 6, 7, 8}) {
    auto cert = verify_four_generation(n);
    INFO("n = ", n);
    CHECK(cert.valid);
  }
  auto c7 = verify_four_generation(7);
  // 3 antichain pairs + 3*6 diagonal + 3*2 separations + 9 matrix checks.
  CHECK(c7.checks_run == 36);
  CHECK(verify_four_generation(9).valid);
  // A prefix of a valid family is still valid.
  CHECK(verify_generators(build_four_generators(11, 12)).valid);
}

TEST_CASE("observer sees every check") {
  long long seen = 0;
  auto cert = verify_four_generation(7, -1,
                                     [&](const CheckRecord&) { ++seen; });
  CHECK(seen == cert.checks_run);
}

TEST_CASE("duplicated coordinate is caught") {
  auto g = build_four_generators(7);
  g.fourth[1] = g.fourth[0];
  g.plan.pairs[1] = g.plan.pairs[0];
  auto cert = verify_generators(g);
  CHECK(!cert.valid);
  bool saw_antichain = false, saw_separation = false;
  for (const auto& f : cert.failures) {
    saw_antichain = saw_antichain || f.name == "fourth_antichain";
    saw_separation = saw_separation || f.name == "separation";
  }
  CHECK(saw_antichain);
  CHECK(saw_separation);
}

TEST_CASE("order-type plan shapes") {
  auto g7 = build_ordertype_generators(7);
  CHECK(g7.shape.t == 1);
  CHECK(g7.plan.U == std::vector<int>{2});
  CHECK(g7.plan.W == std::vector<int>{6});

  auto g11 = build_ordertype_generators(11);
  CHECK(g11.shape.t == 2);
  CHECK(g11.plan.U == std::vector<int>{2, 4});
  CHECK(g11.plan.pairs[0].first == Partition::top(2));
  CHECK(g11.plan.pairs[0].second == Partition::bottom(2));
  CHECK(g11.plan.pairs[1].first == Partition::bottom(2));

  CHECK(build_ordertype_generators(13).shape.t == 2);
  CHECK(build_ordertype_generators(15).shape.t == 9);
  CHECK_THROWS_AS(build_ordertype_generators(6), std::invalid_argument);
}

TEST_CASE("order-type fourth generators lie below alpha") {
  for (int n = 7; n <= 15; ++n) {
    auto g = build_ordertype_generators(n);
    for (const auto& f : g.fourth) CHECK(leq(f, g.alpha));
  }
}

TEST_CASE("order-type certificates are valid") {
  for (int n = 7; n <= 13; ++n) {
    auto cert = verify_ordertype_generation(n);
    INFO("n = ", n);
    CHECK(cert.valid);
  }
}
