#include <doctest.h>

#include "partlat/partition.hpp"
#include "partlat/term.hpp"
#include "partlat/tuple.hpp"

using namespace partlat;

TEST_CASE("store shares structurally equal subterms") {
  TermStore st(3);
  int x1 = st.var(0), x2 = st.var(1);
  int m1 = st.meet(x1, x2);
  int m2 = st.meet(x1, x2);
  CHECK(m1 == m2);
  CHECK(st.size() == 3);
  CHECK(st.join(x1, x2) != m1);
  CHECK_THROWS_AS(st.var(3), std::invalid_argument);
  CHECK_THROWS_AS(TermStore(0), std::invalid_argument);
}

TEST_CASE("evaluation over partitions and tuples") {
  TermStore st(3);
  int x1 = st.var(0), x2 = st.var(1), x3 = st.var(2);
  int root = st.meet(x1, st.join(x2, x3));
  std::vector<Partition> args = {Partition::from_canonical("1,2,3|4,5", 5),
                                 Partition::from_canonical("1,4|2,5|3", 5),
                                 Partition::from_canonical("1|2,4|3,5", 5)};
  CHECK(eval(st, root, std::span<const Partition>(args)) == args[0]);
  CHECK(eval(st, x2, std::span<const Partition>(args)) == args[1]);
  CHECK(eval(st, st.join(x1, x1), std::span<const Partition>(args)) == args[0]);

  LatticeShape sh{3, 2};
  std::vector<PartitionTuple> targs = {
      PartitionTuple::from_text("1,2|3;1|2|3", sh),
      PartitionTuple::from_text("1|2,3;1,2|3", sh),
      PartitionTuple::from_text("1,3|2;1|2,3", sh)};
  auto v = eval(st, root, std::span<const PartitionTuple>(targs));
  CHECK(v == meet(targs[0], join(targs[1], targs[2])));

  std::vector<Partition> wrong = {args[0], args[1]};
  CHECK_THROWS_AS(eval(st, root, std::span<const Partition>(wrong)),
                  std::invalid_argument);
}

TEST_CASE("evaluation is monotone in the arguments") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto rt = random_term(3, 40, rng);
    const int n = 5;
    std::vector<Partition> lo(3), hi(3);
    for (int i = 0; i < 3; ++i) {
      lo[i] = random_partition(n, rng);
      hi[i] = join(lo[i], random_partition(n, rng));
    }
    CHECK(leq(eval(rt.term, std::span<const Partition>(lo)),
              eval(rt.term, std::span<const Partition>(hi))));
  }
}

TEST_CASE("occurrence counting explodes shared nodes") {
  TermStore st(2);
  int t = st.meet(st.var(0), st.var(1));
  CHECK(occurrences(st, st.var(0)) == 1);
  CHECK(occurrences(st, t) == 2);
  for (int i = 0; i < 100; ++i) t = st.join(t, t);
  CHECK(occurrences(st, t) == BigCount(2) << 100);
}

TEST_CASE("serialization round trip") {
  auto t = parse_term("(* x4 (+ x5 x1))", 5);
  CHECK(serialize_term(t) == "(* x4 (+ x5 x1))");
  CHECK(occurrences(t) == 3);
  CHECK(parse_term("  x3 ", 4).root() >= 0);
  CHECK(serialize_term(parse_term("x3", 4)) == "x3");
  CHECK_THROWS_AS(parse_term("(+ x1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("(+ x1 x2) x1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("(+ x1 x3)", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("(% x1 x2)", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("(+ x1 x2 x3)", 3), std::invalid_argument);

  // The motivating 15-leaf example.
  auto big = parse_term(
      "(* x4 (+ x5 (+ (* (+ (* x1 x8) (* x2 x3)) (+ (* x4 x5) (* x3 x6))) "
      "(+ (* x2 x8) (* (* x3 x4) x7)))))",
      8);
  CHECK(occurrences(big) == 15);
}

TEST_CASE("round-trip preserves evaluation") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto rt = random_term(4, 60, rng);
    auto back = parse_term(serialize_term(rt.term), 4);
    std::vector<Partition> args(4);
    for (auto& a : args) a = random_partition(6, rng);
    CHECK(eval(rt.term, std::span<const Partition>(args)) ==
          eval(back, std::span<const Partition>(args)));
  }
}

TEST_CASE("circle combinator recovers single pairs from cycle atoms") {
  // Exhaustive over cycle lengths 3..9 and all position pairs.
  for (int m = 3; m <= 9; ++m) {
    TermStore st(m);
    std::vector<int> edges(m);
    std::vector<Partition> args(m);
    for (int i = 0; i < m; ++i) {
      edges[i] = st.var(i);
      args[i] = Partition::atom(m, i + 1, i % m + 1 == m ? 1 : i + 2);
    }
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) {
        int t = circle_term(st, edges, u, v);
        CHECK(eval(st, t, std::span<const Partition>(args)) ==
              Partition::atom(m, u + 1, v + 1));
      }
  }
  TermStore st(3);
  std::vector<int> edges = {st.var(0), st.var(1), st.var(2)};
  CHECK_THROWS_AS(circle_term(st, edges, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(circle_term(st, edges, 0, 3), std::invalid_argument);
}

TEST_CASE("random terms: determinism, size, absorption avoidance") {
  Rng a(7), b(7);
  auto t1 = random_term(8, 1000, a);
  auto t2 = random_term(8, 1000, b);
  CHECK(serialize_term(t1.term) == serialize_term(t2.term));
  CHECK(occurrences(t1.term) == 1001);  // steps + 1 tree leaves
  CHECK(t1.log.size() == 1000);

  Rng c(8);
  auto t3 = random_term(8, 1000, c);
  CHECK(serialize_term(t3.term) != serialize_term(t1.term));

  // Scan construction logs: no accepted replacement may form the immediate
  // absorption pattern.
  Rng d(123);
  for (int trial = 0; trial < 100; ++trial) {
    for (auto policy : {LeafPolicy::Uniform, LeafPolicy::DepthWeighted}) {
      auto rt = random_term(8, 200, d, policy);
      for (const auto& s : rt.log) {
        bool bad = s.sibling_var >= 0 && s.parent_op >= 0 &&
                   s.parent_op != static_cast<int>(s.op) &&
                   (s.var_a == s.sibling_var || s.var_b == s.sibling_var);
        CHECK(!bad);
      }
    }
  }

  Rng e(1);
  auto tiny = random_term(8, 0, e);
  CHECK(occurrences(tiny.term) == 1);
  CHECK(serialize_term(tiny.term)[0] == 'x');
}
