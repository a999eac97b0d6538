#include "partlat/power.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "partlat/combinatorics.hpp"

namespace partlat {

namespace {

std::string count_text(const BigCount& x) {
  std::string s = x.str();
  return s.size() <= 15 ? s : sci(x);
}

constexpr long long kConstructionBudget = 5'000'000;

}  // namespace

Partition build_delta_hat(int n, const Partition& base,
                          const std::vector<int>& U, const Partition& kappa,
                          const std::vector<int>& W, const Partition& lambda) {
  if (base.size() != n)
    throw std::invalid_argument("base partition size mismatch");
  if (kappa.size() != static_cast<int>(U.size()) ||
      lambda.size() != static_cast<int>(W.size()))
    throw std::invalid_argument("pattern size does not match its vertex set");
  for (int u : U)
    for (int w : W)
      if (u == w) throw std::invalid_argument("U and W overlap");

  std::vector<int> parent(n + 1);
  for (int e = 0; e <= n; ++e) parent[e] = e;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::vector<int> rep(base.block_count(), 0);
  for (int e = 1; e <= n; ++e) {
    int b = base.block_of(e);
    if (rep[b] == 0)
      rep[b] = e;
    else
      unite(e, rep[b]);
  }
  auto add_pattern = [&](const Partition& pat, const std::vector<int>& verts) {
    std::vector<int> prep(pat.block_count(), 0);
    for (int i = 1; i <= pat.size(); ++i) {
      int b = pat.block_of(i);
      if (prep[b] == 0)
        prep[b] = verts[i - 1];
      else
        unite(verts[i - 1], prep[b]);
    }
  };
  add_pattern(kappa, U);
  add_pattern(lambda, W);

  std::vector<std::uint16_t> ids(n);
  for (int e = 1; e <= n; ++e) ids[e - 1] = static_cast<std::uint16_t>(find(e));
  return Partition::from_block_ids(std::move(ids));
}

std::vector<PartitionTuple> generator_tuples(const PowerGenerators& gen) {
  const int t = gen.shape.t;
  std::vector<PartitionTuple> out;
  out.emplace_back(gen.shape, std::vector<Partition>(t, gen.alpha));
  out.emplace_back(gen.shape, std::vector<Partition>(t, gen.beta));
  out.emplace_back(gen.shape, std::vector<Partition>(t, gen.gamma));
  out.emplace_back(gen.shape, gen.fourth);
  return out;
}

PowerGenerators build_four_generators(int n, long long t, bool allow_large) {
  PowerGenerators g;
  g.config = build_config(n);
  const ZadoriConfig& cfg = g.config;
  const int k = cfg.k;
  g.kind = PowerKind::FourGenerated;
  g.fourth_kind = FourthKind::Bridging;
  g.alpha = cfg.alpha;
  g.beta = cfg.beta;
  g.gamma = cfg.gamma;
  g.base_fourth = cfg.delta;
  g.full_exponent = m_of_n(n);

  for (int i = 1; i <= k - 1; ++i) g.plan.U.push_back(cfg.a(i));
  for (int i = 0; i <= k - 1; ++i) g.plan.W.push_back(cfg.b(i));

  const BigCount& m = g.full_exponent;
  BigCount want;
  if (t < 0) {
    want = m;
    if (n >= 15 && !allow_large && want > 1000) want = 1000;
  } else {
    if (t < 1) throw std::invalid_argument("exponent must be at least 1");
    want = t;
    if (want > m)
      throw std::invalid_argument("exponent " + count_text(want) +
                                  " exceeds the certified maximum " +
                                  count_text(m) +
                                  " for n=" + std::to_string(n));
  }
  if (want > kConstructionBudget)
    throw std::invalid_argument("materializing " + count_text(want) +
                                " coordinates exceeds the construction "
                                "budget; pick a smaller exponent");
  const long long tt = want.convert_to<long long>();

  auto mu = max_stirling(static_cast<int>(g.plan.U.size()));
  auto mw = max_stirling(static_cast<int>(g.plan.W.size()));
  if (mu.value > 2'000'000 || mw.value > 2'000'000)
    throw std::invalid_argument("pattern enumeration for n=" +
                                std::to_string(n) +
                                " exceeds the construction budget");
  g.plan.r_u = mu.argmax_rs.front();
  g.plan.r_w = mw.argmax_rs.front();
  auto gams = enumerate_r_block_partitions(static_cast<int>(g.plan.U.size()),
                                           g.plan.r_u);
  auto lams = enumerate_r_block_partitions(static_cast<int>(g.plan.W.size()),
                                           g.plan.r_w);
  g.plan.pairs.reserve(tt);
  g.fourth.reserve(tt);
  const long long ls = static_cast<long long>(lams.size());
  for (long long i = 0; i < tt; ++i) {
    const Partition& kap = gams[i / ls];
    const Partition& lam = lams[i % ls];
    g.plan.pairs.emplace_back(kap, lam);
    g.fourth.push_back(
        build_delta_hat(n, g.base_fourth, g.plan.U, kap, g.plan.W, lam));
  }
  g.shape = {n, static_cast<int>(tt)};
  return g;
}

PowerGenerators build_ordertype_generators(int n) {
  if (n < 7)
    throw std::invalid_argument("order-type construction needs n >= 7");
  PowerGenerators g;
  g.config = build_config(n);
  const ZadoriConfig& cfg = g.config;
  const int k = cfg.k;
  g.kind = PowerKind::OrderType112;
  g.fourth_kind = FourthKind::RowConfined;
  g.alpha = cfg.alpha;
  g.beta = cfg.beta;
  g.gamma = cfg.gamma;
  g.base_fourth = join(Partition::atom(n, cfg.a(0), cfg.a(k)),
                       Partition::atom(n, cfg.b(0), cfg.b(k - 1)));
  g.full_exponent = mhat_of_n(n);

  // Odd-index interior rungs: both endpoints stay clear of the vertices the
  // base fourth already links, and no two chosen vertices are row-adjacent.
  for (int i = 1; i <= k - 2; i += 2) {
    g.plan.U.push_back(cfg.a(i));
    g.plan.W.push_back(cfg.b(i));
  }
  const int r = static_cast<int>(g.plan.U.size());

  if (r == 2) {
    // Two patterns with equal block counts on two elements are equal, so
    // the antichain pairs all-of-U/none-of-W against none-of-U/all-of-W.
    g.plan.r_u = g.plan.r_w = 0;
    g.plan.pairs = {{Partition::top(2), Partition::bottom(2)},
                    {Partition::bottom(2), Partition::top(2)}};
  } else {
    auto ms = max_stirling(r);
    if (ms.value * ms.value > kConstructionBudget)
      throw std::invalid_argument("pattern enumeration for n=" +
                                  std::to_string(n) +
                                  " exceeds the construction budget");
    g.plan.r_u = g.plan.r_w = ms.argmax_rs.front();
    auto pats = enumerate_r_block_partitions(r, g.plan.r_u);
    for (const Partition& kap : pats)
      for (const Partition& lam : pats) g.plan.pairs.emplace_back(kap, lam);
  }
  if (BigCount(g.plan.pairs.size()) != g.full_exponent)
    throw std::logic_error("coordinate count mismatch");

  g.fourth.reserve(g.plan.pairs.size());
  for (const auto& [kap, lam] : g.plan.pairs)
    g.fourth.push_back(
        build_delta_hat(n, g.base_fourth, g.plan.U, kap, g.plan.W, lam));
  g.shape = {n, static_cast<int>(g.plan.pairs.size())};
  return g;
}

std::vector<int> zigzag_cycle(const ZadoriConfig& cfg) {
  std::vector<int> d;
  d.reserve(cfg.n);
  for (int i = 0; i < cfg.k; ++i) {
    d.push_back(cfg.a(i));
    d.push_back(cfg.b(i));
  }
  d.push_back(cfg.a(cfg.k));
  if (cfg.even) d.push_back(cfg.c());
  return d;
}

std::vector<int> build_edge_selectors(ZadoriTerms& zt,
                                      const Partition& alpha_meet_fourth) {
  TermStore& st = *zt.store;
  const ZadoriConfig& cfg = zt.config;
  const int guard = st.meet(st.var(0), st.var(3));
  const auto d = zigzag_cycle(cfg);

  std::vector<std::vector<int>> blocks(alpha_meet_fourth.block_count());
  for (int e = 1; e <= cfg.n; ++e)
    blocks[alpha_meet_fourth.block_of(e)].push_back(e);

  std::vector<int> out(2 * cfg.k);
  for (int p = 0; p < 2 * cfg.k; ++p) {
    const int u = d[p], v = d[p + 1];
    int term = zt.pair_term_at(u, v);
    for (int x : blocks[alpha_meet_fourth.block_of(u)])
      if (x != u) term = st.meet(term, st.join(guard, zt.pair_term_at(x, v)));
    for (int y : blocks[alpha_meet_fourth.block_of(v)])
      if (y != v) term = st.meet(term, st.join(zt.pair_term_at(u, y), guard));
    out[p] = term;
  }
  return out;
}

std::vector<int> build_pair_selectors(ZadoriTerms& zt,
                                      const std::vector<int>& edge_selectors) {
  TermStore& st = *zt.store;
  const ZadoriConfig& cfg = zt.config;
  const int n = cfg.n;
  const auto d = zigzag_cycle(cfg);

  std::vector<int> out(n);
  for (int q = 0; q < n; ++q) {
    const int qu = d[q], qv = d[(q + 1) % n];
    int term = zt.pair_term_at(qu, qv);
    for (int p = 0; p < 2 * cfg.k; ++p) {
      const int pu = d[p], pv = d[p + 1], sel = edge_selectors[p];
      term = st.meet(term, st.join(st.join(zt.pair_term_at(qu, pu), sel),
                                   zt.pair_term_at(pv, qv)));
      term = st.meet(term, st.join(st.join(zt.pair_term_at(qu, pv), sel),
                                   zt.pair_term_at(pu, qv)));
    }
    out[q] = term;
  }
  return out;
}

Certificate verify_generators(const PowerGenerators& gen,
                              const CheckObserver& observer) {
  Certificate cert;
  auto rec = [&](CheckRecord r) {
    if (observer) observer(r);
    cert.record(std::move(r));
  };
  const int n = gen.shape.n, t = gen.shape.t, k = gen.config.k;
  const ZadoriConfig& cfg = gen.config;

  std::vector<Partition> ad(t);
  for (int i = 0; i < t; ++i) ad[i] = meet(gen.alpha, gen.fourth[i]);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      bool ok = !leq(ad[i], ad[j]) && !leq(ad[j], ad[i]);
      rec({"fourth_antichain",
           {i + 1, j + 1},
           ok,
           ok ? "" : "comparable: " + ad[i].to_canonical() + " vs " +
                         ad[j].to_canonical()});
    }

  ZadoriTerms zt = build_zadori_terms(n, gen.fourth_kind);
  TermStore& st = *zt.store;

  if (gen.kind == PowerKind::OrderType112) {
    const Partition low = Partition::atom(n, cfg.a(0), cfg.b(0));
    const Partition high = Partition::atom(n, cfg.a(k), cfg.b(k - 1));
    const std::vector<int> entry_roots = {zt.entry_low, zt.entry_high};
    auto entries_of = [&](const Partition& f) {
      const std::vector<Partition> args = {gen.alpha, gen.beta, gen.gamma, f};
      return eval_many<Partition>(st, entry_roots,
                                  std::span<const Partition>(args));
    };
    auto base_entries = entries_of(gen.base_fourth);
    rec({"entry_low_base", {}, base_entries[0] == low,
         base_entries[0].to_canonical()});
    rec({"entry_high_base", {}, base_entries[1] == high,
         base_entries[1].to_canonical()});
    for (int j = 0; j < t; ++j) {
      auto e = entries_of(gen.fourth[j]);
      rec({"entry_low_value", {j + 1}, e[0] == low, e[0].to_canonical()});
      rec({"entry_high_value", {j + 1}, e[1] == high, e[1].to_canonical()});
    }

    auto tuples = generator_tuples(gen);
    int comparable = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (leq(tuples[a], tuples[b]) || leq(tuples[b], tuples[a]))
          ++comparable;
    bool ok = comparable == 1 && leq(tuples[3], tuples[0]);
    rec({"order_type",
         {},
         ok,
         ok ? "" : "comparable pairs: " + std::to_string(comparable)});
  }

  const auto d = zigzag_cycle(cfg);
  const int ne = 2 * k;  // straight edges

  std::vector<int> roots;
  roots.reserve(static_cast<std::size_t>(t) * (ne + n));
  for (int j = 0; j < t; ++j) {
    auto es = build_edge_selectors(zt, ad[j]);
    auto ps = build_pair_selectors(zt, es);
    roots.insert(roots.end(), es.begin(), es.end());
    roots.insert(roots.end(), ps.begin(), ps.end());
  }
  const Partition bot = Partition::bottom(n);
  std::vector<Partition> edge_atom(ne), cycle_atom(n);
  for (int p = 0; p < ne; ++p)
    edge_atom[p] = Partition::atom(n, d[p], d[p + 1]);
  for (int q = 0; q < n; ++q)
    cycle_atom[q] = Partition::atom(n, d[q], d[(q + 1) % n]);

  for (int i = 0; i < t; ++i) {
    const std::vector<Partition> args = {gen.alpha, gen.beta, gen.gamma,
                                         gen.fourth[i]};
    auto vals =
        eval_many<Partition>(st, roots, std::span<const Partition>(args));
    auto edge_val = [&](int j, int p) -> const Partition& {
      return vals[j * (ne + n) + p];
    };
    auto pair_val = [&](int j, int q) -> const Partition& {
      return vals[j * (ne + n) + ne + q];
    };

    for (int p = 0; p < ne; ++p) {
      bool ok = edge_val(i, p) == edge_atom[p];
      rec({"edge_diag",
           {i + 1, p},
           ok,
           ok ? "" : edge_val(i, p).to_canonical()});
    }
    for (int j = 0; j < t; ++j) {
      if (j == i) continue;
      int witness = -1;
      for (int p = 0; p < ne; ++p)
        if (edge_val(j, p) == bot) {
          witness = p;
          break;
        }
      rec({"separation",
           {i + 1, j + 1},
           witness >= 0,
           witness >= 0 ? "p=" + std::to_string(witness)
                        : "no vanishing edge"});
    }
    for (int j = 0; j < t; ++j) {
      int bad = -1;
      std::string detail;
      for (int q = 0; q < n; ++q) {
        const Partition& want = i == j ? cycle_atom[q] : bot;
        if (!(pair_val(j, q) == want)) {
          bad = q;
          detail = "q=" + std::to_string(q) + " got " +
                   pair_val(j, q).to_canonical();
          break;
        }
      }
      rec({"pair_matrix", {i + 1, j + 1}, bad < 0, detail});
    }
  }
  return cert;
}

Certificate verify_four_generation(int n, long long t,
                                   const CheckObserver& observer) {
  return verify_generators(build_four_generators(n, t), observer);
}

Certificate verify_ordertype_generation(int n, const CheckObserver& observer) {
  return verify_generators(build_ordertype_generators(n), observer);
}

}  // namespace partlat
