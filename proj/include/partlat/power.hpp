#ifndef PARTLAT_POWER_HPP
#define PARTLAT_POWER_HPP

#include <functional>
#include <utility>
#include <vector>

#include "partlat/bigint.hpp"
#include "partlat/tuple.hpp"
#include "partlat/zadori.hpp"

namespace partlat {

/// Which direct-power construction a generator family follows.
enum class PowerKind {
  /// Four-element generating families of Part(n)^t: the fourth generator of
  /// each coordinate bridges the two ladder rows through the end rungs and
  /// the per-coordinate augmentations form an antichain.
  FourGenerated,
  /// Generating families of order type 1+1+2: every fourth generator lies
  /// below alpha, so the quadruple has exactly one comparable pair.
  OrderType112,
};

/// Per-coordinate antichain recipe: each coordinate augments the base
/// fourth partition by one block pattern on U (top-row vertices) and one on
/// W (bottom-row vertices).
struct AntichainPlan {
  std::vector<int> U, W;  // vertex labels, ascending
  /// Block counts of the patterns; 0 means mixed (the degenerate
  /// two-coordinate antichain of the order-type construction).
  int r_u = 1, r_w = 1;
  /// (kappa, lambda) per coordinate; kappa partitions {1..|U|} with element
  /// i standing for vertex U[i-1], lambda likewise for W.
  std::vector<std::pair<Partition, Partition>> pairs;
};

/// Smallest equivalence containing base, kappa (transported onto U) and
/// lambda (transported onto W). U and W must be disjoint, and the patterns
/// must have exactly |U| resp. |W| elements.
Partition build_delta_hat(int n, const Partition& base,
                          const std::vector<int>& U, const Partition& kappa,
                          const std::vector<int>& W, const Partition& lambda);

struct PowerGenerators {
  LatticeShape shape;  // Part(n)^t
  PowerKind kind = PowerKind::FourGenerated;
  FourthKind fourth_kind = FourthKind::Bridging;
  ZadoriConfig config;
  AntichainPlan plan;
  Partition alpha, beta, gamma;   // identical in every coordinate
  Partition base_fourth;          // the fourth partition before augmentation
  std::vector<Partition> fourth;  // fourth generator, per coordinate
  BigCount full_exponent;         // largest certified exponent for this n
};

/// The four generator tuples: constant alpha, beta, gamma vectors plus the
/// coordinate-dependent fourth vector.
std::vector<PartitionTuple> generator_tuples(const PowerGenerators& gen);

/// Four-element generating family for Part(n)^t, n >= 5. t defaults to the
/// full certified exponent m(n); for n >= 15 the default is capped at 1000
/// coordinates unless allow_large is set. Asking for t above m(n) is an
/// error whose message reports the bound.
PowerGenerators build_four_generators(int n, long long t = -1,
                                      bool allow_large = false);

/// Order-type-1+1+2 generating family for Part(n)^t with the full certified
/// exponent t = mhat(n); requires n >= 7.
PowerGenerators build_ordertype_generators(int n);

/// The closed walk d_0..d_{n-1} zigzagging between the two rows:
/// d_{2i} = a_i, d_{2i+1} = b_i, with c appended for even n. Edges
/// p in [0, 2k) are the "straight" row-crossing ones; the remaining edges
/// merely close the cycle.
std::vector<int> zigzag_cycle(const ZadoriConfig& cfg);

/// One term per straight edge p: the pair term f(d_p, d_{p+1}) met with a
/// guarded pair term for every vertex that shares an (alpha meet fourth)
/// block with an endpoint; the guard is the meet of variables 1 and 4. At
/// its own coordinate each selector evaluates to the edge atom; for any
/// other coordinate at least one selector vanishes, because the
/// augmentation patterns form an antichain.
std::vector<int> build_edge_selectors(ZadoriTerms& zt,
                                      const Partition& alpha_meet_fourth);

/// One term per cycle position q (edge d_q -- d_{q+1 mod n}): a meet of
/// three-way joins over all straight edges, in both orientations. At its
/// own coordinate position q evaluates to the edge atom and at every other
/// coordinate to bottom; joining such single-coordinate atom vectors along
/// cycle arcs yields every per-coordinate atom vector, hence generation of
/// the whole direct power.
std::vector<int> build_pair_selectors(ZadoriTerms& zt,
                                      const std::vector<int>& edge_selectors);

using CheckObserver = std::function<void(const CheckRecord&)>;

/// Machine certificate for a generator family. Coordinates are reported
/// 1-based, cycle positions 0-based. Checks:
///   - fourth_antichain {i,j}: alpha meet fourth is incomparable between
///     coordinates i < j;
///   - edge_diag {j,p}: edge selector p of coordinate j evaluates there to
///     the straight-edge atom;
///   - separation {i,j}: some edge selector of coordinate j vanishes at
///     coordinate i != j (the passing record's detail names a witness p);
///   - pair_matrix {i,j}: the pair selectors of coordinate j evaluate at
///     coordinate i to the edge atoms when i = j and to bottom otherwise.
/// For OrderType112 additionally: entry_low/high_base and per-coordinate
/// entry_low/high_value checks (the substituted entry terms evaluate to the
/// end-rung atoms) and the order_type check (exactly one comparable pair
/// among the four tuples, the fourth below alpha).
Certificate verify_generators(const PowerGenerators& gen,
                              const CheckObserver& observer = nullptr);

/// build_four_generators followed by verify_generators.
Certificate verify_four_generation(int n, long long t = -1,
                                   const CheckObserver& observer = nullptr);

/// build_ordertype_generators followed by verify_generators.
Certificate verify_ordertype_generation(
    int n, const CheckObserver& observer = nullptr);

}  // namespace partlat

#endif
