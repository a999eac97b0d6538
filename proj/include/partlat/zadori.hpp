#ifndef PARTLAT_ZADORI_HPP
#define PARTLAT_ZADORI_HPP

#include <map>
#include <memory>
#include <vector>

#include "partlat/partition.hpp"
#include "partlat/term.hpp"

namespace partlat {

/// The four-colored ladder graph on {1..n} whose color classes generate
/// Equ(n). Vertices: a_i -> i+1 (0 <= i <= k), b_i -> k+2+i
/// (0 <= i <= k-1), and for even n the extra vertex c -> n, where
/// k = floor((n-1)/2).
///
///   alpha: the two horizontal rows a_0..a_k and b_0..b_{k-1};
///   beta:  rungs (a_i, b_i), plus (b_0, c) for even n;
///   gamma: rungs (a_{i+1}, b_i), plus (b_1, c) for even n;
///   delta: the two end rungs (a_0, b_0) and (a_k, b_{k-1}).
///
/// For even n the gamma edge at c is attached to b_1 (not b_2): with the
/// attachment at b_2 the two c-entry terms below evaluate to the empty
/// relation instead of the required atoms, for every k >= 3. The b_1
/// attachment is machine-verified by verify_ladder and the closure oracle.
struct ZadoriConfig {
  int n = 0;
  int k = 0;
  bool even = false;
  Partition alpha, beta, gamma, delta;

  int a(int i) const { return i + 1; }
  int b(int i) const { return k + 2 + i; }
  int c() const { return n; }  // even n only
};

ZadoriConfig build_config(int n);  // n >= 5

std::vector<Partition> config_quadruple(const ZadoriConfig& cfg);

/// Flavor of the fourth generator the term tables are built for; it decides
/// the two "entry" subterms through which the fourth variable is used.
enum class FourthKind {
  /// Fourth partition meets beta/gamma directly in the two end-rung atoms
  /// (the plain delta and its antichain extensions): entries x2*x4, x3*x4.
  Bridging,
  /// Fourth partition lies below alpha (row-confined blocks), so the plain
  /// meets collapse; entries x2*(x3+x4) and x3*(x2+x4) recover the end
  /// rungs through the opposite rung color.
  RowConfined,
};

/// Quaternary terms over (x1,x2,x3,x4) = (alpha, beta, gamma, fourth) whose
/// evaluations at the configuration are prescribed single-pair relations.
struct ZadoriTerms {
  ZadoriConfig config;
  std::shared_ptr<TermStore> store;
  int entry_low = -1;   // evaluates to equ(a_0, b_0)
  int entry_high = -1;  // evaluates to equ(a_k, b_{k-1})
  /// Hamiltonian cycle of vertices whose consecutive pairs all carry edge
  /// terms; pair terms for arbitrary pairs are two-arc meets around it.
  std::vector<int> cycle;
  std::map<std::pair<int, int>, int> edge_term;  // key: minmax vertex pair
  /// Term id for every unordered pair {u,v}, u < v, via pair_index; the
  /// diagonal convention f(u,u) = x1*x2*x3*x4 is handled by pair_term_at.
  std::vector<int> pair_term;
  int bottom_term = -1;  // meet of the four variables

  int pair_index(int u, int v) const;
  int pair_term_at(int u, int v) const;  // u == v allowed
};

ZadoriTerms build_zadori_terms(int n, FourthKind kind = FourthKind::Bridging);

struct CheckRecord {
  std::string name;
  std::vector<long long> indices;
  bool pass = true;
  std::string detail;
};

struct Certificate {
  bool valid = true;
  long long checks_run = 0;
  std::vector<CheckRecord> failures;

  void record(CheckRecord rec) {
    ++checks_run;
    if (!rec.pass) {
      valid = false;
      failures.push_back(std::move(rec));
    }
  }
};

/// Evaluates the full pair-term table at (alpha, beta, gamma, delta) and
/// checks that every pair {u,v} yields exactly the single-pair relation
/// equ(u,v); since Equ(n) is atomistic, full atom coverage certifies that
/// the quadruple generates Equ(n). Also checks the two end-rung meets and
/// the structural rule that x4 is reachable only through the two entry
/// subterms.
Certificate verify_ladder(int n);

/// True iff x4 occurs in root's expansion only inside the entry_low /
/// entry_high subterms.
bool fourth_only_via_entries(const ZadoriTerms& terms, int root);

}  // namespace partlat

#endif
