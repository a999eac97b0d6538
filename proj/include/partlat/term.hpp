#ifndef PARTLAT_TERM_HPP
#define PARTLAT_TERM_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "partlat/bigint.hpp"
#include "partlat/rng.hpp"

namespace partlat {

enum class TermOp : std::uint8_t { Var, Meet, Join };

struct TermNode {
  TermOp op;
  std::int32_t a = 0;  // variable index for Var, else left child id
  std::int32_t b = 0;  // right child id
};

/// Hash-consed store of lattice terms over variables x1..xp. Structurally
/// equal subterms share one node, so recursively defined term families stay
/// linear in size even when their expanded trees are exponential. Children
/// always have smaller ids than parents, which makes bottom-up evaluation a
/// single forward sweep.
class TermStore {
 public:
  explicit TermStore(int arity);

  int arity() const { return arity_; }
  std::size_t size() const { return nodes_.size(); }
  const TermNode& node(int id) const { return nodes_[id]; }

  /// 0-based variable index.
  int var(int index);
  int meet(int left, int right) { return apply(TermOp::Meet, left, right); }
  int join(int left, int right) { return apply(TermOp::Join, left, right); }
  int apply(TermOp op, int left, int right);

  /// Meet (op=Meet) or join of a nonempty list.
  int combine(TermOp op, std::span<const int> ids);

 private:
  int arity_;
  std::vector<TermNode> nodes_;
  std::unordered_map<std::uint64_t, int> index_;
};

/// A root in a shared store.
class Term {
 public:
  Term() = default;
  Term(std::shared_ptr<const TermStore> store, int root)
      : store_(std::move(store)), root_(root) {}

  const TermStore& store() const { return *store_; }
  std::shared_ptr<const TermStore> store_ptr() const { return store_; }
  int root() const { return root_; }
  int arity() const { return store_->arity(); }
  bool empty() const { return store_ == nullptr; }

 private:
  std::shared_ptr<const TermStore> store_;
  int root_ = -1;
};

/// Evaluates several roots in one bottom-up sweep with shared memoization.
/// V needs meet(V,V), join(V,V) free functions; works for Partition and
/// PartitionTuple alike.
template <class V>
std::vector<V> eval_many(const TermStore& store, std::span<const int> roots,
                         std::span<const V> args) {
  if (static_cast<int>(args.size()) != store.arity())
    throw std::invalid_argument("term arity " + std::to_string(store.arity()) +
                                " but " + std::to_string(args.size()) +
                                " arguments given");
  int max_root = -1;
  for (int r : roots) {
    if (r < 0 || r >= static_cast<int>(store.size()))
      throw std::invalid_argument("term root out of range");
    max_root = std::max(max_root, r);
  }
  std::vector<char> need(max_root + 1, 0);
  for (int r : roots) need[r] = 1;
  for (int id = max_root; id >= 0; --id) {
    if (!need[id]) continue;
    const TermNode& nd = store.node(id);
    if (nd.op != TermOp::Var) {
      need[nd.a] = 1;
      need[nd.b] = 1;
    }
  }
  std::vector<V> val(max_root + 1);
  for (int id = 0; id <= max_root; ++id) {
    if (!need[id]) continue;
    const TermNode& nd = store.node(id);
    switch (nd.op) {
      case TermOp::Var:
        val[id] = args[nd.a];
        break;
      case TermOp::Meet:
        val[id] = meet(val[nd.a], val[nd.b]);
        break;
      case TermOp::Join:
        val[id] = join(val[nd.a], val[nd.b]);
        break;
    }
  }
  std::vector<V> out;
  out.reserve(roots.size());
  for (int r : roots) out.push_back(val[r]);
  return out;
}

template <class V>
V eval(const TermStore& store, int root, std::span<const V> args) {
  int roots[1] = {root};
  return eval_many<V>(store, roots, args)[0];
}

template <class V>
V eval(const Term& t, std::span<const V> args) {
  return eval(t.store(), t.root(), args);
}

/// Number of leaves of the fully expanded tree (big integer: shared nodes
/// multiply out).
BigCount occurrences(const TermStore& store, int root);
inline BigCount occurrences(const Term& t) {
  return occurrences(t.store(), t.root());
}

/// The two-arc meet around a cycle: (join of edges[u..v-1]) ∧ (join of
/// edges[v..], wrapping, ..edges[u-1]). edges[i] spans cycle positions
/// i -> i+1 mod size. Requires 0 <= u < v < edges.size().
int circle_term(TermStore& store, std::span<const int> edges, int u, int v);

/// S-expression text: "(* l r)" meet, "(+ l r)" join, variables "x1".."xp".
std::string serialize_term(const TermStore& store, int root);
inline std::string serialize_term(const Term& t) {
  return serialize_term(t.store(), t.root());
}
Term parse_term(std::string_view text, int arity);

enum class LeafPolicy { Uniform, DepthWeighted };

/// One accepted growth step: the leaf holding variable `leaf_var` (whose
/// parent applies `parent_op` with a sibling that is the bare variable
/// `sibling_var`, or -1) was replaced by (var_a `op` var_b).
struct GrowthStep {
  int leaf_var;
  int parent_op;    // -1 none, else TermOp as int
  int sibling_var;  // -1 unless the sibling is a bare variable
  TermOp op;
  int var_a, var_b;
};

struct RandomTermResult {
  Term term;
  std::vector<GrowthStep> log;
  std::uint64_t rejections = 0;
};

/// Grows a term from a random variable, one operation per step. Each step
/// replaces a leaf (chosen uniformly, or by a random root-to-leaf descent
/// for the depth-weighted policy, giving weight 2^-depth) with the meet or
/// join of two random variables. Replacements that an absorption law would
/// collapse on the spot -- parent op P with a bare-variable sibling x,
/// replacement (a Q b) with Q dual to P and x in {a,b} -- are redrawn.
RandomTermResult random_term(int arity, int steps, Rng& rng,
                             LeafPolicy policy = LeafPolicy::Uniform);

}  // namespace partlat

#endif
