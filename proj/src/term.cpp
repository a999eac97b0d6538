#include "partlat/term.hpp"

#include <algorithm>
#include <charconv>

namespace partlat {

namespace {

std::uint64_t node_key(TermOp op, int a, int b) {
  return (static_cast<std::uint64_t>(op) << 60) |
         (static_cast<std::uint64_t>(a) << 30) |
         static_cast<std::uint64_t>(b);
}

}  // namespace

TermStore::TermStore(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("term arity must be positive");
}

int TermStore::var(int index) {
  if (index < 0 || index >= arity_)
    throw std::invalid_argument("variable index " + std::to_string(index + 1) +
                                " out of range 1.." + std::to_string(arity_));
  return apply(TermOp::Var, index, 0);
}

int TermStore::apply(TermOp op, int left, int right) {
  if (op != TermOp::Var) {
    if (left < 0 || right < 0 || left >= static_cast<int>(nodes_.size()) ||
        right >= static_cast<int>(nodes_.size()))
      throw std::invalid_argument("term child id out of range");
  }
  auto [it, inserted] =
      index_.try_emplace(node_key(op, left, right),
                         static_cast<int>(nodes_.size()));
  if (inserted)
    nodes_.push_back({op, static_cast<std::int32_t>(left),
                      static_cast<std::int32_t>(right)});
  return it->second;
}

int TermStore::combine(TermOp op, std::span<const int> ids) {
  if (ids.empty()) throw std::invalid_argument("combine of empty list");
  int acc = ids[0];
  for (std::size_t i = 1; i < ids.size(); ++i) acc = apply(op, acc, ids[i]);
  return acc;
}

BigCount occurrences(const TermStore& store, int root) {
  if (root < 0 || root >= static_cast<int>(store.size()))
    throw std::invalid_argument("term root out of range");
  std::vector<BigCount> leaves(root + 1);
  for (int id = 0; id <= root; ++id) {
    const TermNode& nd = store.node(id);
    leaves[id] =
        nd.op == TermOp::Var ? BigCount(1) : leaves[nd.a] + leaves[nd.b];
  }
  return leaves[root];
}

int circle_term(TermStore& store, std::span<const int> edges, int u, int v) {
  const int m = static_cast<int>(edges.size());
  if (!(0 <= u && u < v && v < m))
    throw std::invalid_argument("circle positions need 0 <= u < v < size");
  int forward = edges[u];
  for (int i = u + 1; i < v; ++i) forward = store.join(forward, edges[i]);
  int backward = edges[v];
  for (int i = v + 1; i < v + m - (v - u); ++i)
    backward = store.join(backward, edges[i % m]);
  return store.meet(forward, backward);
}

std::string serialize_term(const TermStore& store, int root) {
  // Iterative tree expansion; DAG sharing is flattened into text.
  std::string out;
  struct Frame {
    int id;
    int stage;
  };
  std::vector<Frame> stack{{root, 0}};
  while (!stack.empty()) {
    auto [id, stage] = stack.back();
    stack.pop_back();
    const TermNode& nd = store.node(id);
    if (nd.op == TermOp::Var) {
      out += 'x';
      out += std::to_string(nd.a + 1);
      continue;
    }
    switch (stage) {
      case 0:
        out += '(';
        out += nd.op == TermOp::Meet ? '*' : '+';
        out += ' ';
        stack.push_back({id, 1});
        stack.push_back({nd.a, 0});
        break;
      case 1:
        out += ' ';
        stack.push_back({id, 2});
        stack.push_back({nd.b, 0});
        break;
      case 2:
        out += ')';
        break;
    }
  }
  return out;
}

Term parse_term(std::string_view text, int arity) {
  auto store = std::make_shared<TermStore>(arity);
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("term parse error at offset " +
                                std::to_string(i) + ": " + what);
  };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                               text[i] == '\n' || text[i] == '\r'))
      ++i;
  };
  // Stack of open operator applications and their collected children.
  struct Open {
    TermOp op;
    std::vector<int> children;
  };
  std::vector<Open> open;
  int result = -1;
  auto deliver = [&](int id) {
    if (open.empty()) {
      if (result >= 0) fail("trailing content after complete term");
      result = id;
    } else {
      open.back().children.push_back(id);
    }
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    char ch = text[i];
    if (ch == '(') {
      ++i;
      skip_ws();
      if (i >= text.size() || (text[i] != '*' && text[i] != '+'))
        fail("expected '*' or '+' after '('");
      open.push_back({text[i] == '*' ? TermOp::Meet : TermOp::Join, {}});
      ++i;
    } else if (ch == ')') {
      if (open.empty()) fail("unmatched ')'");
      if (open.back().children.size() != 2)
        fail("operator needs exactly 2 operands, got " +
             std::to_string(open.back().children.size()));
      int id = store->apply(open.back().op, open.back().children[0],
                            open.back().children[1]);
      open.pop_back();
      ++i;
      deliver(id);
    } else if (ch == 'x') {
      ++i;
      int idx = 0;
      auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), idx);
      if (ec != std::errc()) fail("expected variable index after 'x'");
      i = p - text.data();
      if (idx < 1 || idx > arity)
        fail("variable x" + std::to_string(idx) + " out of range 1.." +
             std::to_string(arity));
      deliver(store->var(idx - 1));
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  if (!open.empty()) fail("unbalanced '('");
  if (result < 0) fail("empty input");
  return Term(std::move(store), result);
}

RandomTermResult random_term(int arity, int steps, Rng& rng,
                             LeafPolicy policy) {
  if (arity < 2) throw std::invalid_argument("random term needs arity >= 2");
  if (steps < 0) throw std::invalid_argument("negative step count");

  // Growth tree; leaves are Var nodes, replacement mutates in place.
  struct TreeNode {
    TermOp op;
    int parent;
    int a = -1, b = -1;  // children for Meet/Join, a = var index for Var
  };
  std::vector<TreeNode> tree;
  tree.push_back({TermOp::Var, -1, static_cast<int>(rng.below(arity)), -1});
  std::vector<int> leaves{0};  // node ids of current leaves

  RandomTermResult res;
  res.log.reserve(steps);
  for (int step = 0; step < steps; ++step) {
    int leaf;
    if (policy == LeafPolicy::Uniform) {
      leaf = leaves[rng.below(leaves.size())];
    } else {
      // Random root-to-leaf descent: leaf probability 2^-depth.
      int at = 0;
      while (tree[at].op != TermOp::Var)
        at = rng.below(2) ? tree[at].b : tree[at].a;
      leaf = at;
    }

    int parent = tree[leaf].parent;
    int parent_op = parent < 0 ? -1 : static_cast<int>(tree[parent].op);
    int sibling_var = -1;
    if (parent >= 0) {
      int sib = tree[parent].a == leaf ? tree[parent].b : tree[parent].a;
      if (tree[sib].op == TermOp::Var) sibling_var = tree[sib].a;
    }

    TermOp op;
    int va, vb;
    while (true) {
      op = rng.below(2) ? TermOp::Join : TermOp::Meet;
      va = static_cast<int>(rng.below(arity));
      vb = static_cast<int>(rng.below(arity));
      bool absorbs = sibling_var >= 0 &&
                     parent_op != static_cast<int>(op) &&
                     (va == sibling_var || vb == sibling_var);
      if (!absorbs) break;
      ++res.rejections;
    }
    res.log.push_back({tree[leaf].a, parent_op, sibling_var, op, va, vb});

    int ca = static_cast<int>(tree.size());
    tree.push_back({TermOp::Var, leaf, va, -1});
    int cb = static_cast<int>(tree.size());
    tree.push_back({TermOp::Var, leaf, vb, -1});
    tree[leaf] = {op, parent, ca, cb};

    auto it = std::find(leaves.begin(), leaves.end(), leaf);
    *it = ca;
    leaves.push_back(cb);
  }

  // Hash-cons the grown tree. Children were created after their parent was
  // converted from a leaf, so a reverse sweep sees children first.
  auto store = std::make_shared<TermStore>(arity);
  std::vector<int> mapped(tree.size(), -1);
  for (int id = static_cast<int>(tree.size()) - 1; id >= 0; --id) {
    const TreeNode& nd = tree[id];
    mapped[id] = nd.op == TermOp::Var
                     ? store->var(nd.a)
                     : store->apply(nd.op, mapped[nd.a], mapped[nd.b]);
  }
  res.term = Term(std::move(store), mapped[0]);
  return res;
}

}  // namespace partlat
