#include "twcut/nice_decomposition.hpp"

#include <algorithm>
#include <cassert>

namespace twcut {

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
  return w;
}

std::vector<int> NiceTreeDecomposition::post_order() const {
  std::vector<int> order;
  order.reserve(nodes.size());
  std::vector<std::pair<int, int>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [i, next_child] = stack.back();
    if (next_child < static_cast<int>(nodes[i].children.size())) {
      int c = nodes[i].children[next_child++];
      stack.emplace_back(c, 0);
    } else {
      order.push_back(i);
      stack.pop_back();
    }
  }
  return order;
}

TreeDecomposition NiceTreeDecomposition::as_tree_decomposition() const {
  TreeDecomposition d;
  d.bags.reserve(nodes.size());
  for (const auto& node : nodes) d.bags.push_back(node.bag);
  for (int i = 0; i < node_count(); ++i)
    for (int c : nodes[i].children) d.edges.emplace_back(i, c);
  d.root = root;
  return d;
}

namespace {

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Raise every bag to exactly width+1 vertices by pulling missing vertices
// from neighboring bags. Pulling from a neighbor keeps every vertex's node
// set connected, so validity is preserved; afterwards each tree edge swaps
// equally many vertices in both directions.
void pad_bags(std::vector<std::vector<int>>& bags,
              const std::vector<std::pair<int, int>>& edges, std::size_t target) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : edges) {
      for (auto [into, from] : {std::pair{a, b}, std::pair{b, a}}) {
        if (bags[into].size() >= target) continue;
        std::vector<int> missing = sorted_difference(bags[from], bags[into]);
        std::size_t take = std::min(missing.size(), target - bags[into].size());
        if (take == 0) continue;
        bags[into].insert(bags[into].end(), missing.begin(), missing.begin() + take);
        std::sort(bags[into].begin(), bags[into].end());
        changed = true;
      }
    }
  }
}

}  // namespace

NiceTreeDecomposition nicify(const TreeDecomposition& d, const WeightedDigraph& g) {
  const int n = g.vertex_count();
  if (d.node_count() > 4 * (n + 1))
    throw NotSmallError("decomposition has " + std::to_string(d.node_count()) +
                        " nodes, more than 4(n+1); shrink it first");
  auto parent_opt = d.orient();
  if (!parent_opt) throw std::invalid_argument("nicify: decomposition is not a tree");
  const std::vector<int>& parent = *parent_opt;

  std::vector<std::vector<int>> bags = d.bags;
  std::size_t max_bag = 0;
  for (auto& bag : bags) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    max_bag = std::max(max_bag, bag.size());
  }
  if (max_bag > 0) pad_bags(bags, d.edges, max_bag);

  std::vector<std::vector<int>> children(d.node_count());
  for (int i = 0; i < d.node_count(); ++i)
    if (parent[i] != -1) children[parent[i]].push_back(i);

  NiceTreeDecomposition nd;
  auto add_node = [&](NodeKind kind, std::vector<int> bag, int special,
                      std::vector<int> kids) {
    int id = nd.node_count();
    nd.nodes.push_back(NiceNode{kind, std::move(bag), special, std::move(kids), -1, {}});
    return id;
  };

  // converted_top[i]: nice node carrying bag[i] that represents old node i.
  std::vector<int> converted_top(d.node_count(), -1);
  std::vector<std::pair<int, int>> stack{{d.root, 0}};
  while (!stack.empty()) {
    const int u = stack.back().first;
    if (stack.back().second < static_cast<int>(children[u].size())) {
      int c = children[u][stack.back().second++];
      stack.emplace_back(c, 0);
      continue;
    }
    stack.pop_back();

    std::vector<int> operand_tops;
    for (int c : children[u]) {
      int top = converted_top[c];
      std::vector<int> current = bags[c];
      for (int v : sorted_difference(bags[c], bags[u])) {
        current.erase(std::find(current.begin(), current.end(), v));
        top = add_node(NodeKind::Forget, current, v, {top});
      }
      for (int v : sorted_difference(bags[u], bags[c])) {
        current.insert(std::lower_bound(current.begin(), current.end(), v), v);
        top = add_node(NodeKind::Introduce, current, v, {top});
      }
      operand_tops.push_back(top);
    }

    if (operand_tops.empty()) {
      converted_top[u] = add_node(NodeKind::Leaf, bags[u], -1, {});
    } else if (operand_tops.size() == 1) {
      converted_top[u] = operand_tops[0];  // chain top already carries bags[u]
    } else {
      int acc = operand_tops[0];
      for (std::size_t i = 1; i < operand_tops.size(); ++i)
        acc = add_node(NodeKind::Join, bags[u], -1, {acc, operand_tops[i]});
      converted_top[u] = acc;
    }
  }
  nd.root = converted_top[d.root];
  for (int i = 0; i < nd.node_count(); ++i)
    for (int c : nd.nodes[i].children) nd.nodes[c].parent = i;
  annotate_forgotten(nd);
  return nd;
}

void annotate_forgotten(NiceTreeDecomposition& nd) {
  for (int i : nd.post_order()) {
    NiceNode& node = nd.nodes[i];
    switch (node.kind) {
      case NodeKind::Leaf:
        node.forgotten.clear();
        break;
      case NodeKind::Introduce:
        node.forgotten = nd.nodes[node.children[0]].forgotten;
        break;
      case NodeKind::Forget: {
        const auto& child = nd.nodes[node.children[0]].forgotten;
        node.forgotten.clear();
        node.forgotten.reserve(child.size() + 1);
        std::merge(child.begin(), child.end(), &node.special_vertex,
                   &node.special_vertex + 1, std::back_inserter(node.forgotten));
        break;
      }
      case NodeKind::Join: {
        const auto& left = nd.nodes[node.children[0]].forgotten;
        const auto& right = nd.nodes[node.children[1]].forgotten;
        std::vector<int> shared;
        std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                              std::back_inserter(shared));
        if (!shared.empty())
          throw CoherenceError("vertex " + std::to_string(shared.front() + 1) +
                               " forgotten in both branches of a join");
        node.forgotten.clear();
        node.forgotten.reserve(left.size() + right.size());
        std::merge(left.begin(), left.end(), right.begin(), right.end(),
                   std::back_inserter(node.forgotten));
        break;
      }
    }
  }
}

}  // namespace twcut
