#pragma once

#include <stdexcept>
#include <vector>

#include "twcut/tree_decomposition.hpp"

namespace twcut {

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NodeKind kind = NodeKind::Leaf;
  std::vector<int> bag;        // ascending; bit i of a subset mask = bag[i]
  int special_vertex = -1;     // the introduced / forgotten vertex
  std::vector<int> children;   // 0, 1 or 2 entries
  int parent = -1;
  std::vector<int> forgotten;  // F_i: vertices forgotten below, ascending
};

struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int width() const;
  // |Y_i| = |X_i| + |F_i|: vertices in bags at or below node i.
  int subtree_vertex_count(int i) const {
    return static_cast<int>(nodes[i].bag.size() + nodes[i].forgotten.size());
  }
  // Children before parents; iterative, safe for deep trees.
  std::vector<int> post_order() const;

  TreeDecomposition as_tree_decomposition() const;
};

class NotSmallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CoherenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Converts a valid, small (<= 4(n+1) nodes) decomposition into a nice one of
// the same width with at most 4n nodes when the input is shrunk. Bags are
// first padded to width+1 from neighboring bags, which caps every
// child-to-parent chain at one forget plus one introduce per padded swap and
// keeps the total introduce count at most the total forget count (<= n).
// Multi-child nodes are binarized into join chains over the parent bag; leaf
// bags are kept whole and the root bag stays on top. F_i annotations are
// populated on the result.
NiceTreeDecomposition nicify(const TreeDecomposition& d, const WeightedDigraph& g);

// Recomputes every node's forgotten set bottom-up. Throws CoherenceError if
// the two branches of a join forgot overlapping vertex sets.
void annotate_forgotten(NiceTreeDecomposition& nd);

}  // namespace twcut
