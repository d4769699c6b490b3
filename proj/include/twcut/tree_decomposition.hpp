#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twcut/graph.hpp"

namespace twcut {

// Rooted tree of bags. Tree edges are kept undirected; the orientation is
// derived from `root` on demand, so a malformed edge list can still be
// represented and reported by validate().
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;       // each sorted ascending
  std::vector<std::pair<int, int>> edges;   // undirected node pairs
  int root = 0;

  int node_count() const { return static_cast<int>(bags.size()); }
  int width() const;  // max bag size - 1 (-1 for an empty decomposition)

  std::vector<std::vector<int>> adjacency() const;
  // parent[] with parent[root] == -1, or nullopt when the edges do not form
  // a tree spanning all nodes.
  std::optional<std::vector<int>> orient() const;
};

struct Violation {
  enum class Kind { NotATree, NodeNotCovered, EdgeNotCovered, CoherenceBroken };
  Kind kind;
  int a = -1;  // witness vertex (or arc source)
  int b = -1;  // arc target for EdgeNotCovered
  std::string message() const;
};

// Checks tree well-formedness plus the three decomposition properties, in
// that order; reports the first violation found.
std::optional<Violation> validate(const WeightedDigraph& g, const TreeDecomposition& d);

// Repeatedly merges any child whose bag is contained in its parent's bag
// (the child's children reattach to the parent). The result of shrinking a
// valid decomposition of an n-vertex graph has at most n+1 nodes.
TreeDecomposition shrink(const TreeDecomposition& d);

// PACE 2017 .td format: "s td <#bags> <width+1> <n>", bag lines
// "b <id> <vertices...>", then tree edge lines "<i> <j>"; 'c' comments
// allowed anywhere. The decomposition is rooted at the lowest-numbered bag;
// callers may re-root by assigning `root`.
TreeDecomposition parse_td(std::istream& in);

// Fallback when no decomposition is supplied: bags from a min-degree
// elimination ordering. Valid but with no width guarantee; shrunk before
// being returned.
TreeDecomposition greedy_decomposition(const WeightedDigraph& g);

}  // namespace twcut
