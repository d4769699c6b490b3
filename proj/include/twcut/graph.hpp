#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twcut/rational.hpp"

namespace twcut {

struct Arc {
  int source = 0;
  int target = 0;
  Rational weight;
};

enum class EdgeMode { Directed, Undirected };

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Weighted digraph on vertices 0..n-1 with O(1) arc-weight lookup via a
// dense index matrix (O(n^2) memory). Parallel arcs are merged by weight
// summation and self-loops dropped at construction; a cut never sees either.
// Immutable once built, safe to share across threads.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  WeightedDigraph(int n, const std::vector<Arc>& arcs);

  int vertex_count() const { return n_; }
  // Merged arcs (one per ordered vertex pair that appeared in the input).
  const std::vector<Arc>& arcs() const { return arcs_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int dropped_self_loops() const { return dropped_self_loops_; }

  // Total weight of arcs u -> v; a shared zero when there is no such arc.
  const Rational& weight(int u, int v) const {
    return pool_[index_[static_cast<std::size_t>(u) * n_ + v]];
  }
  bool has_arc(int u, int v) const {
    return index_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  // (sum of w(v -> t), sum of w(t -> v)) over t in targets.
  std::pair<Rational, Rational> incident_weight_sums(int v, std::span<const int> targets) const;

  // alpha(dS): total weight of arcs with source in S and target outside S.
  Rational cut_weight(const std::vector<bool>& in_set) const;
  Rational cut_weight(std::span<const int> vertices) const;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::uint32_t> index_;  // n*n entries into pool_, 0 = absent
  std::vector<Rational> pool_;        // pool_[0] == 0
  int dropped_self_loops_ = 0;
};

// Graph file format: 'c' comment lines, one "p <n> <m>" header, then arc
// lines "e <u> <v> <w>" with 1-indexed endpoints and a rational weight.
// In undirected mode each line yields the two opposite arcs of equal weight.
WeightedDigraph parse_graph(std::istream& in, EdgeMode mode);

}  // namespace twcut
