#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twcut/cut_value.hpp"
#include "twcut/graph.hpp"
#include "twcut/nice_decomposition.hpp"
#include "twcut/objective.hpp"

namespace twcut {

// Per-node table of the dynamic program: for every subset S of the bag
// (as a bit mask over bag positions) and every ell in 0..|F_i|, the best
// (count, weight) tuple over cuts using S plus ell forgotten vertices,
// where weight counts only arcs with both endpoints at or below the node.
// Entries are never bottom and entry(ell, S).count == ell + |S| always.
struct DPTable {
  int node = -1;
  std::vector<int> bag;       // ascending; bit i of a mask = bag[i]
  int forgotten_count = 0;    // |F_i|
  std::vector<CutValue> entries;

  std::size_t index(std::uint32_t mask, int ell) const {
    return static_cast<std::size_t>(mask) * (forgotten_count + 1) + ell;
  }
  CutValue& at(std::uint32_t mask, int ell) { return entries[index(mask, ell)]; }
  const CutValue& at(std::uint32_t mask, int ell) const { return entries[index(mask, ell)]; }
  std::uint32_t subset_count() const { return std::uint32_t(1) << bag.size(); }
};

// Supremum under the objective's quasiorder: the argument with the strictly
// larger f-image wins, bottom loses to anything, and f-ties keep the first
// argument (any member of the equivalence class is correct; first-wins makes
// the solver deterministic).
MaybeCutValue sup(const MaybeCutValue& a, const MaybeCutValue& b, const Objective& obj);

// weight of arcs from S to bag minus S, for every subset mask of the bag;
// computed by the same incremental subset recurrence the leaf tables use,
// in O(2^|bag| * |bag|) exact-arithmetic steps.
std::vector<Rational> bag_cut_profile(std::span<const int> bag, const WeightedDigraph& g);

DPTable leaf_table(int node, std::span<const int> bag, const WeightedDigraph& g,
                   const Objective& obj);
DPTable forget_table(int node, const DPTable& child, int forgotten_vertex,
                     const Objective& obj);
DPTable introduce_table(int node, const DPTable& child, int introduced_vertex,
                        std::span<const int> bag, const WeightedDigraph& g,
                        const Objective& obj);
DPTable join_table(int node, const DPTable& left, const DPTable& right,
                   std::span<const int> bag, const WeightedDigraph& g,
                   const Objective& obj);

struct RootChoice {
  std::uint32_t mask = 0;
  int ell = 0;
};

// Best feasible entry of the root table, or bottom when no (ell, S) passes
// the validator. `choice` (optional) receives the attaining entry.
MaybeCutValue root_aggregate(const DPTable& root, const Objective& obj,
                             RootChoice* choice = nullptr);

struct SolveStats {
  int leaf_nodes = 0;
  int introduce_nodes = 0;
  int forget_nodes = 0;
  int join_nodes = 0;
  int width = -1;
  long long join_pair_sum = 0;  // sum of |F_j|*|F_k| over join nodes
  double elapsed_seconds = 0.0;
};

struct SolveReport {
  std::string problem;
  std::optional<ExtendedRational> optimum;  // empty = infeasible
  MaybeCutValue phi;
  std::optional<std::vector<int>> witness;  // ascending vertex ids
  SolveStats stats;
};

// Runs the table builders in post order, aggregates at the root and maps the
// result back through the objective's report transform. With want_witness the
// per-node tables are all retained and the witness replayed from the root
// choice; otherwise children are freed as soon as their parent is built.
SolveReport solve(const WeightedDigraph& g, const NiceTreeDecomposition& nd,
                  const Objective& obj, bool want_witness = false);

// Top-down replay over retained tables (indexed by node id). Throws
// std::logic_error if no operand or join split reproduces a stored entry,
// which would indicate a solver bug.
std::vector<int> reconstruct_witness(const std::vector<DPTable>& tables,
                                     const NiceTreeDecomposition& nd,
                                     const WeightedDigraph& g, const Objective& obj,
                                     RootChoice root_choice);

}  // namespace twcut
