#pragma once

#include <optional>

#include "twcut/rational.hpp"

namespace twcut {

// The (|S|, alpha(dS)) tuple the dynamic program optimizes over. The bottom
// element (no feasible cut) is represented by an empty MaybeCutValue; table
// entries themselves are never bottom.
struct CutValue {
  int count = 0;
  Rational weight;

  friend bool operator==(const CutValue& a, const CutValue& b) {
    return a.count == b.count && a.weight == b.weight;
  }
};

inline CutValue operator+(const CutValue& a, const CutValue& b) {
  return CutValue{a.count + b.count, a.weight + b.weight};
}

inline CutValue operator-(const CutValue& a, const CutValue& b) {
  return CutValue{a.count - b.count, a.weight - b.weight};
}

using MaybeCutValue = std::optional<CutValue>;

}  // namespace twcut
