#include "twcut/objective.hpp"

#include <stdexcept>

namespace twcut {

Problem problem_from_name(const std::string& name) {
  if (name == "max-cut") return Problem::MaxCut;
  if (name == "max-bisection") return Problem::MaxBisection;
  if (name == "min-bisection") return Problem::MinBisection;
  if (name == "balanced-min-cut") return Problem::BalancedMinCut;
  if (name == "min-edge-expansion") return Problem::MinEdgeExpansion;
  if (name == "sparsest-cut") return Problem::SparsestCut;
  if (name == "densest-cut") return Problem::DensestCut;
  throw std::invalid_argument("unknown problem '" + name + "'");
}

std::string problem_name(Problem p) {
  switch (p) {
    case Problem::MaxCut: return "max-cut";
    case Problem::MaxBisection: return "max-bisection";
    case Problem::MinBisection: return "min-bisection";
    case Problem::BalancedMinCut: return "balanced-min-cut";
    case Problem::MinEdgeExpansion: return "min-edge-expansion";
    case Problem::SparsestCut: return "sparsest-cut";
    case Problem::DensestCut: return "densest-cut";
  }
  throw std::logic_error("unhandled problem");
}

Objective make_objective(Problem p, int n, std::optional<Rational> beta) {
  if (n < 1) throw std::invalid_argument("empty graph: objectives need n >= 1");
  if (p != Problem::BalancedMinCut && beta)
    throw std::invalid_argument("beta is only meaningful for balanced-min-cut");

  Objective obj;
  obj.name = problem_name(p);
  obj.n = n;

  auto bisection_valid = [n](int x) {
    int d = 2 * x - n;
    return d >= -1 && d <= 1;
  };

  switch (p) {
    case Problem::MaxCut:
      obj.f = [](int, const Rational& s) { return ExtendedRational(s); };
      obj.valid = [](int) { return true; };
      break;
    case Problem::MaxBisection:
      obj.f = [](int, const Rational& s) { return ExtendedRational(s); };
      obj.valid = bisection_valid;
      break;
    case Problem::MinBisection:
      obj.f = [](int, const Rational& s) { return ExtendedRational(-s); };
      obj.valid = bisection_valid;
      obj.direction = Direction::Antitone;
      obj.negate_report = true;
      break;
    case Problem::BalancedMinCut: {
      if (!beta) throw std::invalid_argument("balanced-min-cut needs beta");
      if (*beta <= 0 || *beta > Rational(1, 2))
        throw std::invalid_argument("beta must satisfy 0 < beta <= 1/2");
      obj.beta = beta;
      Rational lo = *beta * n;
      Rational hi = (1 - *beta) * n;
      obj.f = [](int, const Rational& s) { return ExtendedRational(-s); };
      obj.valid = [lo, hi](int x) { return lo <= x && x <= hi; };
      obj.direction = Direction::Antitone;
      obj.negate_report = true;
      break;
    }
    case Problem::MinEdgeExpansion:
      obj.f = [](int count, const Rational& s) {
        if (count == 0) return ExtendedRational::neg_infinity();
        return ExtendedRational(-s / count);
      };
      obj.valid = [n](int x) { return x <= n - x; };
      obj.direction = Direction::Antitone;
      obj.negate_report = true;
      break;
    case Problem::SparsestCut:
      obj.f = [n](int count, const Rational& s) {
        if (count == 0 || count == n) return ExtendedRational::neg_infinity();
        return ExtendedRational(-s / (static_cast<long>(count) * (n - count)));
      };
      obj.valid = [](int) { return true; };
      obj.direction = Direction::Antitone;
      obj.negate_report = true;
      break;
    case Problem::DensestCut:
      obj.f = [n](int count, const Rational& s) {
        if (count == 0 || count == n) return ExtendedRational::neg_infinity();
        return ExtendedRational(s / (static_cast<long>(count) * (n - count)));
      };
      obj.valid = [](int) { return true; };
      break;
  }
  return obj;
}

ExtendedRational evaluate_f(const Objective& obj, const MaybeCutValue& cv) {
  if (!cv) throw std::invalid_argument("evaluate_f on the bottom value");
  return obj.f(cv->count, cv->weight);
}

std::optional<ExtendedRational> report_value(const Objective& obj, const MaybeCutValue& phi) {
  if (!phi) return std::nullopt;
  return obj.report(evaluate_f(obj, phi));
}

}  // namespace twcut
