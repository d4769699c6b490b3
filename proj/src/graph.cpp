#include "twcut/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace twcut {

WeightedDigraph::WeightedDigraph(int n, const std::vector<Arc>& arcs) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  index_.assign(static_cast<std::size_t>(n) * n, 0);
  pool_.push_back(Rational(0));
  std::map<std::pair<int, int>, Rational> merged;
  for (const Arc& a : arcs) {
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
      throw std::out_of_range("arc endpoint out of range");
    if (a.source == a.target) {
      ++dropped_self_loops_;
      continue;
    }
    merged[{a.source, a.target}] += a.weight;
  }
  arcs_.reserve(merged.size());
  for (auto& [uv, w] : merged) {
    index_[static_cast<std::size_t>(uv.first) * n_ + uv.second] =
        static_cast<std::uint32_t>(pool_.size());
    pool_.push_back(w);
    arcs_.push_back(Arc{uv.first, uv.second, std::move(w)});
  }
}

std::pair<Rational, Rational> WeightedDigraph::incident_weight_sums(
    int v, std::span<const int> targets) const {
  Rational out_sum(0), in_sum(0);
  for (int t : targets) {
    out_sum += weight(v, t);
    in_sum += weight(t, v);
  }
  return {std::move(out_sum), std::move(in_sum)};
}

Rational WeightedDigraph::cut_weight(const std::vector<bool>& in_set) const {
  Rational total(0);
  for (const Arc& a : arcs_)
    if (in_set[a.source] && !in_set[a.target]) total += a.weight;
  return total;
}

Rational WeightedDigraph::cut_weight(std::span<const int> vertices) const {
  std::vector<bool> in_set(n_, false);
  for (int v : vertices) in_set.at(v) = true;
  return cut_weight(in_set);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string t;
  while (ss >> t) tokens.push_back(t);
  return tokens;
}

int parse_int(const std::string& token, int line_no, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected an integer " + what + ", got '" + token + "'");
  }
}

}  // namespace

WeightedDigraph parse_graph(std::istream& in, EdgeMode mode) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      if (tokens.size() != 3) throw ParseError(line_no, "header must be 'p <n> <m>'");
      n = parse_int(tokens[1], line_no, "vertex count");
      parse_int(tokens[2], line_no, "arc count");
      if (n < 0) throw ParseError(line_no, "negative vertex count");
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "arc line before 'p' header");
      if (tokens.size() != 4) throw ParseError(line_no, "arc line must be 'e <u> <v> <w>'");
      int u = parse_int(tokens[1], line_no, "vertex");
      int v = parse_int(tokens[2], line_no, "vertex");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
      Rational w;
      try {
        w = parse_rational(tokens[3]);
      } catch (const std::invalid_argument&) {
        throw ParseError(line_no, "weight '" + tokens[3] + "' is not a rational");
      }
      arcs.push_back(Arc{u - 1, v - 1, w});
      if (mode == EdgeMode::Undirected) arcs.push_back(Arc{v - 1, u - 1, w});
    } else {
      throw ParseError(line_no, "unknown line type '" + tokens[0] + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p' header");
  return WeightedDigraph(n, arcs);
}

}  // namespace twcut
