#include "twcut/tree_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <set>
#include <sstream>

namespace twcut {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
  std::vector<std::vector<int>> adj(bags.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::optional<std::vector<int>> TreeDecomposition::orient() const {
  const int n = node_count();
  if (n == 0 || root < 0 || root >= n) return std::nullopt;
  if (static_cast<int>(edges.size()) != n - 1) return std::nullopt;
  for (auto [a, b] : edges)
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) return std::nullopt;
  auto adj = adjacency();
  std::vector<int> parent(n, -2);
  std::deque<int> queue{root};
  parent[root] = -1;
  int seen = 1;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j : adj[i]) {
      if (parent[j] != -2) continue;
      parent[j] = i;
      ++seen;
      queue.push_back(j);
    }
  }
  if (seen != n) return std::nullopt;
  return parent;
}

std::string Violation::message() const {
  switch (kind) {
    case Kind::NotATree:
      return "decomposition edges do not form a tree rooted at the declared root";
    case Kind::NodeNotCovered:
      return "vertex " + std::to_string(a + 1) + " is not covered by any bag";
    case Kind::EdgeNotCovered:
      return "no bag contains both endpoints of arc " + std::to_string(a + 1) + " -> " +
             std::to_string(b + 1);
    case Kind::CoherenceBroken:
      return "bags containing vertex " + std::to_string(a + 1) +
             " do not induce a connected subtree";
  }
  return "unknown violation";
}

std::optional<Violation> validate(const WeightedDigraph& g, const TreeDecomposition& d) {
  const int n = g.vertex_count();
  if (!d.orient()) return Violation{Violation::Kind::NotATree};

  // Node coverage, including the "no further vertices" direction.
  std::vector<std::vector<int>> nodes_of(n);
  for (int i = 0; i < d.node_count(); ++i)
    for (int v : d.bags[i]) {
      if (v < 0 || v >= n) return Violation{Violation::Kind::NodeNotCovered, v};
      nodes_of[v].push_back(i);
    }
  for (int v = 0; v < n; ++v)
    if (nodes_of[v].empty()) return Violation{Violation::Kind::NodeNotCovered, v};

  for (const Arc& arc : g.arcs()) {
    const auto& a = nodes_of[arc.source];
    const auto& b = nodes_of[arc.target];
    bool covered = false;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
      if (a[i] == b[j]) {
        covered = true;
        break;
      }
      a[i] < b[j] ? ++i : ++j;
    }
    if (!covered) return Violation{Violation::Kind::EdgeNotCovered, arc.source, arc.target};
  }

  auto adj = d.adjacency();
  std::vector<char> in_bag(d.node_count(), 0), reached(d.node_count(), 0);
  for (int v = 0; v < n; ++v) {
    for (int i : nodes_of[v]) in_bag[i] = 1;
    std::deque<int> queue{nodes_of[v].front()};
    reached[nodes_of[v].front()] = 1;
    std::size_t seen = 1;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j : adj[i])
        if (in_bag[j] && !reached[j]) {
          reached[j] = 1;
          ++seen;
          queue.push_back(j);
        }
    }
    bool connected = seen == nodes_of[v].size();
    for (int i : nodes_of[v]) in_bag[i] = reached[i] = 0;
    if (!connected) return Violation{Violation::Kind::CoherenceBroken, v};
  }
  return std::nullopt;
}

TreeDecomposition shrink(const TreeDecomposition& d) {
  auto parent_opt = d.orient();
  if (!parent_opt) throw std::invalid_argument("shrink: decomposition is not a tree");
  std::vector<int> parent = *parent_opt;
  std::vector<std::vector<int>> bags = d.bags;
  const int n = d.node_count();
  std::vector<char> alive(n, 1);

  auto find_parent = [&](int j) {  // path-compress over merged nodes
    int p = parent[j];
    while (p != -1 && !alive[p]) p = parent[p];
    return p;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < n; ++j) {
      if (!alive[j]) continue;
      int p = find_parent(j);
      if (p == -1) continue;
      if (std::includes(bags[p].begin(), bags[p].end(), bags[j].begin(), bags[j].end())) {
        alive[j] = 0;
        parent[j] = p;  // children of j re-attach through the compression
        changed = true;
      }
    }
  }

  TreeDecomposition out;
  std::vector<int> remap(n, -1);
  for (int i = 0; i < n; ++i)
    if (alive[i]) {
      remap[i] = out.node_count();
      out.bags.push_back(bags[i]);
    }
  for (int i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    int p = find_parent(i);
    if (p != -1) out.edges.emplace_back(remap[p], remap[i]);
  }
  int r = d.root;
  while (!alive[r]) r = parent[r];
  out.root = remap[r];
  return out;
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

TreeDecomposition parse_td(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int num_bags = 0, num_vertices = 0;
  TreeDecomposition d;
  std::vector<char> declared;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "s") {
      if (have_header) throw ParseError(line_no, "duplicate 's td' header");
      if (tokens.size() != 5 || tokens[1] != "td")
        throw ParseError(line_no, "header must be 's td <#bags> <width+1> <n>'");
      num_bags = parse_int(tokens[2], line_no, "bag count");
      parse_int(tokens[3], line_no, "width+1");
      num_vertices = parse_int(tokens[4], line_no, "vertex count");
      if (num_bags < 0 || num_vertices < 0) throw ParseError(line_no, "negative count");
      d.bags.assign(num_bags, {});
      declared.assign(num_bags, 0);
      have_header = true;
    } else if (tokens[0] == "b") {
      if (!have_header) throw ParseError(line_no, "bag line before 's td' header");
      if (tokens.size() < 2) throw ParseError(line_no, "bag line must be 'b <id> <vertices...>'");
      int id = parse_int(tokens[1], line_no, "bag id");
      if (id < 1 || id > num_bags)
        throw ParseError(line_no, "bag id out of range 1.." + std::to_string(num_bags));
      if (declared[id - 1]) throw ParseError(line_no, "duplicate bag " + std::to_string(id));
      declared[id - 1] = 1;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        int v = parse_int(tokens[i], line_no, "vertex");
        if (v < 1 || v > num_vertices)
          throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(num_vertices));
        d.bags[id - 1].push_back(v - 1);
      }
      std::sort(d.bags[id - 1].begin(), d.bags[id - 1].end());
      d.bags[id - 1].erase(std::unique(d.bags[id - 1].begin(), d.bags[id - 1].end()),
                           d.bags[id - 1].end());
    } else {
      if (!have_header) throw ParseError(line_no, "edge line before 's td' header");
      if (tokens.size() != 2) throw ParseError(line_no, "tree edge line must be '<i> <j>'");
      int a = parse_int(tokens[0], line_no, "bag id");
      int b = parse_int(tokens[1], line_no, "bag id");
      if (a < 1 || a > num_bags || b < 1 || b > num_bags)
        throw ParseError(line_no, "bag id out of range 1.." + std::to_string(num_bags));
      d.edges.emplace_back(a - 1, b - 1);
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 's td' header");
  d.root = 0;
  return d;
}

TreeDecomposition greedy_decomposition(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) {
    TreeDecomposition d;
    d.bags.push_back({});
    return d;
  }
  std::vector<std::set<int>> adj(n);
  for (const Arc& a : g.arcs()) {
    adj[a.source].insert(a.target);
    adj[a.target].insert(a.source);
  }
  std::vector<char> eliminated(n, 0);
  std::vector<int> position(n, -1);
  TreeDecomposition d;
  std::vector<std::vector<int>> neighbors_at(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!eliminated[v] && (best == -1 || adj[v].size() < adj[best].size())) best = v;
    position[best] = step;
    eliminated[best] = 1;
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    neighbors_at[step] = nb;
    std::vector<int> bag = nb;
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    d.bags.push_back(bag);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      adj[nb[i]].erase(best);
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    }
  }
  // Node for step i hangs below the node of its earliest-eliminated neighbor.
  for (int step = 0; step < n; ++step) {
    int up = n;
    for (int u : neighbors_at[step]) up = std::min(up, position[u]);
    if (up == n) up = step + 1;  // isolated at elimination time: chain onward
    if (up < n) d.edges.emplace_back(up, step);
  }
  d.root = n - 1;
  return shrink(d);
}

}  // namespace twcut
