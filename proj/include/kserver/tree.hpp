#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kserver {

using Vertex = std::uint32_t;

// Sentinel for "no vertex" (vertices are numbered 1..n).
inline constexpr Vertex kNoVertex = 0;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*
 * Immutable rooted tree. Vertex 1 is the root. All per-vertex arrays are
 * sized n+1 and indexed 1..n; index 0 is unused.
 *
 * first_ts/last_ts are DFS time labels: u is an ancestor of v exactly when
 * [first_ts[v], last_ts[v]] lies inside [first_ts[u], last_ts[u]].
 */
struct Tree {
  std::uint32_t n = 0;
  std::vector<Vertex> parent;                  // parent[1] == kNoVertex
  std::vector<std::vector<Vertex>> children;   // input order
  std::vector<std::uint32_t> first_ts;
  std::vector<std::uint32_t> last_ts;
  std::vector<std::uint32_t> depth;            // edge count from the root

  [[nodiscard]] bool valid_vertex(Vertex v) const { return v >= 1 && v <= n; }

  // True iff u lies on the root-to-v path (u == v counts).
  [[nodiscard]] bool is_ancestor(Vertex u, Vertex v) const {
    return first_ts[u] <= first_ts[v] && last_ts[v] <= last_ts[u];
  }
};

// dist(u,v) given the lowest common ancestor of u and v (caller supplies it).
[[nodiscard]] inline std::uint32_t tree_distance(const Tree& tree, Vertex lca,
                                                 Vertex u, Vertex v) {
  return tree.depth[u] + tree.depth[v] - 2 * tree.depth[lca];
}

// Fills tree.depth by walking children lists from the root (iterative, so
// path-shaped trees with n ~ 1e6 do not overflow the call stack).
inline void compute_distances(Tree& tree) {
  tree.depth.assign(tree.n + 1, 0);
  std::vector<Vertex> stack;
  stack.reserve(64);
  stack.push_back(1);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Vertex c : tree.children[v]) {
      tree.depth[c] = tree.depth[v] + 1;
      stack.push_back(c);
    }
  }
}

namespace detail {

// DFS time labels; also detects vertices unreachable from the root, which
// with one parent per vertex can only mean a cycle.
inline void assign_time_labels(Tree& tree) {
  tree.first_ts.assign(tree.n + 1, 0);
  tree.last_ts.assign(tree.n + 1, 0);
  std::uint32_t ts = 0;
  std::uint32_t visited = 0;
  // (vertex, index of next child to enter)
  std::vector<std::pair<Vertex, std::uint32_t>> stack;
  stack.reserve(64);
  stack.emplace_back(1, 0);
  tree.first_ts[1] = ++ts;
  ++visited;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < tree.children[v].size()) {
      const Vertex c = tree.children[v][next++];
      tree.first_ts[c] = ++ts;
      ++visited;
      stack.emplace_back(c, 0);
    } else {
      tree.last_ts[v] = ts;
      stack.pop_back();
    }
  }
  if (visited != tree.n) {
    throw ParseError("cycle detected: " +
                     std::to_string(tree.n - visited) +
                     " vertex(es) cannot reach the root");
  }
}

inline long long parse_integer(std::string_view text, std::size_t& pos) {
  while (pos < text.size() &&
         (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
          text[pos] == '\r')) {
    ++pos;
  }
  if (pos >= text.size()) {
    throw ParseError("malformed number: unexpected end of input");
  }
  const std::size_t start = pos;
  if (text[pos] == '-' || text[pos] == '+') ++pos;
  std::size_t digits = 0;
  long long value = 0;
  bool overflow = false;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    value = value * 10 + (text[pos] - '0');
    if (value > (1LL << 40)) overflow = true;  // far beyond any valid vertex
    ++digits;
    ++pos;
  }
  if (digits == 0 || (pos < text.size() && text[pos] != ' ' &&
                      text[pos] != '\t' && text[pos] != '\n' &&
                      text[pos] != '\r')) {
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
           text[pos] != '\n' && text[pos] != '\r') {
      ++pos;
    }
    throw ParseError("malformed number: '" +
                     std::string(text.substr(start, pos - start)) + "'");
  }
  if (overflow) {
    throw ParseError("malformed number: value out of range");
  }
  return text[start] == '-' ? -value : value;
}

inline bool only_whitespace_left(std::string_view text, std::size_t pos) {
  for (; pos < text.size(); ++pos) {
    if (text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\n' &&
        text[pos] != '\r') {
      return false;
    }
  }
  return true;
}

}  // namespace detail

// Parses the parent-list format: line 1 holds n, line 2 the parents of
// vertices 2..n. Derived fields (children, time labels, depths) are filled.
inline Tree parse_tree(std::string_view text) {
  std::size_t pos = 0;
  const long long n_raw = detail::parse_integer(text, pos);
  if (n_raw < 1) {
    throw ParseError("vertex count must be at least 1, got " +
                     std::to_string(n_raw));
  }
  if (n_raw > (1LL << 31)) {
    throw ParseError("vertex count out of supported range");
  }
  Tree tree;
  tree.n = static_cast<std::uint32_t>(n_raw);
  tree.parent.assign(tree.n + 1, kNoVertex);
  tree.children.assign(tree.n + 1, {});
  for (Vertex v = 2; v <= tree.n; ++v) {
    const long long p = detail::parse_integer(text, pos);
    if (p < 1 || p > n_raw) {
      throw ParseError("parent of vertex " + std::to_string(v) +
                       " out of range: " + std::to_string(p));
    }
    tree.parent[v] = static_cast<Vertex>(p);
    tree.children[p].push_back(v);
  }
  if (!detail::only_whitespace_left(text, pos)) {
    throw ParseError("malformed number: trailing content after parent list");
  }
  detail::assign_time_labels(tree);
  compute_distances(tree);
  return tree;
}

// Inverse of parse_tree; emits the exact external format, trailing newline
// included (second line is empty when n == 1).
inline std::string serialize_tree(const Tree& tree) {
  std::string out = std::to_string(tree.n);
  out.push_back('\n');
  for (Vertex v = 2; v <= tree.n; ++v) {
    if (v > 2) out.push_back(' ');
    out += std::to_string(tree.parent[v]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace kserver
