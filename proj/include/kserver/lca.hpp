#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "kserver/tree.hpp"

namespace kserver {

/*
 * Constant-time LCA queries after an Euler-tour + sparse-table build.
 *
 * The tour visits 2n-1 positions (each vertex once per entry and once after
 * each child); the LCA of u and v is the shallowest tour entry between their
 * first occurrences, found by a range-minimum query over tour depths.
 *
 * Immutable after construction; concurrent reads are safe.
 */
class LcaIndex {
 public:
  explicit LcaIndex(const Tree& tree) { build(tree); }

  [[nodiscard]] Vertex query(Vertex u, Vertex v) const {
    std::uint32_t lookups = 0;
    return query(u, v, lookups);
  }

  // Counting variant: `lookups` receives the number of table reads performed
  // (bounded by a constant, asserted in tests).
  [[nodiscard]] Vertex query(Vertex u, Vertex v, std::uint32_t& lookups) const {
    std::uint32_t a = first_occurrence_[u];
    std::uint32_t b = first_occurrence_[v];
    lookups += 2;
    if (a > b) std::swap(a, b);
    const std::uint32_t w = std::bit_width(b - a + 1) - 1;
    const std::uint32_t left = table_[w][a];
    const std::uint32_t right = table_[w][b + 1 - (1u << w)];
    lookups += 2;
    // ties resolve to the leftmost position; the LCA is unique either way
    const std::uint32_t best =
        tour_depth_[left] <= tour_depth_[right] ? left : right;
    lookups += 2;
    ++lookups;
    return euler_tour_[best];
  }

  [[nodiscard]] const std::vector<Vertex>& euler_tour() const {
    return euler_tour_;
  }
  [[nodiscard]] std::uint32_t first_occurrence(Vertex v) const {
    return first_occurrence_[v];
  }
  // Table entries written during construction.
  [[nodiscard]] std::uint64_t build_writes() const { return build_writes_; }

 private:
  void build(const Tree& tree) {
    const std::uint32_t len = 2 * tree.n - 1;
    euler_tour_.reserve(len);
    tour_depth_.reserve(len);
    first_occurrence_.assign(tree.n + 1, kUnseen);

    std::vector<std::pair<Vertex, std::uint32_t>> stack;
    stack.reserve(64);
    stack.emplace_back(1, 0);
    append_tour(tree, 1);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < tree.children[v].size()) {
        const Vertex c = tree.children[v][next++];
        append_tour(tree, c);
        stack.emplace_back(c, 0);
      } else {
        stack.pop_back();
        if (!stack.empty()) append_tour(tree, stack.back().first);
      }
    }

    const std::uint32_t levels = std::bit_width(len);
    table_.resize(levels);
    table_[0].resize(len);
    for (std::uint32_t i = 0; i < len; ++i) {
      table_[0][i] = i;
      ++build_writes_;
    }
    for (std::uint32_t w = 1; w < levels; ++w) {
      const std::uint32_t half = 1u << (w - 1);
      table_[w].resize(len - (half << 1) + 1);
      for (std::uint32_t i = 0; i + (half << 1) <= len; ++i) {
        const std::uint32_t a = table_[w - 1][i];
        const std::uint32_t b = table_[w - 1][i + half];
        table_[w][i] = tour_depth_[a] <= tour_depth_[b] ? a : b;
        ++build_writes_;
      }
    }
  }

  void append_tour(const Tree& tree, Vertex v) {
    if (first_occurrence_[v] == kUnseen) {
      first_occurrence_[v] = static_cast<std::uint32_t>(euler_tour_.size());
      ++build_writes_;
    }
    euler_tour_.push_back(v);
    tour_depth_.push_back(tree.depth[v]);
    build_writes_ += 2;
  }

  static constexpr std::uint32_t kUnseen = 0xffffffffu;

  std::vector<Vertex> euler_tour_;
  std::vector<std::uint32_t> tour_depth_;
  std::vector<std::uint32_t> first_occurrence_;
  std::vector<std::vector<std::uint32_t>> table_;  // [level][tour position]
  std::uint64_t build_writes_ = 0;
};

}  // namespace kserver
