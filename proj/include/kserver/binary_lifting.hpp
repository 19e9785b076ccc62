#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kserver/tree.hpp"

namespace kserver {

/*
 * Jump-pointer table: up(v, w) is the ancestor of v at distance 2^w, or
 * kNoVertex past the root. move_up(v, z) resolves the ancestor at distance z
 * in at most one pass over the table levels.
 *
 * Immutable after construction; concurrent reads are safe.
 */
class BinaryLiftTable {
 public:
  explicit BinaryLiftTable(const Tree& tree)
      : levels_(std::bit_width(tree.n)), depth_(tree.depth) {
    up_.resize(levels_);
    up_[0].assign(tree.n + 1, kNoVertex);
    for (Vertex v = 1; v <= tree.n; ++v) {
      up_[0][v] = tree.parent[v];
      ++build_writes_;
    }
    for (std::uint32_t w = 1; w < levels_; ++w) {
      up_[w].assign(tree.n + 1, kNoVertex);
      for (Vertex v = 1; v <= tree.n; ++v) {
        const Vertex half = up_[w - 1][v];
        up_[w][v] = half == kNoVertex ? kNoVertex : up_[w - 1][half];
        ++build_writes_;
      }
    }
  }

  // Ancestor of v at distance 2^w, kNoVertex if that jump leaves the tree.
  [[nodiscard]] Vertex ancestor_pow2(Vertex v, std::uint32_t w) const {
    return w < levels_ ? up_[w][v] : kNoVertex;
  }

  [[nodiscard]] Vertex move_up(Vertex v, std::uint32_t z) const {
    std::uint32_t iterations = 0;
    return move_up(v, z, iterations);
  }

  // Peels the largest power of two off z each round; `iterations` counts
  // loop passes (bounded by the level count).
  [[nodiscard]] Vertex move_up(Vertex v, std::uint32_t z,
                               std::uint32_t& iterations) const {
    if (z > (*depth_)[v]) {
      throw std::out_of_range("move_up: distance " + std::to_string(z) +
                              " exceeds depth of vertex " + std::to_string(v));
    }
    for (std::uint32_t w = 0; z != 0; ++w, z >>= 1) {
      ++iterations;
      if (z & 1u) v = up_[w][v];
    }
    return v;
  }

  [[nodiscard]] std::uint32_t levels() const { return levels_; }
  [[nodiscard]] std::uint64_t build_writes() const { return build_writes_; }

 private:
  std::uint32_t levels_;
  const std::vector<std::uint32_t>* depth_;
  std::vector<std::vector<Vertex>> up_;  // [level][vertex]
  std::uint64_t build_writes_ = 0;
};

}  // namespace kserver
