#pragma once

// Binary trees with integer leaves: generators, native operations, and the
// same operations run directly over packed buffers.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "packed/examples/arith.hpp"
#include "packed/examples/tree_api.hpp"
#include "packed/packed.hpp"

namespace packed::examples {

inline constexpr unsigned max_symmetric_depth = 30;

inline void check_symmetric_depth(unsigned depth) {
  if (depth > max_symmetric_depth) {
    throw error(errc::depth_too_large, "depth " + std::to_string(depth) + " exceeds " +
                                           std::to_string(max_symmetric_depth));
  }
}

namespace detail {

inline Tree symmetric_tree(unsigned depth, Int& next) {
  if (depth == 0) return make_Leaf(next++);
  auto left = symmetric_tree(depth - 1, next);
  auto right = symmetric_tree(depth - 1, next);
  return make_Node(std::move(left), std::move(right));
}

inline Tree random_tree(std::mt19937_64& rng, unsigned depth, unsigned max_depth) {
  std::uniform_int_distribution<int> pick(0, 1);
  std::uniform_int_distribution<Int> value(-1000, 1000);
  if (depth >= max_depth || pick(rng) == 0) return make_Leaf(value(rng));
  auto left = random_tree(rng, depth + 1, max_depth);
  auto right = random_tree(rng, depth + 1, max_depth);
  return make_Node(std::move(left), std::move(right));
}

}  // namespace detail

// Full tree with 2^depth leaves numbered 0, 1, ... from the left.
inline Tree gen_symmetric_tree(unsigned depth) {
  check_symmetric_depth(depth);
  Int next = 0;
  return detail::symmetric_tree(depth, next);
}

inline Tree gen_random_tree(std::uint64_t seed, unsigned max_depth) {
  std::mt19937_64 rng(seed);
  return detail::random_tree(rng, 0, max_depth);
}

// Native operations. Recursion depth equals tree depth.

inline Int sum_native(const Tree& t) {
  if (auto* leaf = std::get_if<Tree::Leaf>(&t.alt)) return std::get<0>(leaf->fields);
  auto& node = std::get<Tree::Node>(t.alt);
  return wrapping_add(sum_native(*std::get<0>(node.fields)), sum_native(*std::get<1>(node.fields)));
}

inline Int rightmost_native(const Tree& t) {
  const Tree* at = &t;
  while (auto* node = std::get_if<Tree::Node>(&at->alt)) at = &*std::get<1>(node->fields);
  return std::get<0>(std::get<Tree::Leaf>(at->alt).fields);
}

inline Tree increment_native(const Tree& t) {
  if (auto* leaf = std::get_if<Tree::Leaf>(&t.alt)) {
    return make_Leaf(wrapping_add(std::get<0>(leaf->fields), 1));
  }
  auto& node = std::get<Tree::Node>(t.alt);
  return make_Node(increment_native(*std::get<0>(node.fields)),
                   increment_native(*std::get<1>(node.fields)));
}

// Checked traversals over the typed cursor. They work under every layout;
// field sizes are read and discarded.

template <layout_mode L, class... Rest>
std::pair<Int, reader<L, Rest...>> sum_at(const reader<L, Tree, Rest...>& c) {
  return case_of<Tree>(
      c,
      [](auto c) { return read_prim(skip_field_size_if_any(c)); },
      [](auto c) {
        auto [l, c1] = sum_at(skip_field_size_if_any(c));
        auto [r, c2] = sum_at(skip_field_size_if_any(c1));
        return std::pair{wrapping_add(l, r), c2};
      });
}

template <layout_mode L>
Int sum_packed(const buffer<L, Tree>& p, std::size_t* counter = nullptr) {
  return sum_at(begin(p, counter)).first;
}

// Reads every left subtree in full.
template <layout_mode L, class... Rest>
std::pair<Int, reader<L, Rest...>> rightmost_plain_at(const reader<L, Tree, Rest...>& c) {
  return case_of<Tree>(
      c,
      [](auto c) { return read_prim(skip_field_size_if_any(c)); },
      [](auto c) {
        auto c1 = rightmost_plain_at(skip_field_size_if_any(c)).second;
        return rightmost_plain_at(skip_field_size_if_any(c1));
      });
}

template <layout_mode L>
Int rightmost_packed_plain(const buffer<L, Tree>& p, std::size_t* counter = nullptr) {
  return rightmost_plain_at(begin(p, counter)).first;
}

// Jumps over every left subtree using its field size.
template <layout_mode L, class... Rest>
  requires(L != layout_mode::plain)
std::pair<Int, reader<L, Rest...>> rightmost_indirect_at(const reader<L, Tree, Rest...>& c) {
  return case_of<Tree>(
      c,
      [](auto c) { return read_prim(skip_field_size_if_any(c)); },
      [](auto c) {
        auto [n, c1] = read_field_size(c);
        return rightmost_indirect_at(skip_field_size_if_any(jump_over_field(c1, n)));
      });
}

template <layout_mode L>
  requires(L != layout_mode::plain)
Int rightmost_packed_indirect(const buffer<L, Tree>& p, std::size_t* counter = nullptr) {
  return rightmost_indirect_at(begin(p, counter)).first;
}

template <layout_mode L, class... RestIn>
std::pair<needs<L, type_list<>, nested>, reader<L, RestIn...>> increment_at(
    const reader<L, Tree, RestIn...>& c, needs<L, type_list<Tree>, nested>&& out) {
  auto step = [](auto c, auto b) { return increment_at(c, std::move(b)); };
  return transform_of<Tree>(
      c, std::move(out),
      [](auto c, auto b) {
        auto [v, c1] = read_prim(skip_field_size_if_any(c));
        return std::pair{write_prim(std::move(b), wrapping_add(v, 1)), c1};
      },
      [step](auto c, auto b) {
        auto [b1, c1] = transform_field(skip_field_size_if_any(c), std::move(b), step);
        auto [b2, c2] = transform_field(skip_field_size_if_any(c1), std::move(b1), step);
        return std::pair{std::move(b2), c2};
      });
}

template <layout_mode L>
buffer<L, Tree> increment_packed(const buffer<L, Tree>& p) {
  builder<L, Tree> out;
  out.reserve(p.size());
  auto [done, end] = transform_field(begin(p), std::move(out),
                                     [](auto c, auto b) { return increment_at(c, std::move(b)); });
  return finish(std::move(done));
}

// Raw traversals: same walks, offsets handled by hand.

template <layout_mode L>
Int raw_sum(raw_cursor& c) {
  switch (c.read_tag()) {
    case 0:
      if constexpr (L == layout_mode::indirect) c.read_size();
      return c.read_int();
    case 1: {
      if constexpr (L != layout_mode::plain) c.read_size();
      Int l = raw_sum<L>(c);
      if constexpr (L == layout_mode::indirect) c.read_size();
      return wrapping_add(l, raw_sum<L>(c));
    }
    default:
      throw error(errc::invalid_tag, "not a Tree constructor", c.offset() - tag_width);
  }
}

template <layout_mode L>
Int sum_raw(const buffer<L, Tree>& p, std::size_t* counter = nullptr) {
  raw_cursor c(p.bytes(), 0, counter);
  return raw_sum<L>(c);
}

template <layout_mode L>
Int raw_rightmost(raw_cursor& c) {
  while (true) {
    switch (c.read_tag()) {
      case 0:
        if constexpr (L == layout_mode::indirect) c.read_size();
        return c.read_int();
      case 1:
        if constexpr (L == layout_mode::plain) {
          raw_rightmost<L>(c);
        } else {
          c.skip(c.read_size());
          if constexpr (L == layout_mode::indirect) c.read_size();
        }
        break;
      default:
        throw error(errc::invalid_tag, "not a Tree constructor", c.offset() - tag_width);
    }
  }
}

template <layout_mode L>
Int rightmost_raw(const buffer<L, Tree>& p, std::size_t* counter = nullptr) {
  raw_cursor c(p.bytes(), 0, counter);
  return raw_rightmost<L>(c);
}

// Baselines that go through a native tree.

template <layout_mode L>
Int unpack_then_sum(const buffer<L, Tree>& p) {
  return sum_native(unpack(p));
}

template <layout_mode L>
buffer<L, Tree> unpack_increment_repack(const buffer<L, Tree>& p) {
  return pack<L>(increment_native(unpack(p)));
}

template <layout_mode L, class... Rest>
std::pair<Tree, reader<L, Rest...>> increment_case_at(const reader<L, Tree, Rest...>& c) {
  return case_of<Tree>(
      c,
      [](auto c) {
        auto [v, c1] = read_prim(skip_field_size_if_any(c));
        return std::pair{make_Leaf(wrapping_add(v, 1)), c1};
      },
      [](auto c) {
        auto [l, c1] = increment_case_at(skip_field_size_if_any(c));
        auto [r, c2] = increment_case_at(skip_field_size_if_any(c1));
        return std::pair{make_Node(std::move(l), std::move(r)), c2};
      });
}

template <layout_mode L>
buffer<L, Tree> case_increment_then_pack(const buffer<L, Tree>& p) {
  return pack<L>(increment_case_at(begin(p)).first);
}

// Streams gen_symmetric_tree(depth) straight into a builder, without a
// native tree in between.
template <layout_mode L>
needs<L, type_list<>, nested> write_symmetric(needs<L, type_list<Tree>, nested>&& b,
                                              unsigned depth, Int& next) {
  if (depth == 0) return write_ctor<Tree, 0>(std::move(b), next++);
  auto step = [&](auto s) { return write_symmetric<L>(std::move(s), depth - 1, next); };
  auto n = start<Tree, 1>(std::move(b));
  auto n1 = apply_field(std::move(n), step);
  return apply_field(std::move(n1), step);
}

template <layout_mode L>
buffer<L, Tree> pack_symmetric_tree(unsigned depth) {
  check_symmetric_depth(depth);
  Int next = 0;
  builder<L, Tree> b;
  return finish(apply_field(std::move(b), [&](auto s) {
    return write_symmetric<L>(std::move(s), depth, next);
  }));
}

}  // namespace packed::examples
