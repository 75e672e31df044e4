#pragma once

// Arithmetic expressions: generators, evaluation natively, over packed
// buffers, and through the unpack baseline.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>

#include "packed/examples/arith.hpp"
#include "packed/examples/ast_api.hpp"
#include "packed/examples/tree.hpp"
#include "packed/packed.hpp"

namespace packed::examples {

inline Int eval_native(const Ast& e) {
  return std::visit(
      [](const auto& alt) -> Int {
        using A = std::decay_t<decltype(alt)>;
        if constexpr (std::is_same_v<A, Ast::Value>) {
          return std::get<0>(alt.fields);
        } else {
          Int l = eval_native(*std::get<0>(alt.fields));
          Int r = eval_native(*std::get<1>(alt.fields));
          if constexpr (std::is_same_v<A, Ast::Add>) return wrapping_add(l, r);
          if constexpr (std::is_same_v<A, Ast::Sub>) return wrapping_sub(l, r);
          if constexpr (std::is_same_v<A, Ast::Mul>) return wrapping_mul(l, r);
          if constexpr (std::is_same_v<A, Ast::Div>) return checked_div(l, r);
        }
      },
      e.alt);
}

namespace detail {

inline Ast random_ast(std::mt19937_64& rng, unsigned depth, unsigned max_depth) {
  std::uniform_int_distribution<int> pick(0, 4);
  std::uniform_int_distribution<Int> value(-1000, 1000);
  int ctor = depth >= max_depth ? 0 : pick(rng);
  if (ctor == 0) return make_Value(value(rng));
  auto l = random_ast(rng, depth + 1, max_depth);
  auto r = random_ast(rng, depth + 1, max_depth);
  switch (ctor) {
    case 1: return make_Add(std::move(l), std::move(r));
    case 2: return make_Sub(std::move(l), std::move(r));
    case 3: return make_Mul(std::move(l), std::move(r));
    default:
      while (eval_native(r) == 0) r = random_ast(rng, depth + 1, max_depth);
      return make_Div(std::move(l), std::move(r));
  }
}

inline Ast symmetric_ast(unsigned height, Int& next) {
  if (height == 0) {
    Int i = next++;
    return make_Value(i % 2 == 0 ? (i * 7919) % 100'000 + 1000 : i % 9 + 1);
  }
  auto l = symmetric_ast(height - 1, next);
  auto r = symmetric_ast(height - 1, next);
  if (height == 1) return make_Div(std::move(l), std::move(r));
  switch ((height - 2) % 3) {
    case 0: return make_Add(std::move(l), std::move(r));
    case 1: return make_Sub(std::move(l), std::move(r));
    default: return make_Mul(std::move(l), std::move(r));
  }
}

}  // namespace detail

// Every Div's right operand evaluates to a nonzero value, so eval_native
// never throws on the result.
inline Ast gen_random_ast(std::uint64_t seed, unsigned max_depth) {
  std::mt19937_64 rng(seed);
  return detail::random_ast(rng, 0, max_depth);
}

// Full expression with 2^depth Value leaves. The lowest operator level is Div
// (a large leaf over one in 1..9); higher levels cycle Add, Sub, Mul.
inline Ast gen_symmetric_ast(unsigned depth) {
  check_symmetric_depth(depth);
  Int next = 0;
  return detail::symmetric_ast(depth, next);
}

template <layout_mode L, class... Rest>
std::pair<Int, reader<L, Rest...>> eval_at(const reader<L, Ast, Rest...>& c) {
  auto binary = [](auto op) {
    return [op](auto c) {
      auto [l, c1] = eval_at(skip_field_size_if_any(c));
      auto [r, c2] = eval_at(skip_field_size_if_any(c1));
      return std::pair{op(l, r), c2};
    };
  };
  return case_of<Ast>(
      c,
      [](auto c) { return read_prim(skip_field_size_if_any(c)); },
      binary(wrapping_add), binary(wrapping_sub), binary(wrapping_mul), binary(checked_div));
}

template <layout_mode L>
Int eval_packed(const buffer<L, Ast>& p, std::size_t* counter = nullptr) {
  return eval_at(begin(p, counter)).first;
}

template <layout_mode L>
Int raw_eval(raw_cursor& c) {
  auto tag = c.read_tag();
  if (tag == 0) {
    if constexpr (L == layout_mode::indirect) c.read_size();
    return c.read_int();
  }
  if (tag > 4) throw error(errc::invalid_tag, "not an Ast constructor", c.offset() - tag_width);
  if constexpr (L != layout_mode::plain) c.read_size();
  Int l = raw_eval<L>(c);
  if constexpr (L == layout_mode::indirect) c.read_size();
  Int r = raw_eval<L>(c);
  switch (tag) {
    case 1: return wrapping_add(l, r);
    case 2: return wrapping_sub(l, r);
    case 3: return wrapping_mul(l, r);
    default: return checked_div(l, r);
  }
}

template <layout_mode L>
Int eval_raw(const buffer<L, Ast>& p, std::size_t* counter = nullptr) {
  raw_cursor c(p.bytes(), 0, counter);
  return raw_eval<L>(c);
}

template <layout_mode L>
Int unpack_then_eval(const buffer<L, Ast>& p) {
  return eval_native(unpack(p));
}

}  // namespace packed::examples
