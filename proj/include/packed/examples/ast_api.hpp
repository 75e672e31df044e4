// Generated by packed gen-api from ast.adt. Do not edit.
#pragma once

#include <string_view>
#include <tuple>
#include <utility>
#include <variant>

#include "packed/packed.hpp"

namespace packed::examples {

struct Ast;

struct Ast {
  struct Value {
    std::tuple<::packed::Int> fields;
    friend bool operator==(const Value&, const Value&) = default;
  };
  struct Add {
    std::tuple<::packed::box<::packed::examples::Ast>, ::packed::box<::packed::examples::Ast>> fields;
    friend bool operator==(const Add&, const Add&) = default;
  };
  struct Sub {
    std::tuple<::packed::box<::packed::examples::Ast>, ::packed::box<::packed::examples::Ast>> fields;
    friend bool operator==(const Sub&, const Sub&) = default;
  };
  struct Mul {
    std::tuple<::packed::box<::packed::examples::Ast>, ::packed::box<::packed::examples::Ast>> fields;
    friend bool operator==(const Mul&, const Mul&) = default;
  };
  struct Div {
    std::tuple<::packed::box<::packed::examples::Ast>, ::packed::box<::packed::examples::Ast>> fields;
    friend bool operator==(const Div&, const Div&) = default;
  };

  using constructors = ::packed::constructors<
      ::packed::ctor<"Value", ::packed::Int>,
      ::packed::ctor<"Add", ::packed::examples::Ast, ::packed::examples::Ast>,
      ::packed::ctor<"Sub", ::packed::examples::Ast, ::packed::examples::Ast>,
      ::packed::ctor<"Mul", ::packed::examples::Ast, ::packed::examples::Ast>,
      ::packed::ctor<"Div", ::packed::examples::Ast, ::packed::examples::Ast>>;
  static constexpr std::string_view name = "Ast";

  std::variant<Value, Add, Sub, Mul, Div> alt;

  friend bool operator==(const Ast&, const Ast&) = default;
};

inline Ast make_Value(::packed::Int f0) {
  return Ast{Ast::Value{{f0}}};
}
inline Ast make_Add(::packed::examples::Ast f0, ::packed::examples::Ast f1) {
  return Ast{Ast::Add{{::packed::box<::packed::examples::Ast>(std::move(f0)), ::packed::box<::packed::examples::Ast>(std::move(f1))}}};
}
inline Ast make_Sub(::packed::examples::Ast f0, ::packed::examples::Ast f1) {
  return Ast{Ast::Sub{{::packed::box<::packed::examples::Ast>(std::move(f0)), ::packed::box<::packed::examples::Ast>(std::move(f1))}}};
}
inline Ast make_Mul(::packed::examples::Ast f0, ::packed::examples::Ast f1) {
  return Ast{Ast::Mul{{::packed::box<::packed::examples::Ast>(std::move(f0)), ::packed::box<::packed::examples::Ast>(std::move(f1))}}};
}
inline Ast make_Div(::packed::examples::Ast f0, ::packed::examples::Ast f1) {
  return Ast{Ast::Div{{::packed::box<::packed::examples::Ast>(std::move(f0)), ::packed::box<::packed::examples::Ast>(std::move(f1))}}};
}

namespace plain {

using builder_Ast = ::packed::builder<::packed::layout_mode::plain, ::packed::examples::Ast>;

inline ::packed::buffer<::packed::layout_mode::plain, ::packed::examples::Ast> pack_Ast(const ::packed::examples::Ast& x) {
  return ::packed::pack<::packed::layout_mode::plain>(x);
}

inline ::packed::examples::Ast unpack_Ast(const ::packed::buffer<::packed::layout_mode::plain, ::packed::examples::Ast>& p) {
  return ::packed::unpack(p);
}

template <class... Rest>
std::pair<::packed::examples::Ast, ::packed::reader<::packed::layout_mode::plain, Rest...>> unpack_Ast(const ::packed::reader<::packed::layout_mode::plain, ::packed::examples::Ast, Rest...>& c) {
  return ::packed::unpack(c);
}

template <class... Rest, class KValue, class KAdd, class KSub, class KMul, class KDiv>
auto case_Ast(const ::packed::reader<::packed::layout_mode::plain, ::packed::examples::Ast, Rest...>& c, KValue&& on_Value, KAdd&& on_Add, KSub&& on_Sub, KMul&& on_Mul, KDiv&& on_Div) {
  return ::packed::case_of<::packed::examples::Ast>(c, std::forward<KValue>(on_Value), std::forward<KAdd>(on_Add), std::forward<KSub>(on_Sub), std::forward<KMul>(on_Mul), std::forward<KDiv>(on_Div));
}

template <class... RestIn, class... Pending, class R, class KValue, class KAdd, class KSub, class KMul, class KDiv>
auto transform_Ast(const ::packed::reader<::packed::layout_mode::plain, ::packed::examples::Ast, RestIn...>& c, ::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& out, KValue&& on_Value, KAdd&& on_Add, KSub&& on_Sub, KMul&& on_Mul, KDiv&& on_Div) {
  return ::packed::transform_of<::packed::examples::Ast>(c, std::move(out), std::forward<KValue>(on_Value), std::forward<KAdd>(on_Add), std::forward<KSub>(on_Sub), std::forward<KMul>(on_Mul), std::forward<KDiv>(on_Div));
}

template <class... Pending, class R>
auto start_Value(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 0>(std::move(b));
}

template <class... Pending, class R>
auto write_Value(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, ::packed::Int f0) {
  return ::packed::write_ctor<::packed::examples::Ast, 0>(std::move(b), f0);
}

template <class... Pending, class R>
auto start_Add(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 1>(std::move(b));
}

template <class... Pending, class R>
auto write_Add(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, const ::packed::examples::Ast& f0, const ::packed::examples::Ast& f1) {
  return ::packed::write_ctor<::packed::examples::Ast, 1>(std::move(b), f0, f1);
}

template <class... Pending, class R>
auto start_Sub(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 2>(std::move(b));
}

template <class... Pending, class R>
auto write_Sub(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, const ::packed::examples::Ast& f0, const ::packed::examples::Ast& f1) {
  return ::packed::write_ctor<::packed::examples::Ast, 2>(std::move(b), f0, f1);
}

template <class... Pending, class R>
auto start_Mul(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 3>(std::move(b));
}

template <class... Pending, class R>
auto write_Mul(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, const ::packed::examples::Ast& f0, const ::packed::examples::Ast& f1) {
  return ::packed::write_ctor<::packed::examples::Ast, 3>(std::move(b), f0, f1);
}

template <class... Pending, class R>
auto start_Div(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 4>(std::move(b));
}

template <class... Pending, class R>
auto write_Div(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, const ::packed::examples::Ast& f0, const ::packed::examples::Ast& f1) {
  return ::packed::write_ctor<::packed::examples::Ast, 4>(std::move(b), f0, f1);
}

}  // namespace plain

namespace indirect {

using builder_Ast = ::packed::builder<::packed::layout_mode::indirect, ::packed::examples::Ast>;

inline ::packed::buffer<::packed::layout_mode::indirect, ::packed::examples::Ast> pack_Ast(const ::packed::examples::Ast& x) {
  return ::packed::pack<::packed::layout_mode::indirect>(x);
}

inline ::packed::examples::Ast unpack_Ast(const ::packed::buffer<::packed::layout_mode::indirect, ::packed::examples::Ast>& p) {
  return ::packed::unpack(p);
}

template <class... Rest>
std::pair<::packed::examples::Ast, ::packed::reader<::packed::layout_mode::indirect, Rest...>> unpack_Ast(const ::packed::reader<::packed::layout_mode::indirect, ::packed::examples::Ast, Rest...>& c) {
  return ::packed::unpack(c);
}

template <class... Rest, class KValue, class KAdd, class KSub, class KMul, class KDiv>
auto case_Ast(const ::packed::reader<::packed::layout_mode::indirect, ::packed::examples::Ast, Rest...>& c, KValue&& on_Value, KAdd&& on_Add, KSub&& on_Sub, KMul&& on_Mul, KDiv&& on_Div) {
  return ::packed::case_of<::packed::examples::Ast>(c, std::forward<KValue>(on_Value), std::forward<KAdd>(on_Add), std::forward<KSub>(on_Sub), std::forward<KMul>(on_Mul), std::forward<KDiv>(on_Div));
}

template <class... RestIn, class... Pending, class R, class KValue, class KAdd, class KSub, class KMul, class KDiv>
auto transform_Ast(const ::packed::reader<::packed::layout_mode::indirect, ::packed::examples::Ast, RestIn...>& c, ::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& out, KValue&& on_Value, KAdd&& on_Add, KSub&& on_Sub, KMul&& on_Mul, KDiv&& on_Div) {
  return ::packed::transform_of<::packed::examples::Ast>(c, std::move(out), std::forward<KValue>(on_Value), std::forward<KAdd>(on_Add), std::forward<KSub>(on_Sub), std::forward<KMul>(on_Mul), std::forward<KDiv>(on_Div));
}

template <class... Pending, class R>
auto start_Value(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 0>(std::move(b));
}

template <class... Pending, class R>
auto write_Value(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, ::packed::Int f0) {
  return ::packed::write_ctor<::packed::examples::Ast, 0>(std::move(b), f0);
}

template <class... Pending, class R>
auto start_Add(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 1>(std::move(b));
}

template <class... Pending, class R>
auto write_Add(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, const ::packed::examples::Ast& f0, const ::packed::examples::Ast& f1) {
  return ::packed::write_ctor<::packed::examples::Ast, 1>(std::move(b), f0, f1);
}

template <class... Pending, class R>
auto start_Sub(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 2>(std::move(b));
}

template <class... Pending, class R>
auto write_Sub(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, const ::packed::examples::Ast& f0, const ::packed::examples::Ast& f1) {
  return ::packed::write_ctor<::packed::examples::Ast, 2>(std::move(b), f0, f1);
}

template <class... Pending, class R>
auto start_Mul(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 3>(std::move(b));
}

template <class... Pending, class R>
auto write_Mul(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, const ::packed::examples::Ast& f0, const ::packed::examples::Ast& f1) {
  return ::packed::write_ctor<::packed::examples::Ast, 3>(std::move(b), f0, f1);
}

template <class... Pending, class R>
auto start_Div(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 4>(std::move(b));
}

template <class... Pending, class R>
auto write_Div(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, const ::packed::examples::Ast& f0, const ::packed::examples::Ast& f1) {
  return ::packed::write_ctor<::packed::examples::Ast, 4>(std::move(b), f0, f1);
}

}  // namespace indirect

namespace indirect_skip_last {

using builder_Ast = ::packed::builder<::packed::layout_mode::indirect_skip_last, ::packed::examples::Ast>;

inline ::packed::buffer<::packed::layout_mode::indirect_skip_last, ::packed::examples::Ast> pack_Ast(const ::packed::examples::Ast& x) {
  return ::packed::pack<::packed::layout_mode::indirect_skip_last>(x);
}

inline ::packed::examples::Ast unpack_Ast(const ::packed::buffer<::packed::layout_mode::indirect_skip_last, ::packed::examples::Ast>& p) {
  return ::packed::unpack(p);
}

template <class... Rest>
std::pair<::packed::examples::Ast, ::packed::reader<::packed::layout_mode::indirect_skip_last, Rest...>> unpack_Ast(const ::packed::reader<::packed::layout_mode::indirect_skip_last, ::packed::examples::Ast, Rest...>& c) {
  return ::packed::unpack(c);
}

template <class... Rest, class KValue, class KAdd, class KSub, class KMul, class KDiv>
auto case_Ast(const ::packed::reader<::packed::layout_mode::indirect_skip_last, ::packed::examples::Ast, Rest...>& c, KValue&& on_Value, KAdd&& on_Add, KSub&& on_Sub, KMul&& on_Mul, KDiv&& on_Div) {
  return ::packed::case_of<::packed::examples::Ast>(c, std::forward<KValue>(on_Value), std::forward<KAdd>(on_Add), std::forward<KSub>(on_Sub), std::forward<KMul>(on_Mul), std::forward<KDiv>(on_Div));
}

template <class... RestIn, class... Pending, class R, class KValue, class KAdd, class KSub, class KMul, class KDiv>
auto transform_Ast(const ::packed::reader<::packed::layout_mode::indirect_skip_last, ::packed::examples::Ast, RestIn...>& c, ::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& out, KValue&& on_Value, KAdd&& on_Add, KSub&& on_Sub, KMul&& on_Mul, KDiv&& on_Div) {
  return ::packed::transform_of<::packed::examples::Ast>(c, std::move(out), std::forward<KValue>(on_Value), std::forward<KAdd>(on_Add), std::forward<KSub>(on_Sub), std::forward<KMul>(on_Mul), std::forward<KDiv>(on_Div));
}

template <class... Pending, class R>
auto start_Value(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 0>(std::move(b));
}

template <class... Pending, class R>
auto write_Value(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, ::packed::Int f0) {
  return ::packed::write_ctor<::packed::examples::Ast, 0>(std::move(b), f0);
}

template <class... Pending, class R>
auto start_Add(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 1>(std::move(b));
}

template <class... Pending, class R>
auto write_Add(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, const ::packed::examples::Ast& f0, const ::packed::examples::Ast& f1) {
  return ::packed::write_ctor<::packed::examples::Ast, 1>(std::move(b), f0, f1);
}

template <class... Pending, class R>
auto start_Sub(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 2>(std::move(b));
}

template <class... Pending, class R>
auto write_Sub(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, const ::packed::examples::Ast& f0, const ::packed::examples::Ast& f1) {
  return ::packed::write_ctor<::packed::examples::Ast, 2>(std::move(b), f0, f1);
}

template <class... Pending, class R>
auto start_Mul(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 3>(std::move(b));
}

template <class... Pending, class R>
auto write_Mul(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, const ::packed::examples::Ast& f0, const ::packed::examples::Ast& f1) {
  return ::packed::write_ctor<::packed::examples::Ast, 3>(std::move(b), f0, f1);
}

template <class... Pending, class R>
auto start_Div(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Ast, 4>(std::move(b));
}

template <class... Pending, class R>
auto write_Div(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Ast, Pending...>, R>&& b, const ::packed::examples::Ast& f0, const ::packed::examples::Ast& f1) {
  return ::packed::write_ctor<::packed::examples::Ast, 4>(std::move(b), f0, f1);
}

}  // namespace indirect_skip_last

}  // namespace packed::examples
