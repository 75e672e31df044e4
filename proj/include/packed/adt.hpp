#pragma once

// Compile-time description of algebraic data types.
//
// A packable ADT is a struct that doubles as its own descriptor:
//
//   struct Tree {
//     struct Leaf { std::tuple<packed::Int> fields; };
//     struct Node { std::tuple<packed::box<Tree>, packed::box<Tree>> fields; };
//     using constructors = packed::constructors<
//         packed::ctor<"Leaf", packed::Int>,
//         packed::ctor<"Node", Tree, Tree>>;
//     static constexpr std::string_view name = "Tree";
//     std::variant<Leaf, Node> alt;
//   };
//
// The variant alternatives line up with the constructor list, and each
// alternative's `fields` tuple holds Int for primitive fields and box<U> for
// references to an ADT U. The code generator emits exactly this shape.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <utility>
#include <variant>

#include "packed/wire.hpp"

namespace packed {

// Primitive field type.
using Int = std::int64_t;

// Obligation a reader must discharge when a field is preceded by its size.
struct FieldSize {
  std::uint32_t value = 0;
};

template <std::size_t N>
struct fixed_string {
  char chars[N]{};

  constexpr fixed_string(const char (&s)[N]) noexcept {
    for (std::size_t i = 0; i < N; ++i) chars[i] = s[i];
  }
  constexpr std::string_view view() const noexcept { return {chars, N - 1}; }
};

template <class... Ts>
struct type_list {
  static constexpr std::size_t size = sizeof...(Ts);
};

template <fixed_string Name, class... Fields>
struct ctor {
  static constexpr std::string_view name = Name.view();
  using fields = type_list<Fields...>;
  static constexpr std::size_t arity = sizeof...(Fields);
};

template <class... Ctors>
struct constructors {
  static_assert(sizeof...(Ctors) >= 1, "an ADT needs at least one constructor");
  static_assert(sizeof...(Ctors) <= max_constructors, "constructor tags are one byte");
  using list = type_list<Ctors...>;
  static constexpr std::size_t count = sizeof...(Ctors);
};

// Owning, deep-copying pointer for recursive fields.
template <class T>
class box {
 public:
  box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  box(const box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  box(box&&) noexcept = default;
  box& operator=(const box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  box& operator=(box&&) noexcept = default;
  ~box() = default;

  T& operator*() noexcept { return *ptr_; }
  const T& operator*() const noexcept { return *ptr_; }
  T* operator->() noexcept { return ptr_.get(); }
  const T* operator->() const noexcept { return ptr_.get(); }

  friend bool operator==(const box& a, const box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

template <class T>
concept packable_adt = requires {
  typename T::constructors;
  { T::name } -> std::convertible_to<std::string_view>;
} && requires(const T& x) {
  { x.alt.index() } -> std::convertible_to<std::size_t>;
};

template <class T>
concept obligation = std::same_as<T, Int> || packable_adt<T>;

// ---- type list utilities -------------------------------------------------

template <class... Lists>
struct concat;
template <>
struct concat<> {
  using type = type_list<>;
};
template <class... As>
struct concat<type_list<As...>> {
  using type = type_list<As...>;
};
template <class... As, class... Bs, class... More>
struct concat<type_list<As...>, type_list<Bs...>, More...> {
  using type = typename concat<type_list<As..., Bs...>, More...>::type;
};
template <class... Lists>
using concat_t = typename concat<Lists...>::type;

template <std::size_t I, class List>
struct list_at;
template <std::size_t I, class Head, class... Tail>
struct list_at<I, type_list<Head, Tail...>> : list_at<I - 1, type_list<Tail...>> {};
template <class Head, class... Tail>
struct list_at<0, type_list<Head, Tail...>> {
  using type = Head;
};
template <std::size_t I, class List>
using list_at_t = typename list_at<I, List>::type;

// ---- constructor access ---------------------------------------------------

template <packable_adt T>
inline constexpr std::size_t constructor_count = T::constructors::count;

template <packable_adt T, std::size_t I>
using constructor_at = list_at_t<I, typename T::constructors::list>;

template <packable_adt T, std::size_t I>
using fields_of = typename constructor_at<T, I>::fields;

template <packable_adt T, std::size_t I>
using alternative_t = std::variant_alternative_t<I, decltype(T::alt)>;

template <packable_adt T>
constexpr std::size_t ordinal_of(std::string_view name) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    std::size_t found = constructor_count<T>;
    ((constructor_at<T, I>::name == name ? (found = I, true) : false) || ...);
    return found;
  }(std::make_index_sequence<constructor_count<T>>{});
}

template <packable_adt T>
constexpr std::string_view constructor_name(std::size_t ordinal) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    std::string_view found;
    ((I == ordinal ? (found = constructor_at<T, I>::name, true) : false) || ...);
    return found;
  }(std::make_index_sequence<constructor_count<T>>{});
}

// Native storage of a field of obligation type F.
template <class F>
struct native_field {
  using type = box<F>;
};
template <>
struct native_field<Int> {
  using type = Int;
};
template <class F>
using native_field_t = typename native_field<F>::type;

template <class F>
constexpr const F& unbox(const box<F>& b) noexcept {
  return *b;
}
constexpr Int unbox(Int v) noexcept { return v; }
template <packable_adt F>
constexpr const F& unbox(const F& v) noexcept {
  return v;
}

namespace detail {

// Calls f.template operator()<I>() for the runtime index i < N.
template <std::size_t N, std::size_t I = 0, class F>
inline decltype(auto) with_index(std::size_t i, F&& f) {
  if constexpr (I + 1 == N) {
    return std::forward<F>(f).template operator()<I>();
  } else {
    if (i == I) return std::forward<F>(f).template operator()<I>();
    return with_index<N, I + 1>(i, std::forward<F>(f));
  }
}

template <class F, std::size_t... J>
constexpr void for_each_index_impl(F& f, std::index_sequence<J...>) {
  (f(std::integral_constant<std::size_t, J>{}), ...);
}

// Calls f(std::integral_constant<std::size_t, J>{}) for J = 0 .. N-1 in order.
template <std::size_t N, class F>
constexpr void for_each_index(F&& f) {
  for_each_index_impl(f, std::make_index_sequence<N>{});
}

}  // namespace detail

// ---- layout expansion -----------------------------------------------------

namespace detail {

template <layout_mode L, class Fields, class Seq>
struct reader_fields_impl;
template <layout_mode L, class... Fs, std::size_t... I>
struct reader_fields_impl<L, type_list<Fs...>, std::index_sequence<I...>> {
  using type = concat_t<std::conditional_t<has_field_size(L, I, sizeof...(Fs)),
                                           type_list<FieldSize, Fs>, type_list<Fs>>...>;
};

// Builder-side markers: reserve a size slot before the next field, and
// backpatch the innermost slot once the field is complete.
struct open_size {};
struct close_size {};

template <layout_mode L, class Fields, class Seq>
struct builder_fields_impl;
template <layout_mode L, class... Fs, std::size_t... I>
struct builder_fields_impl<L, type_list<Fs...>, std::index_sequence<I...>> {
  using type = concat_t<std::conditional_t<has_field_size(L, I, sizeof...(Fs)),
                                           type_list<open_size, Fs, close_size>,
                                           type_list<Fs>>...>;
};

}  // namespace detail

// Field sequence a reader sees inside a constructor: FieldSize entries are
// interleaved wherever the layout puts them.
template <layout_mode L, class Fields>
using reader_fields_t =
    typename detail::reader_fields_impl<L, Fields, std::make_index_sequence<Fields::size>>::type;

template <layout_mode L, class Fields>
using builder_fields_t =
    typename detail::builder_fields_impl<L, Fields, std::make_index_sequence<Fields::size>>::type;

}  // namespace packed
