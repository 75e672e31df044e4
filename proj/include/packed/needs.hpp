#pragma once

// Write side: a typestate builder that owes a list of values.
//
//   packed::builder<packed::layout_mode::indirect, Tree> b;     // owes [Tree]
//   auto b1 = packed::start<Tree, "Node">(std::move(b));        // owes [Tree, Tree]
//   auto b2 = packed::write_value(std::move(b1), leaf);         // owes [Tree]
//   auto b3 = packed::write_value(std::move(b2), leaf);         // owes []
//   packed::buffer<packed::layout_mode::indirect, Tree> p = packed::finish(std::move(b3));
//
// Writing a value that does not match the head of the pending list, or
// finishing while something is still owed, does not compile. Field sizes are
// reserved and backpatched internally and never appear in the pending list:
// the same writing code serves every layout.
//
// A builder handle is consumed by every operation. Reusing a moved-from handle
// throws errc::type_state_violation and leaves the accumulated bytes intact.

#include <cassert>
#include <cstddef>
#include <cstring>
#include <memory>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "packed/adt.hpp"
#include "packed/buffer.hpp"
#include "packed/error.hpp"
#include "packed/wire.hpp"

namespace packed {

namespace detail {

// Byte accumulator plus the stack of reserved size slots still open.
class sink {
 public:
  void reserve(std::size_t n) { bytes_.reserve(n); }

  void put_tag(std::size_t ordinal) { bytes_.push_back(encode_tag(ordinal)); }

  void put_int(Int value) {
    auto at = bytes_.size();
    bytes_.resize(at + int_width);
    store_le(bytes_.data() + at, static_cast<std::uint64_t>(value));
  }

  void put_raw(bytes_view raw) { bytes_.insert(bytes_.end(), raw.begin(), raw.end()); }

  void open_slot() {
    slots_.push_back(bytes_.size());
    bytes_.resize(bytes_.size() + field_size_width);
  }

  void close_slot() {
    assert(!slots_.empty());
    auto slot = slots_.back();
    slots_.pop_back();
    auto encoded = encode_field_size(bytes_.size() - slot - field_size_width);
    std::memcpy(bytes_.data() + slot, encoded.data(), encoded.size());
  }

  std::size_t open_slots() const noexcept { return slots_.size(); }
  const std::vector<std::byte>& bytes() const noexcept { return bytes_; }
  std::vector<std::byte> take_bytes() noexcept { return std::move(bytes_); }

 private:
  std::vector<std::byte> bytes_;
  std::vector<std::size_t> slots_;
};

// Discharges leading markers of a pending list, both in the type and on the sink.
template <class List>
struct settle {
  using type = List;
  static void run(sink&) noexcept {}
};
template <class... Ts>
struct settle<type_list<open_size, Ts...>> {
  using type = typename settle<type_list<Ts...>>::type;
  static void run(sink& s) {
    s.open_slot();
    settle<type_list<Ts...>>::run(s);
  }
};
template <class... Ts>
struct settle<type_list<close_size, Ts...>> {
  using type = typename settle<type_list<Ts...>>::type;
  static void run(sink& s) {
    s.close_slot();
    settle<type_list<Ts...>>::run(s);
  }
};
template <class List>
using settle_t = typename settle<List>::type;

template <class List>
struct strip_markers;
template <class... Ts>
struct strip_markers<type_list<Ts...>> {
  using type = concat_t<std::conditional_t<
      std::is_same_v<Ts, open_size> || std::is_same_v<Ts, close_size>, type_list<>,
      type_list<Ts>>...>;
};

template <layout_mode L, class F>
void emit(sink& s, const F& value);

template <layout_mode L, class T, std::size_t I, class Tuple>
void emit_fields(sink& s, const Tuple& fields) {
  using declared = fields_of<T, I>;
  static_assert(std::tuple_size_v<Tuple> == declared::size, "wrong number of fields");
  for_each_index<declared::size>([&](auto j) {
    constexpr std::size_t J = decltype(j)::value;
    constexpr bool sized = has_field_size(L, J, declared::size);
    if constexpr (sized) s.open_slot();
    emit<L, list_at_t<J, declared>>(s, unbox(std::get<J>(fields)));
    if constexpr (sized) s.close_slot();
  });
}

template <layout_mode L, class F>
void emit(sink& s, const F& value) {
  if constexpr (std::is_same_v<F, Int>) {
    s.put_int(value);
  } else {
    with_index<constructor_count<F>>(value.alt.index(), [&]<std::size_t I>() {
      s.put_tag(I);
      emit_fields<L, F, I>(s, std::get<I>(value.alt).fields);
    });
  }
}

struct needs_access;

}  // namespace detail

// Result marker of a builder scoped to a single obligation (see apply_field);
// such builders cannot be finished.
struct nested {};

template <layout_mode L, class Pending, class Result>
class needs;

template <layout_mode L, class... Pending, class Result>
class needs<L, type_list<Pending...>, Result> {
 public:
  using pending = typename detail::strip_markers<type_list<Pending...>>::type;
  using result = Result;
  static constexpr layout_mode layout = L;

  needs()
    requires(std::is_same_v<type_list<Pending...>, Result> && sizeof...(Pending) > 0)
      : state_(std::make_unique<detail::sink>()) {}

  needs(needs&&) noexcept = default;
  needs& operator=(needs&&) noexcept = default;
  needs(const needs&) = delete;
  needs& operator=(const needs&) = delete;

  bool valid() const noexcept { return state_ != nullptr; }
  std::size_t size_bytes() const noexcept { return state_ ? state_->bytes().size() : 0; }
  bytes_view written() const noexcept {
    return state_ ? bytes_view(state_->bytes()) : bytes_view();
  }
  std::size_t open_frames() const noexcept { return state_ ? state_->open_slots() : 0; }

  void reserve(std::size_t n) {
    if (state_) state_->reserve(n);
  }

 private:
  friend struct detail::needs_access;
  explicit needs(std::unique_ptr<detail::sink> state) noexcept : state_(std::move(state)) {}

  std::unique_ptr<detail::sink> state_;
};

template <layout_mode L, class... Ts>
using builder = needs<L, type_list<Ts...>, type_list<Ts...>>;

namespace detail {

struct needs_access {
  template <layout_mode L, class P, class R>
  static std::unique_ptr<sink> take(needs<L, P, R>& b) {
    if (!b.state_) {
      throw error(errc::type_state_violation, "builder used after it was consumed");
    }
    return std::move(b.state_);
  }

  // Re-types the accumulator as owing `Next`, discharging leading markers.
  template <layout_mode L, class Next, class R>
  static needs<L, settle_t<Next>, R> resume(std::unique_ptr<sink> s) {
    settle<Next>::run(*s);
    return needs<L, settle_t<Next>, R>(std::move(s));
  }
};

}  // namespace detail

// Writes constructor I's tag; the head obligation T is replaced by the
// constructor's fields.
template <packable_adt T, std::size_t I, layout_mode L, class... Rest, class R>
  requires(I < constructor_count<T>)
auto start(needs<L, type_list<T, Rest...>, R>&& b) {
  auto s = detail::needs_access::take(b);
  s->put_tag(I);
  using next = concat_t<builder_fields_t<L, fields_of<T, I>>, type_list<Rest...>>;
  return detail::needs_access::resume<L, next, R>(std::move(s));
}

template <packable_adt T, fixed_string Name, layout_mode L, class... Rest, class R>
  requires(ordinal_of<T>(Name.view()) < constructor_count<T>)
auto start(needs<L, type_list<T, Rest...>, R>&& b) {
  return start<T, ordinal_of<T>(Name.view())>(std::move(b));
}

template <layout_mode L, class... Rest, class R>
auto write_prim(needs<L, type_list<Int, Rest...>, R>&& b, Int value) {
  auto s = detail::needs_access::take(b);
  s->put_int(value);
  return detail::needs_access::resume<L, type_list<Rest...>, R>(std::move(s));
}

// Writes a complete native value; byte-identical to the equivalent sequence of
// start / write_prim calls.
template <layout_mode L, class H, class... Rest, class R>
  requires obligation<H>
auto write_value(needs<L, type_list<H, Rest...>, R>&& b, const H& value) {
  auto s = detail::needs_access::take(b);
  detail::emit<L, H>(*s, value);
  return detail::needs_access::resume<L, type_list<Rest...>, R>(std::move(s));
}

// start<T, I> followed by one write_value per field.
template <packable_adt T, std::size_t I, layout_mode L, class... Rest, class R, class... Args>
  requires(I < constructor_count<T> && sizeof...(Args) == fields_of<T, I>::size)
auto write_ctor(needs<L, type_list<T, Rest...>, R>&& b, const Args&... args) {
  auto s = detail::needs_access::take(b);
  s->put_tag(I);
  detail::emit_fields<L, T, I>(*s, std::tie(args...));
  return detail::needs_access::resume<L, type_list<Rest...>, R>(std::move(s));
}

// Appends an already packed value in place of the head obligation.
template <layout_mode L, class H, class... Rest, class R>
auto write_packed(needs<L, type_list<H, Rest...>, R>&& b, const buffer<L, H>& value) {
  auto s = detail::needs_access::take(b);
  s->put_raw(value.bytes());
  return detail::needs_access::resume<L, type_list<Rest...>, R>(std::move(s));
}

// Plain composition point: apply(b, k) is k(b).
template <layout_mode L, class P, class R, class K>
auto apply(needs<L, P, R>&& b, K&& step) -> std::invoke_result_t<K, needs<L, P, R>&&> {
  return std::forward<K>(step)(std::move(b));
}

// Runs `step` on a builder that owes only the head obligation, then resumes
// the outer pending list. This keeps recursive writers at a fixed set of
// types: each level of recursion sees needs<L, [H], nested>.
template <layout_mode L, class H, class... Rest, class R, class K>
auto apply_field(needs<L, type_list<H, Rest...>, R>&& b, K&& step) {
  using scoped = needs<L, type_list<H>, nested>;
  using done = needs<L, type_list<>, nested>;
  static_assert(std::is_same_v<std::invoke_result_t<K, scoped&&>, done>,
                "a field step must discharge exactly the obligation it is given");
  auto inner = detail::needs_access::resume<L, type_list<H>, nested>(
      detail::needs_access::take(b));
  done finished = std::forward<K>(step)(std::move(inner));
  return detail::needs_access::resume<L, type_list<Rest...>, R>(
      detail::needs_access::take(finished));
}

template <layout_mode L, class... Ts>
buffer<L, Ts...> finish(needs<L, type_list<>, type_list<Ts...>>&& b) {
  auto s = detail::needs_access::take(b);
  assert(s->open_slots() == 0);
  return buffer<L, Ts...>(s->take_bytes());
}

template <layout_mode L, obligation T>
buffer<L, T> pack(const T& value) {
  return finish(write_value(builder<L, T>{}, value));
}

}  // namespace packed
