#pragma once

// Read side: a cursor typed by the list of values still ahead of it.
//
// Every read is constrained on the head of that list, so reading an Int where
// a Tree is expected, or skipping a field size that the layout does not have,
// fails to compile. Failures that depend on the bytes (bad tags, truncated
// buffers) throw packed::error.
//
// case_of hands each continuation a cursor scoped to the matched
// constructor's fields; the continuation must return its result together with
// a cursor that has consumed all of them (reader<L>). The outer suffix is
// restored afterwards. Scoping keeps recursive traversals to a finite set of
// template instantiations.

#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>

#include "packed/adt.hpp"
#include "packed/buffer.hpp"
#include "packed/error.hpp"
#include "packed/wire.hpp"

namespace packed {

// Deepest constructor nesting the generic decoders will follow.
inline constexpr unsigned max_nesting = 10'000;

namespace detail {
struct reader_access;
}

template <layout_mode L, class... Ts>
class reader {
 public:
  using remaining = type_list<Ts...>;
  static constexpr layout_mode layout = L;

  // Unchecked cast: the caller asserts that `bytes` at `offset` holds Ts...
  // under L. An optional counter accumulates the bytes every read inspects.
  static reader unchecked(bytes_view bytes, std::size_t offset = 0,
                          std::size_t* counter = nullptr) noexcept {
    return reader(bytes, offset, counter);
  }

  std::size_t offset() const noexcept { return offset_; }
  bytes_view bytes() const noexcept { return bytes_; }
  std::size_t* counter() const noexcept { return counter_; }

 private:
  friend struct detail::reader_access;
  reader(bytes_view bytes, std::size_t offset, std::size_t* counter) noexcept
      : bytes_(bytes), offset_(offset), counter_(counter) {}

  bytes_view bytes_;
  std::size_t offset_ = 0;
  std::size_t* counter_ = nullptr;
};

template <layout_mode L, class List>
struct reader_of;
template <layout_mode L, class... Ts>
struct reader_of<L, type_list<Ts...>> {
  using type = reader<L, Ts...>;
};
template <layout_mode L, class List>
using reader_of_t = typename reader_of<L, List>::type;

namespace detail {

struct reader_access {
  template <class... Us, layout_mode L, class... Ts>
  static reader<L, Us...> retype(const reader<L, Ts...>& c, std::size_t offset) noexcept {
    return reader<L, Us...>(c.bytes_, offset, c.counter_);
  }

  template <class List, layout_mode L, class... Ts>
  static reader_of_t<L, List> retype_list(const reader<L, Ts...>& c, std::size_t offset) noexcept {
    return reader_of_t<L, List>::unchecked(c.bytes_, offset, c.counter_);
  }

  template <layout_mode L, class... Ts>
  static void count(const reader<L, Ts...>& c, std::size_t n) noexcept {
    if (c.counter_) *c.counter_ += n;
  }
};

template <layout_mode L, class F>
std::size_t skip(bytes_view bytes, std::size_t offset, unsigned depth = 0);

template <layout_mode L, class T, std::size_t I>
std::size_t skip_fields(bytes_view bytes, std::size_t offset, unsigned depth) {
  using declared = fields_of<T, I>;
  for_each_index<declared::size>([&](auto j) {
    constexpr std::size_t J = decltype(j)::value;
    if constexpr (has_field_size(L, J, declared::size)) {
      detail::require(bytes, offset, field_size_width, "field size");
      offset += field_size_width;
    }
    offset = skip<L, list_at_t<J, declared>>(bytes, offset, depth + 1);
  });
  return offset;
}

// Offset just past the value starting at `offset`; walks every constructor.
template <layout_mode L, class F>
std::size_t skip(bytes_view bytes, std::size_t offset, unsigned depth) {
  if constexpr (std::is_same_v<F, Int>) {
    detail::require(bytes, offset, int_width, "Int");
    return offset + int_width;
  } else {
    if (depth > max_nesting) throw error(errc::nesting_too_deep, "value nests too deeply", offset);
    auto tag = decode_tag(bytes, offset, constructor_count<F>);
    return with_index<constructor_count<F>>(tag, [&]<std::size_t I>() {
      return skip_fields<L, F, I>(bytes, offset + tag_width, depth);
    });
  }
}

template <layout_mode L, class F>
F decode(bytes_view bytes, std::size_t& offset, unsigned depth);

template <layout_mode L, class T, std::size_t I, std::size_t J>
auto decode_field(bytes_view bytes, std::size_t& offset, unsigned depth) {
  using declared = fields_of<T, I>;
  using field = list_at_t<J, declared>;
  if constexpr (has_field_size(L, J, declared::size)) {
    auto slot = offset;
    auto recorded = decode_field_size(bytes, offset);
    offset += field_size_width;
    auto start = offset;
    native_field_t<field> value{decode<L, field>(bytes, offset, depth + 1)};
    if (offset - start != recorded) {
      throw error(errc::field_size_mismatch, "field size disagrees with the field it precedes",
                  slot, offset - start, recorded);
    }
    return value;
  } else {
    return native_field_t<field>{decode<L, field>(bytes, offset, depth + 1)};
  }
}

template <layout_mode L, class T, std::size_t I>
auto decode_fields(bytes_view bytes, std::size_t& offset, unsigned depth) {
  using declared = fields_of<T, I>;
  return [&]<std::size_t... J>(std::index_sequence<J...>) {
    // Braced initialisation evaluates the fields left to right.
    return std::tuple<native_field_t<list_at_t<J, declared>>...>{
        decode_field<L, T, I, J>(bytes, offset, depth)...};
  }(std::make_index_sequence<declared::size>{});
}

// Full native reconstruction, verifying tags and every field size.
template <layout_mode L, class F>
F decode(bytes_view bytes, std::size_t& offset, unsigned depth) {
  if constexpr (std::is_same_v<F, Int>) {
    auto v = decode_int64(bytes, offset);
    offset += int_width;
    return v;
  } else {
    if (depth > max_nesting) throw error(errc::nesting_too_deep, "value nests too deeply", offset);
    auto tag = decode_tag(bytes, offset, constructor_count<F>);
    offset += tag_width;
    return with_index<constructor_count<F>>(tag, [&]<std::size_t I>() -> F {
      using variant_type = decltype(F::alt);
      return F{variant_type(std::in_place_index<I>,
                            alternative_t<F, I>{decode_fields<L, F, I>(bytes, offset, depth)})};
    });
  }
}

template <class K, class Arg>
struct continuation_value {
  using type = typename std::invoke_result_t<K, Arg&>::first_type;
};

template <class T, layout_mode L, class Conts, class Seq>
struct case_value;
template <class T, layout_mode L, class Conts, std::size_t... I>
struct case_value<T, L, Conts, std::index_sequence<I...>> {
  using type = std::common_type_t<typename continuation_value<
      std::tuple_element_t<I, Conts>, reader_of_t<L, reader_fields_t<L, fields_of<T, I>>>>::type...>;
};

}  // namespace detail

template <layout_mode L, class... Ts>
reader<L, Ts...> begin(const buffer<L, Ts...>& p, std::size_t* counter = nullptr) noexcept {
  return reader<L, Ts...>::unchecked(p.bytes(), 0, counter);
}
template <layout_mode L, class... Ts>
reader<L, Ts...> begin(buffer<L, Ts...>&&, std::size_t* = nullptr) = delete;

// Runs `r` over the buffer from offset 0. When `r` consumes everything the
// produced value is returned; otherwise the value comes paired with the
// cursor positioned at the remaining values.
template <layout_mode L, class... Ts, class R>
auto run_reader(const buffer<L, Ts...>& p, R&& r) {
  auto [value, rest] = std::forward<R>(r)(begin(p));
  if constexpr (std::is_same_v<decltype(rest), reader<L>>) {
    return value;
  } else {
    return std::pair{std::move(value), rest};
  }
}

template <layout_mode L, class... Rest>
std::pair<Int, reader<L, Rest...>> read_prim(const reader<L, Int, Rest...>& c) {
  auto value = decode_int64(c.bytes(), c.offset());
  detail::reader_access::count(c, int_width);
  return {value, detail::reader_access::retype<Rest...>(c, c.offset() + int_width)};
}

template <layout_mode L, class... Rest>
std::pair<std::uint32_t, reader<L, Rest...>> read_field_size(const reader<L, FieldSize, Rest...>& c) {
  auto size = decode_field_size(c.bytes(), c.offset());
  detail::reader_access::count(c, field_size_width);
  return {size, detail::reader_access::retype<Rest...>(c, c.offset() + field_size_width)};
}

template <layout_mode L, class... Rest>
reader<L, Rest...> skip_field_size(const reader<L, FieldSize, Rest...>& c) {
  return read_field_size(c).second;
}

// Skips a leading field size if the layout put one here; a no-op otherwise.
// Lets one traversal serve every layout.
template <layout_mode L, class Head, class... Rest>
auto skip_field_size_if_any(const reader<L, Head, Rest...>& c) {
  if constexpr (std::is_same_v<Head, FieldSize>) {
    return skip_field_size(c);
  } else {
    return c;
  }
}

// Moves past the next field without inspecting it. `n` must be the field size
// read immediately before it.
template <layout_mode L, class Field, class... Rest>
  requires(!std::is_same_v<Field, FieldSize>)
reader<L, Rest...> jump_over_field(const reader<L, Field, Rest...>& c, std::uint32_t n) {
  if (n > c.bytes().size() - c.offset()) {
    throw error(errc::out_of_bounds,
                "jump of " + std::to_string(n) + " bytes runs past the buffer", c.offset());
  }
  return detail::reader_access::retype<Rest...>(c, c.offset() + n);
}

// Simulated pattern match: one continuation per constructor, in declaration
// order. Continuation I is called with reader<L, fields of I...> (field sizes
// included per layout) and returns {value, reader<L>}.
template <packable_adt T, layout_mode L, class... Rest, class... Ks>
  requires(sizeof...(Ks) == constructor_count<T>)
auto case_of(const reader<L, T, Rest...>& c, Ks&&... ks) {
  using access = detail::reader_access;
  constexpr std::size_t n = constructor_count<T>;
  auto tag = decode_tag(c.bytes(), c.offset(), n);
  access::count(c, tag_width);
  auto body = c.offset() + tag_width;

  auto conts = std::forward_as_tuple(std::forward<Ks>(ks)...);
  using value_type = typename detail::case_value<T, L, decltype(conts),
                                                 std::make_index_sequence<n>>::type;

  return detail::with_index<n>(tag, [&]<std::size_t I>() -> std::pair<value_type, reader<L, Rest...>> {
    auto fields = access::retype_list<reader_fields_t<L, fields_of<T, I>>>(c, body);
    auto [value, end] = std::get<I>(conts)(fields);
    static_assert(std::is_same_v<decltype(end), reader<L>>,
                  "a case continuation must consume every field of its constructor");
    return {std::move(value), access::retype<Rest...>(end, end.offset())};
  });
}

template <layout_mode L, class H, class... Rest>
  requires obligation<H>
std::pair<H, reader<L, Rest...>> unpack(const reader<L, H, Rest...>& c) {
  auto offset = c.offset();
  H value = detail::decode<L, H>(c.bytes(), offset, 0);
  detail::reader_access::count(c, offset - c.offset());
  return {std::move(value), detail::reader_access::retype<Rest...>(c, offset)};
}

// Unpacks a buffer holding exactly one value; trailing bytes are an error.
template <layout_mode L, class H>
H unpack(const buffer<L, H>& p) {
  auto [value, rest] = unpack(begin(p));
  if (rest.offset() != p.size()) {
    throw error(errc::trailing_bytes,
                std::to_string(p.size() - rest.offset()) + " bytes after the value",
                rest.offset());
  }
  return std::move(value);
}

template <layout_mode L, class H, class... Rest>
  requires obligation<H>
reader<L, Rest...> skip_value(const reader<L, H, Rest...>& c) {
  auto end = detail::skip<L, H>(c.bytes(), c.offset());
  detail::reader_access::count(c, end - c.offset());
  return detail::reader_access::retype<Rest...>(c, end);
}

// Offset arithmetic with bounds checks and nothing else: the caller supplies
// the layout knowledge the typed reader would otherwise enforce.
class raw_cursor {
 public:
  explicit raw_cursor(bytes_view bytes, std::size_t offset = 0,
                      std::size_t* counter = nullptr) noexcept
      : bytes_(bytes), offset_(offset), counter_(counter) {}

  std::uint8_t read_tag() {
    detail::require(bytes_, offset_, tag_width, "tag");
    auto tag = std::to_integer<std::uint8_t>(bytes_[offset_]);
    advance(tag_width);
    return tag;
  }

  Int read_int() {
    detail::require(bytes_, offset_, int_width, "Int");
    auto v = static_cast<Int>(detail::load_le<std::uint64_t>(bytes_.data() + offset_));
    advance(int_width);
    return v;
  }

  std::uint32_t read_size() {
    detail::require(bytes_, offset_, field_size_width, "field size");
    auto v = detail::load_le<std::uint32_t>(bytes_.data() + offset_);
    advance(field_size_width);
    return v;
  }

  void skip(std::size_t n) {
    if (offset_ > bytes_.size() || n > bytes_.size() - offset_) {
      throw error(errc::out_of_bounds, "skip of " + std::to_string(n) + " bytes", offset_);
    }
    offset_ += n;
  }

  std::size_t offset() const noexcept { return offset_; }

 private:
  void advance(std::size_t n) noexcept {
    offset_ += n;
    if (counter_) *counter_ += n;
  }

  bytes_view bytes_;
  std::size_t offset_;
  std::size_t* counter_;
};

}  // namespace packed
