#pragma once

// Packed-to-packed rewriting: read a constructor from the input, write the
// same constructor to the output, and let a continuation fill in its fields.

#include <cstddef>
#include <tuple>
#include <type_traits>
#include <utility>

#include "packed/needs.hpp"
#include "packed/reader.hpp"

namespace packed {

// Continuation I is called with (reader<In, fields of I...>,
// needs<Out, fields of I..., nested>) and returns {needs<Out, [], nested>,
// reader<In>}: it consumes the input fields and discharges the output
// obligations. Input and output layouts may differ.
template <packable_adt T, layout_mode In, class... RestIn, layout_mode Out, class... Pending,
          class R, class... Ks>
  requires(sizeof...(Ks) == constructor_count<T>)
auto transform_of(const reader<In, T, RestIn...>& c, needs<Out, type_list<T, Pending...>, R>&& out,
                  Ks&&... ks) {
  using raccess = detail::reader_access;
  using waccess = detail::needs_access;
  using result_type = std::pair<needs<Out, detail::settle_t<type_list<Pending...>>, R>,
                                reader<In, RestIn...>>;
  constexpr std::size_t n = constructor_count<T>;

  auto tag = decode_tag(c.bytes(), c.offset(), n);
  raccess::count(c, tag_width);
  auto sink = waccess::take(out);
  sink->put_tag(tag);
  auto body = c.offset() + tag_width;

  auto conts = std::forward_as_tuple(std::forward<Ks>(ks)...);
  return detail::with_index<n>(tag, [&]<std::size_t I>() -> result_type {
    auto fields = raccess::retype_list<reader_fields_t<In, fields_of<T, I>>>(c, body);
    auto scoped = waccess::resume<Out, builder_fields_t<Out, fields_of<T, I>>, nested>(
        std::move(sink));
    auto [done, end] = std::get<I>(conts)(fields, std::move(scoped));
    static_assert(std::is_same_v<decltype(done), needs<Out, type_list<>, nested>>,
                  "a transform continuation must discharge every output field");
    static_assert(std::is_same_v<decltype(end), reader<In>>,
                  "a transform continuation must consume every input field");
    return {waccess::resume<Out, type_list<Pending...>, R>(waccess::take(done)),
            raccess::retype<RestIn...>(end, end.offset())};
  });
}

// Copies the next value verbatim. Both sides share a layout, so the bytes
// are already in output form.
template <layout_mode L, class H, class... RestIn, class... Pending, class R>
  requires obligation<H>
auto copy_value(const reader<L, H, RestIn...>& c, needs<L, type_list<H, Pending...>, R>&& out) {
  auto next = skip_value(c);
  auto sink = detail::needs_access::take(out);
  sink->put_raw(c.bytes().subspan(c.offset(), next.offset() - c.offset()));
  return std::pair{
      detail::needs_access::resume<L, type_list<Pending...>, R>(std::move(sink)), next};
}

// Rewrites one field in isolation: `step` receives the cursor and a builder
// that owes only the head obligation, and returns {needs<Out, [], nested>,
// cursor}. Recursive transforms go through here so that every level sees the
// same builder type.
template <layout_mode In, class... Ts, layout_mode Out, class H, class... Pending, class R, class K>
auto transform_field(const reader<In, Ts...>& c, needs<Out, type_list<H, Pending...>, R>&& out,
                     K&& step) {
  using waccess = detail::needs_access;
  auto inner = waccess::resume<Out, type_list<H>, nested>(waccess::take(out));
  auto [done, next] = std::forward<K>(step)(c, std::move(inner));
  static_assert(std::is_same_v<decltype(done), needs<Out, type_list<>, nested>>,
                "a field step must discharge exactly the obligation it is given");
  return std::pair{waccess::resume<Out, type_list<Pending...>, R>(waccess::take(done)), next};
}

}  // namespace packed
