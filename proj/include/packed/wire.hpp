#pragma once

// Wire encoding shared by every part of the library.
//
//   tag         1 byte, 0-based constructor declaration index
//   Int         8 bytes, little-endian two's complement
//   field size  4 bytes, little-endian unsigned; the full byte extent of the
//               field that follows it (nested tags and sizes included)
//
// Fields are packed back to back with no padding. Which fields get a size
// prefix is decided buffer-wide by a layout_mode.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <string>
#include <string_view>

#include "packed/error.hpp"

namespace packed {

enum class layout_mode : std::uint8_t {
  plain,               // no field sizes
  indirect,            // a field size before every field
  indirect_skip_last,  // a field size before every field but the last of each constructor
};

inline constexpr std::array<layout_mode, 3> all_layouts{
    layout_mode::plain, layout_mode::indirect, layout_mode::indirect_skip_last};

constexpr std::string_view to_string(layout_mode layout) noexcept {
  switch (layout) {
    case layout_mode::plain: return "plain";
    case layout_mode::indirect: return "indirect";
    case layout_mode::indirect_skip_last: return "indirect-skip-last";
  }
  return "?";
}

constexpr std::optional<layout_mode> parse_layout(std::string_view text) noexcept {
  for (auto layout : all_layouts) {
    if (text == to_string(layout)) return layout;
  }
  return std::nullopt;
}

// Whether field `index` of a constructor with `count` fields is preceded by a
// field size under `layout`.
constexpr bool has_field_size(layout_mode layout, std::size_t index, std::size_t count) noexcept {
  switch (layout) {
    case layout_mode::plain: return false;
    case layout_mode::indirect: return true;
    case layout_mode::indirect_skip_last: return index + 1 < count;
  }
  return false;
}

using bytes_view = std::span<const std::byte>;

// Calls f with std::integral_constant<layout_mode, layout>, turning a runtime
// layout into a template argument. Every branch must return the same type.
template <class F>
decltype(auto) visit_layout(layout_mode layout, F&& f) {
  using lm = layout_mode;
  switch (layout) {
    case lm::indirect: return std::forward<F>(f)(std::integral_constant<lm, lm::indirect>{});
    case lm::indirect_skip_last:
      return std::forward<F>(f)(std::integral_constant<lm, lm::indirect_skip_last>{});
    case lm::plain: break;
  }
  return std::forward<F>(f)(std::integral_constant<lm, lm::plain>{});
}

inline constexpr std::size_t tag_width = 1;
inline constexpr std::size_t int_width = 8;
inline constexpr std::size_t field_size_width = 4;
inline constexpr std::uint64_t max_field_size = 0xFFFF'FFFFull;
inline constexpr std::size_t max_constructors = 256;

namespace detail {

template <class U>
constexpr U to_little(U v) noexcept {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else if constexpr (sizeof(U) == 8) {
    return __builtin_bswap64(v);
  } else {
    static_assert(sizeof(U) == 4);
    return __builtin_bswap32(v);
  }
}

template <class U>
inline U load_le(const std::byte* p) noexcept {
  U v;
  std::memcpy(&v, p, sizeof(U));
  return to_little(v);
}

template <class U>
inline void store_le(std::byte* p, U v) noexcept {
  v = to_little(v);
  std::memcpy(p, &v, sizeof(U));
}

inline void require(bytes_view bytes, std::size_t offset, std::size_t width, std::string_view what) {
  if (offset > bytes.size() || bytes.size() - offset < width) {
    throw error(errc::out_of_bounds,
                std::string(what) + " needs " + std::to_string(width) + " bytes, " +
                    std::to_string(offset > bytes.size() ? 0 : bytes.size() - offset) +
                    " remain",
                offset);
  }
}

}  // namespace detail

inline std::array<std::byte, int_width> encode_int64(std::int64_t value) noexcept {
  std::array<std::byte, int_width> out;
  detail::store_le(out.data(), static_cast<std::uint64_t>(value));
  return out;
}

inline std::int64_t decode_int64(bytes_view bytes, std::size_t offset) {
  detail::require(bytes, offset, int_width, "Int");
  return static_cast<std::int64_t>(detail::load_le<std::uint64_t>(bytes.data() + offset));
}

inline std::array<std::byte, field_size_width> encode_field_size(std::uint64_t n) {
  if (n > max_field_size) {
    throw error(errc::field_too_large,
                "field of " + std::to_string(n) + " bytes does not fit a 32-bit size");
  }
  std::array<std::byte, field_size_width> out;
  detail::store_le(out.data(), static_cast<std::uint32_t>(n));
  return out;
}

inline std::uint32_t decode_field_size(bytes_view bytes, std::size_t offset) {
  detail::require(bytes, offset, field_size_width, "field size");
  return detail::load_le<std::uint32_t>(bytes.data() + offset);
}

inline std::byte encode_tag(std::size_t ordinal) {
  if (ordinal >= max_constructors) {
    throw error(errc::invalid_ordinal,
                "constructor ordinal " + std::to_string(ordinal) + " does not fit a tag byte");
  }
  return static_cast<std::byte>(ordinal);
}

inline std::uint8_t decode_tag(bytes_view bytes, std::size_t offset, std::size_t n_constructors) {
  detail::require(bytes, offset, tag_width, "tag");
  auto tag = std::to_integer<std::uint8_t>(bytes[offset]);
  if (tag >= n_constructors) {
    throw error(errc::invalid_tag,
                "tag " + std::to_string(tag) + " but only " + std::to_string(n_constructors) +
                    " constructors",
                offset);
  }
  return tag;
}

}  // namespace packed
