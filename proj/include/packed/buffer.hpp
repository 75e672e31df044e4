#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "packed/adt.hpp"
#include "packed/wire.hpp"

namespace packed {

// An immutable packed byte sequence holding values of types Ts... laid out
// under L. Construction from bytes is an unchecked O(1) cast; well-formedness
// is established on demand by validate_buffer or surfaces as read errors.
template <layout_mode L, class... Ts>
class buffer {
 public:
  using contents = type_list<Ts...>;
  static constexpr layout_mode layout = L;

  buffer() = default;
  explicit buffer(std::vector<std::byte> bytes) noexcept : bytes_(std::move(bytes)) {}

  bytes_view bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }
  std::vector<std::byte> release() && noexcept { return std::move(bytes_); }

  friend bool operator==(const buffer&, const buffer&) = default;

 private:
  std::vector<std::byte> bytes_;
};

template <layout_mode L, class... Ts>
buffer<L, Ts...> from_bytes(std::vector<std::byte> bytes) noexcept {
  return buffer<L, Ts...>(std::move(bytes));
}

template <layout_mode L, class... Ts>
bytes_view to_bytes(const buffer<L, Ts...>& p) noexcept {
  return p.bytes();
}

}  // namespace packed
