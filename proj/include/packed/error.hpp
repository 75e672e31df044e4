#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace packed {

enum class errc : std::uint8_t {
  out_of_bounds,
  invalid_tag,
  field_size_mismatch,
  trailing_bytes,
  field_too_large,
  type_state_violation,
  invalid_ordinal,
  division_by_zero,
  schema_error,
  nesting_too_deep,
  depth_too_large,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::out_of_bounds: return "OutOfBounds";
    case errc::invalid_tag: return "InvalidTag";
    case errc::field_size_mismatch: return "FieldSizeMismatch";
    case errc::trailing_bytes: return "TrailingBytes";
    case errc::field_too_large: return "FieldTooLarge";
    case errc::type_state_violation: return "TypeStateViolation";
    case errc::invalid_ordinal: return "InvalidOrdinal";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::schema_error: return "SchemaError";
    case errc::nesting_too_deep: return "NestingTooDeep";
    case errc::depth_too_large: return "DepthTooLarge";
  }
  return "Unknown";
}

inline constexpr std::size_t no_offset = std::numeric_limits<std::size_t>::max();

// Every failure in the library surfaces as this exception. Buffer-level
// failures carry the byte offset where decoding stopped; size mismatches also
// carry the recorded and measured extents.
class error : public std::runtime_error {
 public:
  error(errc code, std::string detail, std::size_t offset = no_offset,
        std::uint64_t expected = 0, std::uint64_t found = 0)
      : std::runtime_error(render(code, detail, offset, expected, found)),
        code_(code),
        offset_(offset),
        expected_(expected),
        found_(found) {}

  errc code() const noexcept { return code_; }
  std::size_t offset() const noexcept { return offset_; }
  bool has_offset() const noexcept { return offset_ != no_offset; }
  std::uint64_t expected() const noexcept { return expected_; }
  std::uint64_t found() const noexcept { return found_; }

 private:
  static std::string render(errc code, const std::string& detail, std::size_t offset,
                            std::uint64_t expected, std::uint64_t found) {
    std::string out(to_string(code));
    if (code == errc::field_size_mismatch) {
      out += "{expected=" + std::to_string(expected) + ", found=" + std::to_string(found) + "}";
    }
    if (offset != no_offset) out += " at offset " + std::to_string(offset);
    if (!detail.empty()) out += ": " + detail;
    return out;
  }

  errc code_;
  std::size_t offset_;
  std::uint64_t expected_;
  std::uint64_t found_;
};

}  // namespace packed
