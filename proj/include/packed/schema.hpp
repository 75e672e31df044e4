#pragma once

// Runtime schemas and the interpretive packing engine.
//
// This is the dynamic twin of the compile-time surface: it packs, measures,
// and validates values described only by a schema loaded at run time. It
// shares the wire primitives with the static path and nothing else, so the
// two can check each other.
//
// Schema text mirrors Haskell data declarations, one or more per file:
//
//   -- comments run to the end of the line
//   data Tree = Leaf Int | Node Tree Tree
//
// Field tokens are `Int` or the name of a declared type. Type and constructor
// names start with an uppercase letter.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "packed/adt.hpp"
#include "packed/error.hpp"
#include "packed/wire.hpp"

namespace packed {

struct prim_int {
  friend bool operator==(const prim_int&, const prim_int&) = default;
};
struct adt_ref {
  std::string name;
  friend bool operator==(const adt_ref&, const adt_ref&) = default;
};
using field_type = std::variant<prim_int, adt_ref>;

struct constructor_decl {
  std::string name;
  std::vector<field_type> fields;
};

struct adt_decl {
  std::string name;
  std::vector<constructor_decl> constructors;
};

class schema {
 public:
  schema() = default;
  explicit schema(std::vector<adt_decl> adts) : adts_(std::move(adts)) { reindex(); }

  const std::vector<adt_decl>& adts() const noexcept { return adts_; }

  const adt_decl* find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : &adts_[it->second];
  }

  const adt_decl& at(std::string_view name) const {
    if (auto* decl = find(name)) return *decl;
    throw error(errc::schema_error, "unknown type '" + std::string(name) + "'");
  }

  void add(adt_decl decl) {
    adts_.push_back(std::move(decl));
    reindex();
  }

 private:
  void reindex() {
    index_.clear();
    for (std::size_t i = 0; i < adts_.size(); ++i) index_.emplace(adts_[i].name, i);
  }

  std::vector<adt_decl> adts_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Throws errc::schema_error describing the first violation found.
inline void validate_schema(const schema& s) {
  std::unordered_set<std::string> names;
  for (const auto& adt : s.adts()) {
    if (!names.insert(adt.name).second) {
      throw error(errc::schema_error, "duplicate type '" + adt.name + "'");
    }
  }
  for (const auto& adt : s.adts()) {
    if (adt.constructors.empty()) {
      throw error(errc::schema_error, "type '" + adt.name + "' has no constructors");
    }
    if (adt.constructors.size() > max_constructors) {
      throw error(errc::schema_error, "type '" + adt.name + "' has " +
                                          std::to_string(adt.constructors.size()) +
                                          " constructors; at most 256 fit a tag byte");
    }
    std::unordered_set<std::string> ctor_names;
    for (const auto& c : adt.constructors) {
      if (!ctor_names.insert(c.name).second) {
        throw error(errc::schema_error,
                    "duplicate constructor '" + c.name + "' in type '" + adt.name + "'");
      }
      for (const auto& f : c.fields) {
        if (auto* ref = std::get_if<adt_ref>(&f); ref && !names.contains(ref->name)) {
          throw error(errc::schema_error, "dangling reference to '" + ref->name +
                                              "' in constructor '" + c.name + "'");
        }
      }
    }
  }
}

namespace detail {

class schema_lexer {
 public:
  explicit schema_lexer(std::string_view text) : text_(text) {}

  struct token {
    std::string text;
    std::size_t line = 0;
  };

  std::optional<token> peek() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    auto save = pos_;
    auto save_line = line_;
    auto t = lex();
    pos_ = save;
    line_ = save_line;
    return t;
  }

  std::optional<token> next() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    return lex();
  }

  std::size_t line() const noexcept { return line_; }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else if (text_.substr(pos_, 2) == "--") {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  token lex() {
    char ch = text_[pos_];
    if (ch == '=' || ch == '|') {
      ++pos_;
      return {std::string(1, ch), line_};
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return {std::string(text_.substr(start, pos_ - start)), line_};
    }
    throw error(errc::schema_error,
                "line " + std::to_string(line_) + ": unexpected character '" + ch + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

inline bool is_type_name(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s.front()));
}

}  // namespace detail

// Parses schema text and validates the result.
inline schema parse_schema(std::string_view text) {
  detail::schema_lexer lex(text);
  auto fail = [&](std::size_t line, const std::string& what) -> error {
    return error(errc::schema_error, "line " + std::to_string(line) + ": " + what);
  };
  auto expect_name = [&](std::string_view role) {
    auto t = lex.next();
    if (!t) throw fail(lex.line(), "expected " + std::string(role) + ", found end of input");
    if (!detail::is_type_name(t->text)) {
      throw fail(t->line, "expected " + std::string(role) + " (capitalised), found '" + t->text + "'");
    }
    return *t;
  };

  std::vector<adt_decl> adts;
  while (auto t = lex.next()) {
    if (t->text != "data") throw fail(t->line, "expected 'data', found '" + t->text + "'");
    adt_decl adt;
    adt.name = expect_name("type name").text;
    if (adt.name == "Int") throw fail(t->line, "'Int' is reserved for the primitive type");
    auto eq = lex.next();
    if (!eq || eq->text != "=") throw fail(lex.line(), "expected '=' after type name");
    while (true) {
      constructor_decl c;
      c.name = expect_name("constructor name").text;
      while (auto f = lex.peek()) {
        if (f->text == "|" || f->text == "data") break;
        lex.next();
        if (f->text == "Int") {
          c.fields.emplace_back(prim_int{});
        } else if (detail::is_type_name(f->text)) {
          c.fields.emplace_back(adt_ref{f->text});
        } else {
          throw fail(f->line, "expected a field type, found '" + f->text + "'");
        }
      }
      adt.constructors.push_back(std::move(c));
      auto sep = lex.peek();
      if (!sep || sep->text != "|") break;
      lex.next();
    }
    adts.push_back(std::move(adt));
  }
  schema result(std::move(adts));
  validate_schema(result);
  return result;
}

// ---- dynamic values ------------------------------------------------------

struct value_tree;
using value_field = std::variant<Int, box<value_tree>>;

struct value_tree {
  std::string adt;
  std::size_t ordinal = 0;
  std::vector<value_field> fields;

  friend bool operator==(const value_tree&, const value_tree&) = default;
};

// Renders `(Node (Leaf 1) (Leaf 2))`; nullary constructors print bare.
inline void write_sexpr(std::ostream& out, const schema& s, const value_tree& v) {
  const auto& ctor = s.at(v.adt).constructors.at(v.ordinal);
  if (v.fields.empty()) {
    out << ctor.name;
    return;
  }
  out << '(' << ctor.name;
  for (const auto& f : v.fields) {
    out << ' ';
    if (auto* i = std::get_if<Int>(&f)) {
      out << *i;
    } else {
      write_sexpr(out, s, *std::get<box<value_tree>>(f));
    }
  }
  out << ')';
}

inline std::string to_sexpr(const schema& s, const value_tree& v) {
  std::ostringstream out;
  write_sexpr(out, s, v);
  return out.str();
}

namespace detail {

inline const constructor_decl& shape_check(const schema& s, const value_tree& v) {
  const auto& adt = s.at(v.adt);
  if (v.ordinal >= adt.constructors.size()) {
    throw error(errc::invalid_ordinal, "type '" + v.adt + "' has no constructor " +
                                           std::to_string(v.ordinal));
  }
  const auto& c = adt.constructors[v.ordinal];
  if (c.fields.size() != v.fields.size()) {
    throw error(errc::schema_error, "constructor '" + c.name + "' takes " +
                                        std::to_string(c.fields.size()) + " fields, value has " +
                                        std::to_string(v.fields.size()));
  }
  for (std::size_t i = 0; i < c.fields.size(); ++i) {
    bool want_int = std::holds_alternative<prim_int>(c.fields[i]);
    bool have_int = std::holds_alternative<Int>(v.fields[i]);
    if (want_int != have_int) {
      throw error(errc::schema_error,
                  "field " + std::to_string(i) + " of '" + c.name + "' has the wrong kind");
    }
    if (!want_int && std::get<box<value_tree>>(v.fields[i])->adt != std::get<adt_ref>(c.fields[i]).name) {
      throw error(errc::schema_error,
                  "field " + std::to_string(i) + " of '" + c.name + "' has the wrong type");
    }
  }
  return c;
}

inline std::uint64_t field_extent(const schema& s, const value_field& f, layout_mode layout);

inline std::uint64_t value_extent(const schema& s, const value_tree& v, layout_mode layout) {
  const auto& c = shape_check(s, v);
  std::uint64_t n = tag_width;
  for (std::size_t i = 0; i < v.fields.size(); ++i) {
    if (has_field_size(layout, i, c.fields.size())) n += field_size_width;
    n += field_extent(s, v.fields[i], layout);
  }
  return n;
}

inline std::uint64_t field_extent(const schema& s, const value_field& f, layout_mode layout) {
  if (std::holds_alternative<Int>(f)) return int_width;
  return value_extent(s, *std::get<box<value_tree>>(f), layout);
}

inline void dynamic_emit(const schema& s, const value_tree& v, layout_mode layout,
                         std::vector<std::byte>& out) {
  const auto& c = shape_check(s, v);
  out.push_back(encode_tag(v.ordinal));
  for (std::size_t i = 0; i < v.fields.size(); ++i) {
    if (has_field_size(layout, i, c.fields.size())) {
      auto size = encode_field_size(field_extent(s, v.fields[i], layout));
      out.insert(out.end(), size.begin(), size.end());
    }
    if (auto* x = std::get_if<Int>(&v.fields[i])) {
      auto enc = encode_int64(*x);
      out.insert(out.end(), enc.begin(), enc.end());
    } else {
      dynamic_emit(s, *std::get<box<value_tree>>(v.fields[i]), layout, out);
    }
  }
}

}  // namespace detail

// Byte length dynamic_pack would produce, without producing it.
inline std::uint64_t size_of(const schema& s, const value_tree& root, layout_mode layout) {
  return detail::value_extent(s, root, layout);
}

// Lays the value out directly: each field size is measured up front rather
// than backpatched.
inline std::vector<std::byte> dynamic_pack(const schema& s, const value_tree& root,
                                           layout_mode layout) {
  std::vector<std::byte> out;
  out.reserve(static_cast<std::size_t>(size_of(s, root, layout)));
  detail::dynamic_emit(s, root, layout, out);
  return out;
}

// Wire-element counts gathered while checking a buffer.
struct buffer_summary {
  std::size_t values = 0;  // constructor occurrences (tags)
  std::size_t ints = 0;
  std::size_t field_sizes = 0;
  std::size_t bytes = 0;
};

namespace detail {

// Structural checker. Every tag must be in range, every field size must equal
// the extent of the field after it, and the root value must end exactly at
// the end of the buffer.
class buffer_checker {
 public:
  buffer_checker(const schema& s, layout_mode layout, bytes_view bytes)
      : schema_(s), layout_(layout), bytes_(bytes) {}

  template <bool Build>
  auto run(const std::string& root_type) {
    const auto& root = schema_.at(root_type);
    std::size_t offset = 0;
    auto result = value<Build>(root, offset, 0);
    if (offset != bytes_.size()) {
      throw error(errc::trailing_bytes,
                  std::to_string(bytes_.size() - offset) + " bytes after the value", offset);
    }
    summary_.bytes = offset;
    return result;
  }

  const buffer_summary& summary() const noexcept { return summary_; }

 private:
  struct nothing {};

  template <bool Build>
  std::conditional_t<Build, value_tree, nothing> value(const adt_decl& adt, std::size_t& offset,
                                                       unsigned depth) {
    if (depth > max_depth) throw error(errc::nesting_too_deep, "value nests too deeply", offset);
    auto tag = decode_tag(bytes_, offset, adt.constructors.size());
    offset += tag_width;
    ++summary_.values;
    const auto& c = adt.constructors[tag];
    std::conditional_t<Build, value_tree, nothing> out{};
    if constexpr (Build) {
      out.adt = adt.name;
      out.ordinal = tag;
      out.fields.reserve(c.fields.size());
    }
    for (std::size_t i = 0; i < c.fields.size(); ++i) {
      std::optional<std::uint32_t> recorded;
      std::size_t slot = offset;
      if (has_field_size(layout_, i, c.fields.size())) {
        recorded = decode_field_size(bytes_, offset);
        offset += field_size_width;
        ++summary_.field_sizes;
      }
      auto start = offset;
      if (std::holds_alternative<prim_int>(c.fields[i])) {
        auto x = decode_int64(bytes_, offset);
        offset += int_width;
        ++summary_.ints;
        if constexpr (Build) out.fields.emplace_back(x);
      } else {
        const auto& child = schema_.at(std::get<adt_ref>(c.fields[i]).name);
        if constexpr (Build) {
          out.fields.emplace_back(box<value_tree>(value<true>(child, offset, depth + 1)));
        } else {
          value<false>(child, offset, depth + 1);
        }
      }
      if (recorded && *recorded != offset - start) {
        throw error(errc::field_size_mismatch, "field size disagrees with the field it precedes",
                    slot, offset - start, *recorded);
      }
    }
    return out;
  }

  static constexpr unsigned max_depth = 10'000;

  const schema& schema_;
  layout_mode layout_;
  bytes_view bytes_;
  buffer_summary summary_;
};

}  // namespace detail

inline value_tree validate_buffer(const schema& s, const std::string& root_type,
                                  layout_mode layout, bytes_view bytes) {
  detail::buffer_checker checker(s, layout, bytes);
  return checker.run<true>(root_type);
}

// Same checks as validate_buffer without materialising the value.
inline buffer_summary check_buffer(const schema& s, const std::string& root_type,
                                   layout_mode layout, bytes_view bytes) {
  detail::buffer_checker checker(s, layout, bytes);
  checker.run<false>(root_type);
  return checker.summary();
}

// One wire element of a buffer, for display.
struct wire_element {
  std::size_t offset = 0;
  std::size_t width = 0;
  std::string kind;     // "tag", "size" or "int"
  std::string meaning;  // constructor name, recorded extent or value
};

namespace detail {

inline void annotate(const schema& s, const adt_decl& adt, layout_mode layout, bytes_view bytes,
                     std::size_t& offset, std::vector<wire_element>& out) {
  auto tag = decode_tag(bytes, offset, adt.constructors.size());
  const auto& c = adt.constructors[tag];
  out.push_back({offset, tag_width, "tag", adt.name + "." + c.name});
  offset += tag_width;
  for (std::size_t i = 0; i < c.fields.size(); ++i) {
    if (has_field_size(layout, i, c.fields.size())) {
      out.push_back({offset, field_size_width, "size",
                     std::to_string(decode_field_size(bytes, offset))});
      offset += field_size_width;
    }
    if (std::holds_alternative<prim_int>(c.fields[i])) {
      out.push_back({offset, int_width, "int", std::to_string(decode_int64(bytes, offset))});
      offset += int_width;
    } else {
      annotate(s, s.at(std::get<adt_ref>(c.fields[i]).name), layout, bytes, offset, out);
    }
  }
}

}  // namespace detail

// Lists the wire elements of a buffer in order. Checks the buffer first.
inline std::vector<wire_element> annotate_buffer(const schema& s, const std::string& root_type,
                                                 layout_mode layout, bytes_view bytes) {
  check_buffer(s, root_type, layout, bytes);
  std::vector<wire_element> out;
  std::size_t offset = 0;
  detail::annotate(s, s.at(root_type), layout, bytes, offset, out);
  return out;
}

// ---- bridge from compile-time descriptors --------------------------------

namespace detail {

template <class F>
field_type field_type_of() {
  if constexpr (std::is_same_v<F, Int>) {
    return prim_int{};
  } else {
    return adt_ref{std::string(F::name)};
  }
}

template <packable_adt T>
void add_adt(schema& s);

template <class F>
void add_field_adt(schema& s) {
  if constexpr (packable_adt<F>) add_adt<F>(s);
}

template <packable_adt T>
void add_adt(schema& s) {
  if (s.find(T::name)) return;
  adt_decl decl{std::string(T::name), {}};
  for_each_index<constructor_count<T>>([&](auto i) {
    using fields = fields_of<T, decltype(i)::value>;
    constructor_decl c{std::string(constructor_at<T, decltype(i)::value>::name), {}};
    for_each_index<fields::size>([&](auto j) {
      c.fields.push_back(field_type_of<list_at_t<decltype(j)::value, fields>>());
    });
    decl.constructors.push_back(std::move(c));
  });
  s.add(std::move(decl));
  for_each_index<constructor_count<T>>([&](auto i) {
    using fields = fields_of<T, decltype(i)::value>;
    for_each_index<fields::size>([&](auto j) { add_field_adt<list_at_t<decltype(j)::value, fields>>(s); });
  });
}

}  // namespace detail

// Runtime schema equivalent to a compile-time ADT and everything it references.
template <packable_adt T>
schema schema_of() {
  schema s;
  detail::add_adt<T>(s);
  return s;
}

// Lifts a native value into its dynamic twin.
template <packable_adt T>
value_tree lift(const T& x) {
  value_tree out;
  out.adt = std::string(T::name);
  out.ordinal = x.alt.index();
  detail::with_index<constructor_count<T>>(x.alt.index(), [&]<std::size_t I>() {
    const auto& fields = std::get<I>(x.alt).fields;
    detail::for_each_index<std::tuple_size_v<std::decay_t<decltype(fields)>>>([&](auto j) {
      const auto& f = std::get<decltype(j)::value>(fields);
      if constexpr (std::is_same_v<std::decay_t<decltype(f)>, Int>) {
        out.fields.emplace_back(f);
      } else {
        out.fields.emplace_back(box<value_tree>(lift(*f)));
      }
    });
  });
  return out;
}

}  // namespace packed
