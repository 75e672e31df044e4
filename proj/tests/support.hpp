#pragma once

// Shared helpers for the test suites: byte literals, error capture, a
// hand-written byte-layout oracle for trees, and random dynamic values.

#include <gtest/gtest.h>

#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "packed/examples/ast.hpp"
#include "packed/examples/tree.hpp"
#include "packed/schema.hpp"

namespace testing_support {

using packed::errc;
using packed::layout_mode;
using packed::examples::Ast;
using packed::examples::Tree;

inline std::vector<std::byte> bytes(std::initializer_list<int> xs) {
  std::vector<std::byte> out;
  for (int x : xs) out.push_back(static_cast<std::byte>(x));
  return out;
}

inline std::vector<std::byte> to_vector(packed::bytes_view v) { return {v.begin(), v.end()}; }

template <class F>
std::optional<packed::error> error_of(F&& f) {
  try {
    f();
  } catch (const packed::error& e) {
    return e;
  }
  return std::nullopt;
}

template <class F>
std::optional<errc> code_of(F&& f) {
  if (auto e = error_of(std::forward<F>(f))) return e->code();
  return std::nullopt;
}

// Byte layout written out by hand from the format rules, independent of the
// library's encoders.
inline void put_le(std::vector<std::byte>& out, std::uint64_t v, int width) {
  for (int i = 0; i < width; ++i) out.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xff));
}

inline std::vector<std::byte> oracle_tree_bytes(const Tree& t, layout_mode layout) {
  std::vector<std::byte> out;
  if (auto* leaf = std::get_if<Tree::Leaf>(&t.alt)) {
    out.push_back(std::byte{0});
    if (layout == layout_mode::indirect) put_le(out, 8, 4);
    put_le(out, static_cast<std::uint64_t>(std::get<0>(leaf->fields)), 8);
    return out;
  }
  auto& node = std::get<Tree::Node>(t.alt);
  auto left = oracle_tree_bytes(*std::get<0>(node.fields), layout);
  auto right = oracle_tree_bytes(*std::get<1>(node.fields), layout);
  out.push_back(std::byte{1});
  if (layout != layout_mode::plain) put_le(out, left.size(), 4);
  out.insert(out.end(), left.begin(), left.end());
  if (layout == layout_mode::indirect) put_le(out, right.size(), 4);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

// Random value of `type` in schema `s`; nullary constructors are forced at
// max_depth (every test schema has one or an all-Int constructor).
inline packed::value_tree random_value(const packed::schema& s, const std::string& type,
                                       std::mt19937_64& rng, unsigned depth, unsigned max_depth) {
  const auto& adt = s.at(type);
  std::vector<std::size_t> choices;
  for (std::size_t i = 0; i < adt.constructors.size(); ++i) {
    bool leafy = true;
    for (const auto& f : adt.constructors[i].fields) {
      if (std::holds_alternative<packed::adt_ref>(f)) leafy = false;
    }
    if (depth < max_depth || leafy) choices.push_back(i);
  }
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  std::uniform_int_distribution<std::int64_t> value(INT64_MIN, INT64_MAX);
  packed::value_tree v;
  v.adt = type;
  v.ordinal = choices[pick(rng)];
  for (const auto& f : adt.constructors[v.ordinal].fields) {
    if (std::holds_alternative<packed::prim_int>(f)) {
      v.fields.emplace_back(value(rng));
    } else {
      v.fields.emplace_back(packed::box<packed::value_tree>(
          random_value(s, std::get<packed::adt_ref>(f).name, rng, depth + 1, max_depth)));
    }
  }
  return v;
}

inline std::string schema_path(const std::string& name) {
  return std::string(PACKED_SOURCE_DIR) + "/schemas/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string test_file(const std::string& name) {
  return std::string(PACKED_SOURCE_DIR) + "/tests/" + name;
}

inline const packed::schema& shapes_schema() {
  static const packed::schema s = packed::parse_schema(read_text(test_file("shapes.adt")));
  return s;
}

}  // namespace testing_support
