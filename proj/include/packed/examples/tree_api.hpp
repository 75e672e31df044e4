// Generated by packed gen-api from tree.adt. Do not edit.
#pragma once

#include <string_view>
#include <tuple>
#include <utility>
#include <variant>

#include "packed/packed.hpp"

namespace packed::examples {

struct Tree;

struct Tree {
  struct Leaf {
    std::tuple<::packed::Int> fields;
    friend bool operator==(const Leaf&, const Leaf&) = default;
  };
  struct Node {
    std::tuple<::packed::box<::packed::examples::Tree>, ::packed::box<::packed::examples::Tree>> fields;
    friend bool operator==(const Node&, const Node&) = default;
  };

  using constructors = ::packed::constructors<
      ::packed::ctor<"Leaf", ::packed::Int>,
      ::packed::ctor<"Node", ::packed::examples::Tree, ::packed::examples::Tree>>;
  static constexpr std::string_view name = "Tree";

  std::variant<Leaf, Node> alt;

  friend bool operator==(const Tree&, const Tree&) = default;
};

inline Tree make_Leaf(::packed::Int f0) {
  return Tree{Tree::Leaf{{f0}}};
}
inline Tree make_Node(::packed::examples::Tree f0, ::packed::examples::Tree f1) {
  return Tree{Tree::Node{{::packed::box<::packed::examples::Tree>(std::move(f0)), ::packed::box<::packed::examples::Tree>(std::move(f1))}}};
}

namespace plain {

using builder_Tree = ::packed::builder<::packed::layout_mode::plain, ::packed::examples::Tree>;

inline ::packed::buffer<::packed::layout_mode::plain, ::packed::examples::Tree> pack_Tree(const ::packed::examples::Tree& x) {
  return ::packed::pack<::packed::layout_mode::plain>(x);
}

inline ::packed::examples::Tree unpack_Tree(const ::packed::buffer<::packed::layout_mode::plain, ::packed::examples::Tree>& p) {
  return ::packed::unpack(p);
}

template <class... Rest>
std::pair<::packed::examples::Tree, ::packed::reader<::packed::layout_mode::plain, Rest...>> unpack_Tree(const ::packed::reader<::packed::layout_mode::plain, ::packed::examples::Tree, Rest...>& c) {
  return ::packed::unpack(c);
}

template <class... Rest, class KLeaf, class KNode>
auto case_Tree(const ::packed::reader<::packed::layout_mode::plain, ::packed::examples::Tree, Rest...>& c, KLeaf&& on_Leaf, KNode&& on_Node) {
  return ::packed::case_of<::packed::examples::Tree>(c, std::forward<KLeaf>(on_Leaf), std::forward<KNode>(on_Node));
}

template <class... RestIn, class... Pending, class R, class KLeaf, class KNode>
auto transform_Tree(const ::packed::reader<::packed::layout_mode::plain, ::packed::examples::Tree, RestIn...>& c, ::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& out, KLeaf&& on_Leaf, KNode&& on_Node) {
  return ::packed::transform_of<::packed::examples::Tree>(c, std::move(out), std::forward<KLeaf>(on_Leaf), std::forward<KNode>(on_Node));
}

template <class... Pending, class R>
auto start_Leaf(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Tree, 0>(std::move(b));
}

template <class... Pending, class R>
auto write_Leaf(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& b, ::packed::Int f0) {
  return ::packed::write_ctor<::packed::examples::Tree, 0>(std::move(b), f0);
}

template <class... Pending, class R>
auto start_Node(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Tree, 1>(std::move(b));
}

template <class... Pending, class R>
auto write_Node(::packed::needs<::packed::layout_mode::plain, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& b, const ::packed::examples::Tree& f0, const ::packed::examples::Tree& f1) {
  return ::packed::write_ctor<::packed::examples::Tree, 1>(std::move(b), f0, f1);
}

}  // namespace plain

namespace indirect {

using builder_Tree = ::packed::builder<::packed::layout_mode::indirect, ::packed::examples::Tree>;

inline ::packed::buffer<::packed::layout_mode::indirect, ::packed::examples::Tree> pack_Tree(const ::packed::examples::Tree& x) {
  return ::packed::pack<::packed::layout_mode::indirect>(x);
}

inline ::packed::examples::Tree unpack_Tree(const ::packed::buffer<::packed::layout_mode::indirect, ::packed::examples::Tree>& p) {
  return ::packed::unpack(p);
}

template <class... Rest>
std::pair<::packed::examples::Tree, ::packed::reader<::packed::layout_mode::indirect, Rest...>> unpack_Tree(const ::packed::reader<::packed::layout_mode::indirect, ::packed::examples::Tree, Rest...>& c) {
  return ::packed::unpack(c);
}

template <class... Rest, class KLeaf, class KNode>
auto case_Tree(const ::packed::reader<::packed::layout_mode::indirect, ::packed::examples::Tree, Rest...>& c, KLeaf&& on_Leaf, KNode&& on_Node) {
  return ::packed::case_of<::packed::examples::Tree>(c, std::forward<KLeaf>(on_Leaf), std::forward<KNode>(on_Node));
}

template <class... RestIn, class... Pending, class R, class KLeaf, class KNode>
auto transform_Tree(const ::packed::reader<::packed::layout_mode::indirect, ::packed::examples::Tree, RestIn...>& c, ::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& out, KLeaf&& on_Leaf, KNode&& on_Node) {
  return ::packed::transform_of<::packed::examples::Tree>(c, std::move(out), std::forward<KLeaf>(on_Leaf), std::forward<KNode>(on_Node));
}

template <class... Pending, class R>
auto start_Leaf(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Tree, 0>(std::move(b));
}

template <class... Pending, class R>
auto write_Leaf(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& b, ::packed::Int f0) {
  return ::packed::write_ctor<::packed::examples::Tree, 0>(std::move(b), f0);
}

template <class... Pending, class R>
auto start_Node(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Tree, 1>(std::move(b));
}

template <class... Pending, class R>
auto write_Node(::packed::needs<::packed::layout_mode::indirect, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& b, const ::packed::examples::Tree& f0, const ::packed::examples::Tree& f1) {
  return ::packed::write_ctor<::packed::examples::Tree, 1>(std::move(b), f0, f1);
}

}  // namespace indirect

namespace indirect_skip_last {

using builder_Tree = ::packed::builder<::packed::layout_mode::indirect_skip_last, ::packed::examples::Tree>;

inline ::packed::buffer<::packed::layout_mode::indirect_skip_last, ::packed::examples::Tree> pack_Tree(const ::packed::examples::Tree& x) {
  return ::packed::pack<::packed::layout_mode::indirect_skip_last>(x);
}

inline ::packed::examples::Tree unpack_Tree(const ::packed::buffer<::packed::layout_mode::indirect_skip_last, ::packed::examples::Tree>& p) {
  return ::packed::unpack(p);
}

template <class... Rest>
std::pair<::packed::examples::Tree, ::packed::reader<::packed::layout_mode::indirect_skip_last, Rest...>> unpack_Tree(const ::packed::reader<::packed::layout_mode::indirect_skip_last, ::packed::examples::Tree, Rest...>& c) {
  return ::packed::unpack(c);
}

template <class... Rest, class KLeaf, class KNode>
auto case_Tree(const ::packed::reader<::packed::layout_mode::indirect_skip_last, ::packed::examples::Tree, Rest...>& c, KLeaf&& on_Leaf, KNode&& on_Node) {
  return ::packed::case_of<::packed::examples::Tree>(c, std::forward<KLeaf>(on_Leaf), std::forward<KNode>(on_Node));
}

template <class... RestIn, class... Pending, class R, class KLeaf, class KNode>
auto transform_Tree(const ::packed::reader<::packed::layout_mode::indirect_skip_last, ::packed::examples::Tree, RestIn...>& c, ::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& out, KLeaf&& on_Leaf, KNode&& on_Node) {
  return ::packed::transform_of<::packed::examples::Tree>(c, std::move(out), std::forward<KLeaf>(on_Leaf), std::forward<KNode>(on_Node));
}

template <class... Pending, class R>
auto start_Leaf(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Tree, 0>(std::move(b));
}

template <class... Pending, class R>
auto write_Leaf(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& b, ::packed::Int f0) {
  return ::packed::write_ctor<::packed::examples::Tree, 0>(std::move(b), f0);
}

template <class... Pending, class R>
auto start_Node(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& b) {
  return ::packed::start<::packed::examples::Tree, 1>(std::move(b));
}

template <class... Pending, class R>
auto write_Node(::packed::needs<::packed::layout_mode::indirect_skip_last, ::packed::type_list<::packed::examples::Tree, Pending...>, R>&& b, const ::packed::examples::Tree& f0, const ::packed::examples::Tree& f1) {
  return ::packed::write_ctor<::packed::examples::Tree, 1>(std::move(b), f0, f1);
}

}  // namespace indirect_skip_last

}  // namespace packed::examples
