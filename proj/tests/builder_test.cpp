#include <gtest/gtest.h>

#include <random>
#include <type_traits>

#include "support.hpp"

namespace {

using namespace testing_support;
using namespace packed::examples;
using packed::builder;
using packed::Int;
using packed::needs;
using packed::nested;
using packed::type_list;

template <class B>
concept can_write_prim = requires(B b) { packed::write_prim(std::move(b), Int{5}); };
template <class B, class V>
concept can_write_value = requires(B b, const V& v) { packed::write_value(std::move(b), v); };
template <class B>
concept can_start_node = requires(B b) { packed::start<Tree, 1>(std::move(b)); };
template <class B>
concept can_finish = requires(B b) { packed::finish(std::move(b)); };

constexpr auto P = layout_mode::plain;
constexpr auto I = layout_mode::indirect;
constexpr auto K = layout_mode::indirect_skip_last;

TEST(NewBuilder, PendingEqualsResult) {
  using B = builder<P, Tree>;
  static_assert(std::is_same_v<B::pending, type_list<Tree>>);
  static_assert(std::is_same_v<B::result, type_list<Tree>>);
  using Two = builder<P, Int, Int>;
  static_assert(std::is_same_v<Two::pending, type_list<Int, Int>>);
  static_assert(std::is_same_v<Two::result, type_list<Int, Int>>);
  static_assert(!std::is_default_constructible_v<builder<P>>);
  B b;
  EXPECT_EQ(b.size_bytes(), 0u);
  EXPECT_EQ(b.open_frames(), 0u);
}

TEST(StartCtor, NodeUnderPlain) {
  auto b = packed::start<Tree, "Node">(builder<P, Tree>{});
  static_assert(std::is_same_v<decltype(b)::pending, type_list<Tree, Tree>>);
  ASSERT_EQ(b.size_bytes(), 1u);
  EXPECT_EQ(b.written().back(), std::byte{1});
}

TEST(StartCtor, LeafUnderPlain) {
  auto b = packed::start<Tree, 0>(builder<P, Tree>{});
  static_assert(std::is_same_v<decltype(b)::pending, type_list<Int>>);
  EXPECT_EQ(to_vector(b.written()), bytes({0}));
}

TEST(StartCtor, NodeUnderIndirectSchedulesOneSlotPerField) {
  auto b = packed::start<Tree, 1>(builder<I, Tree>{});
  static_assert(std::is_same_v<decltype(b)::pending, type_list<Tree, Tree>>);
  // The left slot is reserved now; the right one is reserved where the right
  // field begins, after the left field's bytes.
  EXPECT_EQ(b.size_bytes(), 5u);
  EXPECT_EQ(b.open_frames(), 1u);
  auto b1 = packed::write_value(std::move(b), make_Leaf(1));
  EXPECT_EQ(b1.size_bytes(), 5u + 13u + 4u);
  EXPECT_EQ(b1.open_frames(), 1u);
  auto b2 = packed::write_value(std::move(b1), make_Leaf(2));
  EXPECT_EQ(b2.open_frames(), 0u);
  auto p = packed::finish(std::move(b2));
  ASSERT_EQ(p.size(), 35u);
  EXPECT_EQ(packed::decode_field_size(p.bytes(), 1), 13u);
  EXPECT_EQ(packed::decode_field_size(p.bytes(), 18), 13u);
}

TEST(StartCtor, StaticallyRequiresMatchingHead) {
  static_assert(can_start_node<builder<P, Tree>>);
  static_assert(!can_start_node<builder<P, Int>>);
  static_assert(!can_start_node<needs<P, type_list<>, type_list<Tree>>>);
}

TEST(WritePrim, ConsumesHead) {
  auto b = packed::start<Tree, 0>(builder<P, Tree>{});
  auto b1 = packed::write_prim(std::move(b), 5);
  static_assert(std::is_same_v<decltype(b1)::pending, type_list<>>);
  EXPECT_EQ(b1.size_bytes(), 9u);
  auto two = packed::write_prim(builder<P, Int, Tree>{}, 5);
  static_assert(std::is_same_v<decltype(two)::pending, type_list<Tree>>);
  static_assert(can_write_prim<builder<P, Int>>);
  static_assert(!can_write_prim<builder<P, Tree>>);
}

TEST(WriteValue, MatchesManualSequence) {
  auto manual = [] {
    auto b = packed::start<Tree, 1>(builder<P, Tree>{});
    auto b1 = packed::start<Tree, 0>(std::move(b));
    auto b2 = packed::write_prim(std::move(b1), 1);
    auto b3 = packed::start<Tree, 0>(std::move(b2));
    return packed::finish(packed::write_prim(std::move(b3), 2));
  }();
  auto automatic = packed::finish(
      packed::write_value(builder<P, Tree>{}, make_Node(make_Leaf(1), make_Leaf(2))));
  EXPECT_EQ(manual.size(), 19u);
  EXPECT_EQ(manual, automatic);
}

TEST(WriteValue, IndirectLeaf) {
  auto p = packed::finish(packed::write_value(builder<I, Tree>{}, make_Leaf(5)));
  EXPECT_EQ(to_vector(p.bytes()), bytes({0, 8, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(WriteValue, StaticallyRequiresMatchingHead) {
  static_assert(can_write_value<builder<P, Tree>, Tree>);
  static_assert(!can_write_value<builder<P, Int>, Tree>);
  static_assert(!can_write_value<builder<P, Tree>, Ast>);
}

TEST(WriteCtor, EqualsStartThenFields) {
  auto a = packed::finish(packed::write_ctor<Tree, 1>(builder<K, Tree>{}, make_Leaf(1), make_Leaf(2)));
  EXPECT_EQ(a, packed::pack<K>(make_Node(make_Leaf(1), make_Leaf(2))));
  auto leaf = packed::finish(packed::write_ctor<Tree, 0>(builder<I, Tree>{}, Int{7}));
  EXPECT_EQ(leaf, packed::pack<I>(make_Leaf(7)));
}

TEST(WritePacked, AppendsAFinishedChild) {
  auto child = packed::pack<I>(make_Leaf(1));
  auto b = packed::start<Tree, 1>(builder<I, Tree>{});
  auto b1 = packed::write_packed(std::move(b), child);
  auto b2 = packed::write_packed(std::move(b1), packed::pack<I>(make_Leaf(2)));
  EXPECT_EQ(packed::finish(std::move(b2)), packed::pack<I>(make_Node(make_Leaf(1), make_Leaf(2))));
}

TEST(Apply, IdentityLeavesBuilderUnchanged) {
  auto b = packed::start<Tree, 1>(builder<I, Tree>{});
  auto before = to_vector(b.written());
  auto same = packed::apply(std::move(b), [](auto x) { return x; });
  static_assert(std::is_same_v<decltype(same), decltype(b)>);
  EXPECT_EQ(to_vector(same.written()), before);
}

TEST(Apply, ComposesStartLeafAndWritePrim) {
  auto b = packed::apply(builder<P, Tree>{}, [](auto x) {
    return packed::write_prim(packed::start<Tree, 0>(std::move(x)), 4);
  });
  static_assert(std::is_same_v<decltype(b)::pending, type_list<>>);
  EXPECT_EQ(packed::finish(std::move(b)), packed::pack<P>(make_Leaf(4)));
}

TEST(Apply, TwoChildStepsCompleteTheNodeFrame) {
  auto child = [](Int v) {
    return [v](needs<I, type_list<Tree>, nested> s) { return packed::write_ctor<Tree, 0>(std::move(s), v); };
  };
  auto b = packed::start<Tree, 1>(builder<I, Tree>{});
  auto b1 = packed::apply_field(std::move(b), child(1));
  auto b2 = packed::apply_field(std::move(b1), child(2));
  EXPECT_EQ(b2.open_frames(), 0u);
  EXPECT_EQ(packed::finish(std::move(b2)), packed::pack<I>(make_Node(make_Leaf(1), make_Leaf(2))));
}

TEST(Finish, Results) {
  auto leaf = packed::finish(packed::write_value(builder<P, Tree>{}, make_Leaf(0)));
  static_assert(std::is_same_v<decltype(leaf), packed::buffer<P, Tree>>);
  EXPECT_EQ(leaf.size(), 9u);
  auto two = packed::finish(packed::write_prim(packed::write_prim(builder<P, Int, Int>{}, 3), 4));
  static_assert(std::is_same_v<decltype(two), packed::buffer<P, Int, Int>>);
  EXPECT_EQ(two.size(), 16u);
  static_assert(!can_finish<builder<P, Tree>>);
  static_assert(!can_finish<needs<P, type_list<>, nested>>);
  static_assert(can_finish<needs<P, type_list<>, type_list<Tree>>>);
}

TEST(Typestate, ConsumedHandleThrowsAndKeepsBytes) {
  builder<I, Tree> b;
  auto b1 = packed::start<Tree, 1>(std::move(b));
  EXPECT_FALSE(b.valid());
  EXPECT_EQ(code_of([&] { (void)packed::start<Tree, 0>(std::move(b)); }), errc::type_state_violation);
  EXPECT_EQ(code_of([&] { (void)packed::write_value(std::move(b), make_Leaf(1)); }),
            errc::type_state_violation);
  EXPECT_EQ(b1.size_bytes(), 5u);
  auto b2 = packed::write_value(packed::write_value(std::move(b1), make_Leaf(1)), make_Leaf(2));
  EXPECT_EQ(packed::finish(std::move(b2)), packed::pack<I>(make_Node(make_Leaf(1), make_Leaf(2))));
}

// Manual writer built from start / write_prim only.
template <layout_mode L>
needs<L, type_list<>, nested> write_manually(needs<L, type_list<Tree>, nested>&& b, const Tree& t) {
  if (auto* leaf = std::get_if<Tree::Leaf>(&t.alt)) {
    return packed::write_prim(packed::start<Tree, 0>(std::move(b)), std::get<0>(leaf->fields));
  }
  auto& node = std::get<Tree::Node>(t.alt);
  auto n = packed::start<Tree, 1>(std::move(b));
  auto n1 = packed::apply_field(std::move(n), [&](auto s) {
    return write_manually<L>(std::move(s), *std::get<0>(node.fields));
  });
  return packed::apply_field(std::move(n1), [&](auto s) {
    return write_manually<L>(std::move(s), *std::get<1>(node.fields));
  });
}

TEST(Property, ManualAutoAndOracleAgree) {
  auto s = packed::schema_of<Tree>();
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto t = gen_random_tree(seed, 10);
    packed::visit_layout(packed::all_layouts[seed % 3], [&](auto lc) {
      constexpr auto L = decltype(lc)::value;
      auto manual = packed::finish(packed::apply_field(builder<L, Tree>{}, [&](auto b) {
        return write_manually<L>(std::move(b), t);
      }));
      auto automatic = packed::pack<L>(t);
      ASSERT_EQ(manual, automatic);
      ASSERT_EQ(to_vector(automatic.bytes()), oracle_tree_bytes(t, L));
      ASSERT_EQ(packed::validate_buffer(s, "Tree", L, automatic.bytes()), packed::lift(t));
    });
  }
}

TEST(Property, StreamedSymmetricTreeMatchesDynamicPack) {
  auto s = packed::schema_of<Tree>();
  for (unsigned d = 0; d <= 8; ++d) {
    auto v = packed::lift(gen_symmetric_tree(d));
    EXPECT_EQ(to_vector(pack_symmetric_tree<P>(d).bytes()), packed::dynamic_pack(s, v, P));
    EXPECT_EQ(to_vector(pack_symmetric_tree<I>(d).bytes()), packed::dynamic_pack(s, v, I));
    EXPECT_EQ(to_vector(pack_symmetric_tree<K>(d).bytes()), packed::dynamic_pack(s, v, K));
  }
}

}  // namespace
