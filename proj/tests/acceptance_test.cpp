// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "packed/examples/ast.hpp"
#include "packed/examples/tree.hpp"
#include "packed/schema.hpp"

namespace {

using namespace packed;
using namespace packed::examples;

constexpr auto P = layout_mode::plain;
constexpr auto I = layout_mode::indirect;
constexpr auto K = layout_mode::indirect_skip_last;

// Failure with a reason; thrown out of a criterion body.
struct fail {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw fail{why};
}

std::vector<std::byte> vec(bytes_view v) { return {v.begin(), v.end()}; }

std::vector<std::byte> bytes(std::initializer_list<int> xs) {
  std::vector<std::byte> out;
  for (int x : xs) out.push_back(static_cast<std::byte>(x));
  return out;
}

struct corpus {
  std::vector<Tree> trees;
  std::vector<Ast> asts;
};

const corpus& shared_corpus() {
  static const corpus c = [] {
    corpus out;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      out.trees.push_back(gen_random_tree(seed, 12));
      out.asts.push_back(gen_random_ast(seed + 1'000'000, 12));
    }
    return out;
  }();
  return c;
}

template <class F>
void for_each_layout(F&& f) {
  f(std::integral_constant<layout_mode, P>{});
  f(std::integral_constant<layout_mode, I>{});
  f(std::integral_constant<layout_mode, K>{});
}

// Walks a packed value under `layout` and checks every field size against the
// extent measured by walking the field itself. Returns the end offset.
std::size_t check_sizes(const schema& s, const adt_decl& adt, layout_mode layout, bytes_view b,
                        std::size_t offset) {
  auto tag = std::to_integer<std::size_t>(b[offset]);
  require(tag < adt.constructors.size(), "tag out of range");
  offset += 1;
  const auto& c = adt.constructors[tag];
  for (std::size_t i = 0; i < c.fields.size(); ++i) {
    std::optional<std::uint32_t> recorded;
    if (has_field_size(layout, i, c.fields.size())) {
      recorded = decode_field_size(b, offset);
      offset += 4;
    }
    auto start = offset;
    if (std::holds_alternative<prim_int>(c.fields[i])) {
      offset += 8;
    } else {
      offset = check_sizes(s, s.at(std::get<adt_ref>(c.fields[i]).name), layout, b, offset);
    }
    if (recorded) require(*recorded == offset - start, "field size differs from measured extent");
  }
  return offset;
}

template <layout_mode L>
needs<L, type_list<>, nested> write_manually(needs<L, type_list<Tree>, nested>&& b, const Tree& t) {
  if (auto* leaf = std::get_if<Tree::Leaf>(&t.alt)) {
    return write_prim(start<Tree, 0>(std::move(b)), std::get<0>(leaf->fields));
  }
  auto& node = std::get<Tree::Node>(t.alt);
  auto n = start<Tree, 1>(std::move(b));
  auto n1 = apply_field(std::move(n), [&](auto s) { return write_manually<L>(std::move(s), *std::get<0>(node.fields)); });
  return apply_field(std::move(n1), [&](auto s) { return write_manually<L>(std::move(s), *std::get<1>(node.fields)); });
}

std::string criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  const auto& c = shared_corpus();
  auto tree_schema = schema_of<Tree>();
  auto ast_schema = schema_of<Ast>();
  std::size_t checked = 0;
  for_each_layout([&](auto lc) {
    constexpr auto L = decltype(lc)::value;
    for (const auto& t : c.trees) {
      auto p = pack<L>(t);
      require(unpack(p) == t, "tree round trip");
      require(validate_buffer(tree_schema, "Tree", L, p.bytes()) == lift(t), "tree validation");
      require(check_sizes(tree_schema, tree_schema.at("Tree"), L, p.bytes(), 0) == p.size(), "tree extent");
      ++checked;
    }
    for (const auto& a : c.asts) {
      auto p = pack<L>(a);
      require(unpack(p) == a, "ast round trip");
      require(validate_buffer(ast_schema, "Ast", L, p.bytes()) == lift(a), "ast validation");
      require(check_sizes(ast_schema, ast_schema.at("Ast"), L, p.bytes(), 0) == p.size(), "ast extent");
      ++checked;
    }
  });
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  require(secs < 60, "took " + std::to_string(secs) + " s");
  std::ostringstream out;
  out << checked << " values, " << secs << " s";
  return out.str();
}

std::string criterion_2() {
  std::size_t compared = 0;
  for_each_layout([&](auto lc) {
    constexpr auto L = decltype(lc)::value;
    for (const auto& t : shared_corpus().trees) {
      auto manual = finish(apply_field(builder<L, Tree>{}, [&](auto b) { return write_manually<L>(std::move(b), t); }));
      auto automatic = finish(write_value(builder<L, Tree>{}, t));
      require(manual == automatic, "manual and automatic buffers differ");
      ++compared;
    }
  });
  return std::to_string(compared) + " buffers identical";
}

std::string criterion_3() {
  const auto& c = shared_corpus();
  for_each_layout([&](auto lc) {
    constexpr auto L = decltype(lc)::value;
    for (const auto& t : c.trees) {
      auto p = pack<L>(t);
      require(sum_packed(p) == sum_native(t), "sum");
      require(rightmost_packed_plain(p) == rightmost_native(t), "rightmost (plain walk)");
      if constexpr (L != P) require(rightmost_packed_indirect(p) == rightmost_native(t), "rightmost (jumps)");
      require(unpack(increment_packed(p)) == increment_native(t), "increment");
    }
    for (const auto& a : c.asts) require(eval_packed(pack<L>(a)) == eval_native(a), "eval");
  });
  require(sum_packed(pack<P>(gen_symmetric_tree(5))) == 496, "depth-5 sum");
  for (unsigned d = 0; d <= 16; ++d) {
    auto want = (Int{1} << d) - 1;
    require(rightmost_packed_plain(pack_symmetric_tree<P>(d)) == want, "closed-form rightmost");
    require(rightmost_packed_indirect(pack_symmetric_tree<I>(d)) == want, "closed-form rightmost");
    require(rightmost_packed_indirect(pack_symmetric_tree<K>(d)) == want, "closed-form rightmost");
  }
  return "corpus agrees; sum(5)=496; rightmost(d)=2^d-1 for d<=16";
}

std::string criterion_4() {
  const auto& c = shared_corpus();
  for_each_layout([&](auto lc) {
    constexpr auto L = decltype(lc)::value;
    for (const auto& t : c.trees) {
      auto p = pack<L>(t);
      require(sum_raw(p) == sum_packed(p), "raw sum");
    }
    for (const auto& a : c.asts) {
      auto p = pack<L>(a);
      require(eval_raw(p) == eval_packed(p), "raw eval");
    }
  });
  return "raw and checked agree on 6000 buffers";
}

std::string criterion_5() {
  auto ind = pack_symmetric_tree<I>(20);
  auto plain = pack_symmetric_tree<P>(20);
  std::size_t ni = 0, np = 0;
  require(rightmost_packed_indirect(ind, &ni) == (1 << 20) - 1, "indirect result");
  require(rightmost_packed_plain(plain, &np) == (1 << 20) - 1, "plain result");
  require(ni <= 200, "indirect read " + std::to_string(ni) + " bytes");
  require(np == plain.size(), "plain did not read the whole buffer");
  require(np >= 9u * (1u << 20), "plain buffer too small");
  double ratio = static_cast<double>(np) / static_cast<double>(ni);
  require(ratio >= 1e4, "ratio " + std::to_string(ratio));
  std::ostringstream out;
  out << "indirect " << ni << " B, plain " << np << " B, ratio " << static_cast<long>(ratio);
  return out.str();
}

std::string criterion_6() {
  auto p = pack<P>(gen_symmetric_ast(20));
  auto direct = bench::measure([&] { return eval_packed(p); }, 2, 20);
  auto baseline = bench::measure([&] { return unpack_then_eval(p); }, 2, 20);
  double ratio = baseline.median_ns / direct.median_ns;
  require(eval_packed(p) == unpack_then_eval(p), "results differ");
  require(ratio >= 1.5, "ratio " + std::to_string(ratio));
  std::ostringstream out;
  out.precision(3);
  out << "eval_packed median " << direct.median_ns / 1e6 << " ms, unpack_then_eval median "
      << baseline.median_ns / 1e6 << " ms, ratio " << ratio;
  return out.str();
}

template <layout_mode L, class T>
void fuzz_one(const schema& s, const std::string& name, const std::vector<std::byte>& raw,
              std::size_t& accepted) {
  static const std::set<errc> allowed{errc::invalid_tag, errc::out_of_bounds,
                                      errc::field_size_mismatch, errc::trailing_bytes};
  auto p = from_bytes<L, T>(raw);
  bool unpacked = false, validated = false;
  try {
    auto v = unpack(p);
    unpacked = true;
    require(vec(pack<L>(v).bytes()) == raw, "accepted bytes re-pack differently");
  } catch (const error& e) {
    require(allowed.contains(e.code()), std::string("unpack raised ") + std::string(to_string(e.code())));
  }
  try {
    validate_buffer(s, name, L, raw);
    validated = true;
  } catch (const error& e) {
    require(allowed.contains(e.code()), std::string("validate raised ") + std::string(to_string(e.code())));
  }
  require(unpacked == validated, "unpack and validate disagree");
  accepted += unpacked;
}

std::string criterion_7() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> length(0, 64);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<int> small(0, 5);
  auto tree_schema = schema_of<Tree>();
  auto ast_schema = schema_of<Ast>();
  std::size_t accepted = 0;
  for (int i = 0; i < 10'000; ++i) {
    std::vector<std::byte> raw(length(rng));
    // Half the strings favour small bytes so that tags are often in range.
    for (auto& b : raw) b = static_cast<std::byte>(i % 2 ? byte(rng) : small(rng));
    visit_layout(all_layouts[static_cast<std::size_t>(i) % 3], [&](auto lc) {
      constexpr auto L = decltype(lc)::value;
      fuzz_one<L, Tree>(tree_schema, "Tree", raw, accepted);
      fuzz_one<L, Ast>(ast_schema, "Ast", raw, accepted);
    });
  }
  return "10000 strings, " + std::to_string(accepted) + " accepted, all re-pack exactly";
}

std::string criterion_8() {
  auto s = parse_schema("data Tree = Leaf Int | Node Tree Tree");
  value_tree v{"Tree", 1, {}};
  v.fields.emplace_back(box<value_tree>(value_tree{"Tree", 0, {Int{1}}}));
  v.fields.emplace_back(box<value_tree>(value_tree{"Tree", 0, {Int{2}}}));
  auto plain = dynamic_pack(s, v, P);
  auto ind = dynamic_pack(s, v, I);
  auto skip = dynamic_pack(s, v, K);
  require(plain == bytes({1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0}), "plain bytes");
  require(ind == bytes({1, 13, 0, 0, 0, 0, 8, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0,
                        13, 0, 0, 0, 0, 8, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0}), "indirect bytes");
  require(skip == bytes({1, 9, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0}), "skip-last bytes");
  require(decode_field_size(ind, 1) == 13, "left slot");
  auto t = make_Node(make_Leaf(1), make_Leaf(2));
  require(vec(pack<P>(t).bytes()) == plain && vec(pack<I>(t).bytes()) == ind &&
              vec(pack<K>(t).bytes()) == skip, "static pack differs");
  return "19 / 35 / 23 bytes, left slot 13";
}

std::string shell(const std::string& cmd, int& status) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen((cmd + " 2>&1").c_str(), "r"), pclose);
  require(pipe != nullptr, "popen failed");
  std::array<char, 4096> buf;
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  int raw = pclose(pipe.release());
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

std::string criterion_9() {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "packed_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = PACKED_CLI;
  const std::string schema_file = std::string(PACKED_SOURCE_DIR) + "/schemas/tree.adt";
  auto in = (dir / "t10.bin").string();
  auto inc = (dir / "t10_inc.bin").string();
  int st = 0;
  shell(cli + " gen-tree --depth 10 --layout indirect --out " + in, st);
  require(st == 0, "gen-tree failed");
  shell(cli + " traverse increment --layout indirect " + in + " --out " + inc, st);
  require(st == 0, "increment failed");
  auto ok = shell(cli + " validate --schema " + schema_file + " --type Tree --layout indirect " + inc, st);
  require(st == 0 && ok.rfind("ok", 0) == 0, "validate failed: " + ok);
  auto sum = shell(cli + " traverse sum --layout indirect " + inc, st);
  auto want = sum_native(gen_symmetric_tree(10)) + 1024;
  require(st == 0 && sum == std::to_string(want) + "\n", "sum printed " + sum);

  auto t1 = (dir / "t1.bin").string();
  shell(cli + " gen-tree --depth 1 --layout plain --out " + t1, st);
  auto dump = shell(cli + " dump --schema " + schema_file + " --type Tree --layout plain " + t1, st);
  require(st == 0, "dump failed");
  std::istringstream lines(dump);
  std::string line;
  std::getline(lines, line);
  require(line == "(Node (Leaf 0) (Leaf 1))", "dump value " + line);
  std::getline(lines, line);
  int elements = 0;
  while (std::getline(lines, line)) elements += !line.empty();
  require(elements == 5, std::to_string(elements) + " wire elements");
  fs::remove_all(dir);
  return "sum " + std::to_string(want) + ", dump shows 5 elements";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"1 oracle round-trip", criterion_1},
      {"2 manual/auto buffer identity", criterion_2},
      {"3 traversal correctness", criterion_3},
      {"4 checked/raw equivalence", criterion_4},
      {"5 complexity separation", criterion_5},
      {"6 unpack-cost direction", criterion_6},
      {"7 adversarial robustness", criterion_7},
      {"8 byte-exact goldens", criterion_8},
      {"9 CLI end-to-end", criterion_9},
  };
  int failures = 0;
  for (const auto& [name, body] : criteria) {
    std::string detail;
    bool ok = true;
    try {
      detail = body();
    } catch (const fail& f) {
      ok = false;
      detail = f.why;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << name << ": " << detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
