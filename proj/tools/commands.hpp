#pragma once

// The packed command-line tool. run_cli is the whole program minus main, so
// tests can drive it in-process.
//
// Exit codes: 0 ok, 2 bad arguments, 3 I/O failure, 4 invalid buffer,
// 5 division by zero.

#include <CLI11.hpp>

#include <cstddef>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "packed/codegen.hpp"
#include "packed/examples/ast.hpp"
#include "packed/examples/tree.hpp"
#include "packed/schema.hpp"

namespace packed::cli {

enum exit_code : int { ok = 0, bad_args = 2, io_failure = 3, invalid_buffer = 4, div_by_zero = 5 };

struct failure {
  int code;
  std::string message;
};

inline std::vector<std::byte> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw failure{io_failure, "cannot open " + path};
  std::vector<char> chars((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw failure{io_failure, "cannot read " + path};
  std::vector<std::byte> out(chars.size());
  std::memcpy(out.data(), chars.data(), chars.size());
  return out;
}

inline std::string read_text(const std::string& path) {
  auto bytes = read_file(path);
  return std::string(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

inline void write_file(const std::string& path, bytes_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw failure{io_failure, "cannot open " + path + " for writing"};
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw failure{io_failure, "cannot write " + path};
}

inline void write_text(const std::string& path, const std::string& text) {
  write_file(path, bytes_view(reinterpret_cast<const std::byte*>(text.data()), text.size()));
}

inline layout_mode layout_arg(const std::string& text) {
  auto l = parse_layout(text);
  if (!l) throw failure{bad_args, "unknown layout '" + text + "'"};
  return *l;
}

inline schema load_schema(const std::string& path) {
  auto text = read_text(path);
  try {
    return parse_schema(text);
  } catch (const error& e) {
    throw failure{bad_args, path + ": " + e.what()};
  }
}

inline void check_depth(unsigned depth) {
  if (depth > examples::max_symmetric_depth) {
    throw failure{bad_args, "depth " + std::to_string(depth) + " exceeds " +
                                std::to_string(examples::max_symmetric_depth)};
  }
}

template <class T>
void check_as(layout_mode layout, bytes_view bytes) {
  static const schema s = schema_of<T>();
  check_buffer(s, std::string(T::name), layout, bytes);
}

inline std::string hex(bytes_view bytes) {
  std::ostringstream out;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (i) out << ' ';
    out << std::hex << std::setw(2) << std::setfill('0') << std::to_integer<int>(bytes[i]);
  }
  return out.str();
}

struct options {
  unsigned depth = 0;
  std::string layout = "plain";
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string schema_path;
  std::string type;
  std::string file;
  std::string op;
  bool use_indirections = false;
  std::string ns = "generated";
  std::string source;
  std::vector<std::string> suites{"sum"};
  std::vector<unsigned> depths{10, 15, 20};
  std::vector<std::string> layouts{"plain", "indirect", "indirect-skip-last"};
  unsigned warmup = 2;
  unsigned iters = 20;
  std::string format = "table";
};

inline int gen_tree(const options& o, std::ostream& out) {
  check_depth(o.depth);
  auto layout = layout_arg(o.layout);
  visit_layout(layout, [&](auto lc) {
    auto p = examples::pack_symmetric_tree<decltype(lc)::value>(o.depth);
    write_file(o.out, p.bytes());
    out << "wrote " << p.size() << " bytes to " << o.out << '\n';
  });
  return ok;
}

inline int gen_ast(const options& o, std::ostream& out) {
  check_depth(o.depth);
  auto layout = layout_arg(o.layout);
  auto ast = o.seed ? examples::gen_random_ast(*o.seed, o.depth) : examples::gen_symmetric_ast(o.depth);
  visit_layout(layout, [&](auto lc) {
    auto p = pack<decltype(lc)::value>(ast);
    write_file(o.out, p.bytes());
    out << "wrote " << p.size() << " bytes to " << o.out << '\n';
  });
  return ok;
}

inline int validate(const options& o, std::ostream& out) {
  auto s = load_schema(o.schema_path);
  if (!s.find(o.type)) throw failure{bad_args, "no type '" + o.type + "' in " + o.schema_path};
  auto layout = layout_arg(o.layout);
  auto bytes = read_file(o.file);
  auto summary = check_buffer(s, o.type, layout, bytes);
  out << "ok: " << o.type << " under " << to_string(layout) << ", " << summary.bytes << " bytes, "
      << summary.values << " constructors, " << summary.ints << " ints, " << summary.field_sizes
      << " field sizes\n";
  return ok;
}

inline int dump(const options& o, std::ostream& out) {
  auto s = load_schema(o.schema_path);
  if (!s.find(o.type)) throw failure{bad_args, "no type '" + o.type + "' in " + o.schema_path};
  auto layout = layout_arg(o.layout);
  auto bytes = read_file(o.file);
  auto value = validate_buffer(s, o.type, layout, bytes);
  out << to_sexpr(s, value) << "\n\n";
  bytes_view view(bytes);
  for (const auto& e : annotate_buffer(s, o.type, layout, bytes)) {
    out << std::setw(8) << std::setfill('0') << std::hex << e.offset << std::dec
        << std::setfill(' ') << "  " << std::left << std::setw(25)
        << hex(view.subspan(e.offset, e.width)) << std::setw(6) << e.kind << std::right
        << e.meaning << '\n';
  }
  return ok;
}

inline int traverse(const options& o, std::ostream& out) {
  using namespace examples;
  auto layout = layout_arg(o.layout);
  if (o.use_indirections && o.op != "rightmost") {
    throw failure{bad_args, "--use-indirections only applies to rightmost"};
  }
  if (o.use_indirections && layout == layout_mode::plain) {
    throw failure{bad_args, "--use-indirections needs an indirect layout"};
  }
  if (o.op == "increment" && o.out.empty()) throw failure{bad_args, "increment needs --out"};
  if (o.op != "increment" && !o.out.empty()) throw failure{bad_args, "--out only applies to increment"};
  auto bytes = read_file(o.file);
  if (o.op == "eval") {
    check_as<Ast>(layout, bytes);
  } else {
    check_as<Tree>(layout, bytes);
  }
  visit_layout(layout, [&](auto lc) {
    constexpr layout_mode L = decltype(lc)::value;
    if (o.op == "eval") {
      out << eval_packed(from_bytes<L, Ast>(std::move(bytes))) << '\n';
      return;
    }
    auto p = from_bytes<L, Tree>(std::move(bytes));
    if (o.op == "sum") {
      out << sum_packed(p) << '\n';
    } else if (o.op == "rightmost") {
      if constexpr (L != layout_mode::plain) {
        if (o.use_indirections) {
          out << rightmost_packed_indirect(p) << '\n';
          return;
        }
      }
      out << rightmost_packed_plain(p) << '\n';
    } else {
      auto q = increment_packed(p);
      write_file(o.out, q.bytes());
      out << "wrote " << q.size() << " bytes to " << o.out << '\n';
    }
  });
  return ok;
}

inline int bench_cmd(const options& o, std::ostream& out) {
  bench::config c;
  c.suites.clear();
  for (const auto& name : o.suites) {
    auto s = bench::parse_suite(name);
    if (!s) throw failure{bad_args, "unknown suite '" + name + "'"};
    c.suites.push_back(*s);
  }
  c.layouts.clear();
  for (const auto& name : o.layouts) c.layouts.push_back(layout_arg(name));
  c.depths = o.depths;
  c.warmup_iters = o.warmup;
  c.measured_iters = o.iters;
  if (auto why = bench::check_config(c); !why.empty()) throw failure{bad_args, why};
  bool csv = o.format == "csv";
  if (csv) {
    out << bench::csv_header << '\n';
  } else {
    bench::write_table_header(out);
  }
  bench::run(c, [&](const bench::record& r) {
    if (csv) {
      bench::write_csv_row(out, r);
    } else {
      bench::write_table_row(out, r);
    }
    out.flush();
  });
  return ok;
}

inline int gen_api(const options& o, std::ostream& out) {
  auto s = load_schema(o.schema_path);
  codegen_options opt;
  opt.ns = o.ns;
  opt.source = o.source.empty() ? o.schema_path : o.source;
  std::string code;
  try {
    code = generate_api(s, opt);
  } catch (const error& e) {
    throw failure{bad_args, e.what()};
  }
  if (o.out.empty()) {
    out << code;
  } else {
    write_text(o.out, code);
  }
  return ok;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  CLI::App app{"Build, inspect, traverse and benchmark packed buffers"};
  app.require_subcommand(1);
  options o;
  const std::vector<std::string> layout_names{"plain", "indirect", "indirect-skip-last"};
  auto layout_check = CLI::IsMember(layout_names);

  auto* gt = app.add_subcommand("gen-tree", "Write a full binary tree as a packed file");
  gt->add_option("--depth", o.depth, "Tree depth (2^depth leaves)")->required();
  gt->add_option("--layout", o.layout)->check(layout_check);
  gt->add_option("--out", o.out, "Output file")->required();

  auto* ga = app.add_subcommand("gen-ast", "Write an arithmetic expression as a packed file");
  ga->add_option("--depth", o.depth, "Depth (maximum depth with --seed)")->required();
  ga->add_option("--seed", o.seed, "Generate a random expression from this seed");
  ga->add_option("--layout", o.layout)->check(layout_check);
  ga->add_option("--out", o.out, "Output file")->required();

  auto* va = app.add_subcommand("validate", "Check a packed file against a schema type");
  auto* du = app.add_subcommand("dump", "Print a packed file as an s-expression and annotated hex");
  for (auto* sub : {va, du}) {
    sub->add_option("--schema", o.schema_path, "Schema file")->required();
    sub->add_option("--type", o.type, "Root type")->required();
    sub->add_option("--layout", o.layout)->check(layout_check);
    sub->add_option("file", o.file, "Packed file")->required();
  }

  auto* tr = app.add_subcommand("traverse", "Run sum, eval, rightmost or increment over a packed file");
  tr->add_option("op", o.op)->required()->check(CLI::IsMember({"sum", "eval", "rightmost", "increment"}));
  tr->add_option("file", o.file, "Packed file")->required();
  tr->add_option("--layout", o.layout)->check(layout_check);
  tr->add_flag("--use-indirections", o.use_indirections, "rightmost: jump over left subtrees");
  tr->add_option("--out", o.out, "increment: output file");

  auto* be = app.add_subcommand("bench", "Time the benchmark suites");
  be->add_option("--suite", o.suites, "sum, ast, rightmost, increment")->delimiter(',');
  be->add_option("--depths", o.depths)->delimiter(',');
  be->add_option("--layouts", o.layouts)->delimiter(',')->check(layout_check);
  be->add_option("--warmup", o.warmup);
  be->add_option("--iters", o.iters, "Measured iterations (at least 3)");
  be->add_option("--format", o.format)->check(CLI::IsMember({"table", "csv"}));

  auto* gp = app.add_subcommand("gen-api", "Generate the C++ API for a schema");
  gp->add_option("--schema", o.schema_path, "Schema file")->required();
  gp->add_option("--namespace", o.ns, "C++ namespace for the generated code");
  gp->add_option("--source", o.source, "Name shown in the banner");
  gp->add_option("--out", o.out, "Output header (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : bad_args;
  }

  try {
    if (*gt) return gen_tree(o, out);
    if (*ga) return gen_ast(o, out);
    if (*va) return validate(o, out);
    if (*du) return dump(o, out);
    if (*tr) return traverse(o, out);
    if (*be) return bench_cmd(o, out);
    if (*gp) return gen_api(o, out);
  } catch (const failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == errc::division_by_zero) return div_by_zero;
    if (e.code() == errc::depth_too_large) return bad_args;
    return invalid_buffer;
  }
  return bad_args;
}

}  // namespace packed::cli
