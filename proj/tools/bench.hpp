#pragma once

// Benchmark harness: times each (suite, depth, layout, variant) cell and
// reports median / mean / stddev, plus bytes read where the cursor counts them.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "packed/examples/ast.hpp"
#include "packed/examples/tree.hpp"

namespace packed::bench {

enum class suite { sum, ast, rightmost, increment };

inline constexpr std::array<suite, 4> all_suites{suite::sum, suite::ast, suite::rightmost,
                                                 suite::increment};

constexpr std::string_view to_string(suite s) noexcept {
  switch (s) {
    case suite::sum: return "sum";
    case suite::ast: return "ast";
    case suite::rightmost: return "rightmost";
    case suite::increment: return "increment";
  }
  return "?";
}

inline std::optional<suite> parse_suite(std::string_view text) {
  for (auto s : all_suites) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

struct config {
  std::vector<suite> suites{suite::sum};
  std::vector<unsigned> depths{10, 15, 20};
  std::vector<layout_mode> layouts{all_layouts.begin(), all_layouts.end()};
  unsigned warmup_iters = 2;
  unsigned measured_iters = 20;
};

// Empty when the config is usable, otherwise the reason it is not.
inline std::string check_config(const config& c) {
  if (c.measured_iters < 3) return "measured iterations must be at least 3";
  for (auto d : c.depths) {
    if (d > examples::max_symmetric_depth) return "depth " + std::to_string(d) + " exceeds 30";
  }
  if (c.suites.empty() || c.depths.empty() || c.layouts.empty()) return "nothing to run";
  return {};
}

struct record {
  std::string suite;
  std::string variant;
  layout_mode layout = layout_mode::plain;
  unsigned depth = 0;
  double median_ns = 0;
  double mean_ns = 0;
  double stddev_ns = 0;
  std::optional<std::size_t> bytes_consumed;
};

struct timing {
  double median_ns = 0;
  double mean_ns = 0;
  double stddev_ns = 0;
};

// Keeps a result alive as far as the optimiser is concerned.
template <class T>
inline void keep(const T& value) {
  asm volatile("" : : "r"(&value) : "memory");
}

inline timing summarize(std::vector<double> samples) {
  timing t;
  if (samples.empty()) return t;
  std::sort(samples.begin(), samples.end());
  auto n = samples.size();
  t.median_ns = n % 2 ? samples[n / 2] : (samples[n / 2 - 1] + samples[n / 2]) / 2;
  t.mean_ns = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(n);
  double var = 0;
  for (auto s : samples) var += (s - t.mean_ns) * (s - t.mean_ns);
  t.stddev_ns = std::sqrt(var / static_cast<double>(n));
  return t;
}

// Runs f warmup times untimed, then iters times under a monotonic clock.
template <class F>
timing measure(F&& f, unsigned warmup, unsigned iters) {
  using clock = std::chrono::steady_clock;
  for (unsigned i = 0; i < warmup; ++i) keep(f());
  std::vector<double> samples;
  samples.reserve(iters);
  for (unsigned i = 0; i < iters; ++i) {
    auto t0 = clock::now();
    auto r = f();
    keep(r);
    auto t1 = clock::now();
    samples.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
  }
  return summarize(std::move(samples));
}

namespace detail {

struct cell {
  std::string variant;
  std::function<std::int64_t()> run;
  // Counted run, separate from the timed ones.
  std::function<std::size_t()> count;
};

template <layout_mode L>
std::vector<cell> cells(suite s, const examples::Tree& tree,
                        const buffer<L, examples::Tree>& tp, const examples::Ast& ast,
                        const buffer<L, examples::Ast>& ap) {
  using namespace examples;
  auto counted = [](auto f) {
    return [f] {
      std::size_t n = 0;
      f(&n);
      return n;
    };
  };
  switch (s) {
    case suite::sum:
      return {
          {"native", [&] { return sum_native(tree); }, {}},
          {"packed-checked", [&] { return sum_packed(tp); },
           counted([&](std::size_t* n) { sum_packed(tp, n); })},
          {"packed-raw", [&] { return sum_raw(tp); },
           counted([&](std::size_t* n) { sum_raw(tp, n); })},
          {"unpack-then-process", [&] { return unpack_then_sum(tp); }, {}},
      };
    case suite::ast:
      return {
          {"native", [&] { return eval_native(ast); }, {}},
          {"packed-checked", [&] { return eval_packed(ap); },
           counted([&](std::size_t* n) { eval_packed(ap, n); })},
          {"packed-raw", [&] { return eval_raw(ap); },
           counted([&](std::size_t* n) { eval_raw(ap, n); })},
          {"unpack-then-process", [&] { return unpack_then_eval(ap); }, {}},
      };
    case suite::rightmost: {
      std::vector<cell> out{{"native", [&] { return rightmost_native(tree); }, {}}};
      if constexpr (L == layout_mode::plain) {
        out.push_back({"packed-checked", [&] { return rightmost_packed_plain(tp); },
                       counted([&](std::size_t* n) { rightmost_packed_plain(tp, n); })});
      } else {
        out.push_back({"packed-checked", [&] { return rightmost_packed_indirect(tp); },
                       counted([&](std::size_t* n) { rightmost_packed_indirect(tp, n); })});
      }
      out.push_back({"packed-raw", [&] { return rightmost_raw(tp); },
                     counted([&](std::size_t* n) { rightmost_raw(tp, n); })});
      return out;
    }
    case suite::increment: {
      auto length = [](const auto& p) { return static_cast<std::int64_t>(p.size()); };
      return {
          {"native", [&] { return static_cast<std::int64_t>(increment_native(tree).alt.index()); },
           {}},
          {"packed-checked", [&, length] { return length(increment_packed(tp)); }, {}},
          {"unpack-then-process", [&, length] { return length(unpack_increment_repack(tp)); }, {}},
          {"deserialise-and-increment",
           [&, length] { return length(case_increment_then_pack(tp)); }, {}},
      };
    }
  }
  return {};
}

}  // namespace detail

// Runs every cell sequentially. Inputs are built before timing starts.
inline std::vector<record> run(const config& c, const std::function<void(const record&)>& on_record = {}) {
  std::vector<record> out;
  for (auto s : c.suites) {
    for (auto depth : c.depths) {
      std::optional<examples::Tree> tree;
      std::optional<examples::Ast> ast;
      if (s == suite::ast) {
        ast = examples::gen_symmetric_ast(depth);
      } else {
        tree = examples::gen_symmetric_tree(depth);
      }
      for (auto layout : c.layouts) {
        visit_layout(layout, [&](auto lc) {
          constexpr layout_mode L = decltype(lc)::value;
          buffer<L, examples::Tree> tp;
          buffer<L, examples::Ast> ap;
          // Packed inputs are built outside the timed region.
          if (tree) tp = pack<L>(*tree);
          if (ast) ap = pack<L>(*ast);
          static const examples::Tree no_tree = examples::make_Leaf(0);
          static const examples::Ast no_ast = examples::make_Value(1);
          for (auto& cl : detail::cells<L>(s, tree ? *tree : no_tree, tp,
                                           ast ? *ast : no_ast, ap)) {
            auto t = measure(cl.run, c.warmup_iters, c.measured_iters);
            record r{std::string(to_string(s)), cl.variant, L, depth,
                     t.median_ns, t.mean_ns, t.stddev_ns, std::nullopt};
            if (cl.count) r.bytes_consumed = cl.count();
            if (on_record) on_record(r);
            out.push_back(std::move(r));
          }
        });
      }
    }
  }
  return out;
}

inline constexpr std::string_view csv_header =
    "suite,variant,layout,depth,median_ns,mean_ns,stddev_ns,bytes_consumed";

inline void write_csv_row(std::ostream& out, const record& r) {
  out << r.suite << ',' << r.variant << ',' << to_string(r.layout) << ',' << r.depth << ','
      << std::fixed << std::setprecision(1) << r.median_ns << ',' << r.mean_ns << ','
      << r.stddev_ns << ',';
  if (r.bytes_consumed) out << *r.bytes_consumed;
  out << '\n';
}

inline void write_table_header(std::ostream& out) {
  out << std::left << std::setw(10) << "suite" << std::setw(27) << "variant" << std::setw(20)
      << "layout" << std::right << std::setw(6) << "depth" << std::setw(15) << "median_ns"
      << std::setw(15) << "mean_ns" << std::setw(13) << "stddev_ns" << std::setw(16)
      << "bytes_consumed" << '\n';
}

inline void write_table_row(std::ostream& out, const record& r) {
  out << std::left << std::setw(10) << r.suite << std::setw(27) << r.variant << std::setw(20)
      << to_string(r.layout) << std::right << std::setw(6) << r.depth << std::fixed
      << std::setprecision(0) << std::setw(15) << r.median_ns << std::setw(15) << r.mean_ns
      << std::setw(13) << r.stddev_ns << std::setw(16)
      << (r.bytes_consumed ? std::to_string(*r.bytes_consumed) : std::string("-")) << '\n';
}

}  // namespace packed::bench
