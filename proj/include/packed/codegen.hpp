#pragma once

// C++ code generator: turns a schema into the compile-time surface for each
// of its types. For every ADT T the output contains the native struct (which
// doubles as the descriptor the library templates consume), make_C factories,
// and, in one namespace per layout, builder_T, pack_T, unpack_T, case_T, transform_T,
// start_C and write_C. Layout namespaces coexist, so a program can work with
// plain and indirect buffers side by side.

#include <cstddef>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "packed/error.hpp"
#include "packed/schema.hpp"
#include "packed/wire.hpp"

namespace packed {

struct codegen_options {
  std::string ns = "generated";
  std::string source;  // mentioned in the banner when set
  std::vector<layout_mode> layouts{all_layouts.begin(), all_layouts.end()};
};

inline std::string layout_namespace(layout_mode layout) {
  switch (layout) {
    case layout_mode::plain: return "plain";
    case layout_mode::indirect: return "indirect";
    case layout_mode::indirect_skip_last: return "indirect_skip_last";
  }
  return "unknown";
}

namespace detail {

class api_writer {
 public:
  api_writer(const schema& s, const codegen_options& opt) : schema_(s), opt_(opt) {}

  std::string run() {
    check();
    banner();
    for (const auto& adt : schema_.adts()) out_ << "struct " << adt.name << ";\n";
    out_ << '\n';
    for (const auto& adt : schema_.adts()) native(adt);
    // Factories take later types by value, so they follow every definition.
    for (const auto& adt : schema_.adts()) factories(adt);
    for (auto layout : opt_.layouts) surface(layout);
    out_ << "}  // namespace " << opt_.ns << '\n';
    return out_.str();
  }

 private:
  void check() {
    validate_schema(schema_);
    std::unordered_map<std::string, std::string> owner;
    for (const auto& adt : schema_.adts()) {
      for (const auto& c : adt.constructors) {
        auto [it, fresh] = owner.emplace(c.name, adt.name);
        if (!fresh) {
          throw error(errc::schema_error, "constructor '" + c.name + "' appears in both '" +
                                              it->second + "' and '" + adt.name +
                                              "'; generated names would collide");
        }
      }
    }
  }

  std::string qualified(const std::string& name) const { return "::" + opt_.ns + "::" + name; }

  static std::string alt_name(const adt_decl& adt, const constructor_decl& c) {
    return c.name == adt.name ? c.name + "_" : c.name;
  }

  std::string storage(const field_type& f) const {
    if (std::holds_alternative<prim_int>(f)) return "::packed::Int";
    return "::packed::box<" + qualified(std::get<adt_ref>(f).name) + ">";
  }

  std::string descriptor(const field_type& f) const {
    if (std::holds_alternative<prim_int>(f)) return "::packed::Int";
    return qualified(std::get<adt_ref>(f).name);
  }

  std::string param(const field_type& f, std::size_t i, bool by_value) const {
    auto name = "f" + std::to_string(i);
    if (std::holds_alternative<prim_int>(f)) return "::packed::Int " + name;
    auto type = qualified(std::get<adt_ref>(f).name);
    return by_value ? type + " " + name : "const " + type + "& " + name;
  }

  void banner() {
    out_ << "// Generated by packed gen-api";
    if (!opt_.source.empty()) out_ << " from " << opt_.source;
    out_ << ". Do not edit.\n"
         << "#pragma once\n\n"
         << "#include <string_view>\n"
         << "#include <tuple>\n"
         << "#include <utility>\n"
         << "#include <variant>\n\n"
         << "#include \"packed/packed.hpp\"\n\n"
         << "namespace " << opt_.ns << " {\n\n";
  }

  void native(const adt_decl& adt) {
    out_ << "struct " << adt.name << " {\n";
    for (const auto& c : adt.constructors) {
      out_ << "  struct " << alt_name(adt, c) << " {\n    std::tuple<";
      for (std::size_t i = 0; i < c.fields.size(); ++i) {
        out_ << (i ? ", " : "") << storage(c.fields[i]);
      }
      out_ << "> fields;\n"
           << "    friend bool operator==(const " << alt_name(adt, c) << "&, const "
           << alt_name(adt, c) << "&) = default;\n  };\n";
    }
    out_ << "\n  using constructors = ::packed::constructors<\n";
    for (std::size_t k = 0; k < adt.constructors.size(); ++k) {
      const auto& c = adt.constructors[k];
      out_ << "      ::packed::ctor<\"" << c.name << '"';
      for (const auto& f : c.fields) out_ << ", " << descriptor(f);
      out_ << '>' << (k + 1 < adt.constructors.size() ? ",\n" : ">;\n");
    }
    out_ << "  static constexpr std::string_view name = \"" << adt.name << "\";\n\n"
         << "  std::variant<";
    for (std::size_t k = 0; k < adt.constructors.size(); ++k) {
      out_ << (k ? ", " : "") << alt_name(adt, adt.constructors[k]);
    }
    out_ << "> alt;\n\n"
         << "  friend bool operator==(const " << adt.name << "&, const " << adt.name
         << "&) = default;\n};\n\n";
  }

  void factories(const adt_decl& adt) {
    for (const auto& c : adt.constructors) {
      out_ << "inline " << adt.name << " make_" << c.name << '(';
      for (std::size_t i = 0; i < c.fields.size(); ++i) {
        out_ << (i ? ", " : "") << param(c.fields[i], i, true);
      }
      out_ << ") {\n  return " << adt.name << "{" << adt.name << "::" << alt_name(adt, c) << "{{";
      for (std::size_t i = 0; i < c.fields.size(); ++i) {
        out_ << (i ? ", " : "");
        if (std::holds_alternative<prim_int>(c.fields[i])) {
          out_ << 'f' << i;
        } else {
          out_ << storage(c.fields[i]) << "(std::move(f" << i << "))";
        }
      }
      out_ << "}}};\n}\n";
    }
    out_ << '\n';
  }

  void continuation_params(const adt_decl& adt, std::ostringstream& tparams,
                           std::ostringstream& params, std::ostringstream& args) const {
    for (std::size_t k = 0; k < adt.constructors.size(); ++k) {
      const auto& name = adt.constructors[k].name;
      tparams << ", class K" << name;
      params << ", K" << name << "&& on_" << name;
      args << ", std::forward<K" << name << ">(on_" << name << ')';
    }
  }

  void surface(layout_mode layout) {
    // Spelled out in full so that several generated headers can share a namespace.
    const auto lm = "::packed::layout_mode::" + layout_namespace(layout);
    out_ << "namespace " << layout_namespace(layout) << " {\n\n";
    for (const auto& adt : schema_.adts()) {
      const auto t = qualified(adt.name);
      const auto needs_head = "::packed::needs<" + lm + ", ::packed::type_list<" + t + ", Pending...>, R>";

      out_ << "using builder_" << adt.name << " = ::packed::builder<" << lm << ", " << t << ">;\n\n";
      out_ << "inline ::packed::buffer<" << lm << ", " << t << "> pack_" << adt.name << "(const " << t
           << "& x) {\n  return ::packed::pack<" << lm << ">(x);\n}\n\n";
      out_ << "inline " << t << " unpack_" << adt.name << "(const ::packed::buffer<" << lm << ", " << t
           << ">& p) {\n  return ::packed::unpack(p);\n}\n\n";
      out_ << "template <class... Rest>\nstd::pair<" << t << ", ::packed::reader<" << lm << ", Rest...>> unpack_"
           << adt.name << "(const ::packed::reader<" << lm << ", " << t
           << ", Rest...>& c) {\n  return ::packed::unpack(c);\n}\n\n";

      std::ostringstream tparams, params, args;
      continuation_params(adt, tparams, params, args);
      out_ << "template <class... Rest" << tparams.str() << ">\nauto case_" << adt.name
           << "(const ::packed::reader<" << lm << ", " << t << ", Rest...>& c" << params.str()
           << ") {\n  return ::packed::case_of<" << t << ">(c" << args.str() << ");\n}\n\n";
      out_ << "template <class... RestIn, class... Pending, class R" << tparams.str()
           << ">\nauto transform_" << adt.name << "(const ::packed::reader<" << lm << ", " << t
           << ", RestIn...>& c, " << needs_head << "&& out" << params.str()
           << ") {\n  return ::packed::transform_of<" << t << ">(c, std::move(out)" << args.str()
           << ");\n}\n\n";

      for (std::size_t k = 0; k < adt.constructors.size(); ++k) {
        const auto& c = adt.constructors[k];
        out_ << "template <class... Pending, class R>\nauto start_" << c.name << '(' << needs_head
             << "&& b) {\n  return ::packed::start<" << t << ", " << k << ">(std::move(b));\n}\n\n";
        out_ << "template <class... Pending, class R>\nauto write_" << c.name << '(' << needs_head
             << "&& b";
        for (std::size_t i = 0; i < c.fields.size(); ++i) out_ << ", " << param(c.fields[i], i, false);
        out_ << ") {\n  return ::packed::write_ctor<" << t << ", " << k << ">(std::move(b)";
        for (std::size_t i = 0; i < c.fields.size(); ++i) out_ << ", f" << i;
        out_ << ");\n}\n\n";
      }
    }
    out_ << "}  // namespace " << layout_namespace(layout) << "\n\n";
  }

  const schema& schema_;
  const codegen_options& opt_;
  std::ostringstream out_;
};

}  // namespace detail

// Throws errc::schema_error when the schema is invalid or its constructor
// names would produce colliding C++ declarations.
inline std::string generate_api(const schema& s, const codegen_options& options = {}) {
  return detail::api_writer(s, options).run();
}

}  // namespace packed
