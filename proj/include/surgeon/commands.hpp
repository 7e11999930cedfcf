#pragma once

// The subcommands of the `surgeon` tool, written against streams so they can
// be exercised without a process boundary. Each returns the exit status:
// 0 success, 1 user error, 2 internal error.

#include "surgeon/d3.hpp"
#include "surgeon/frontlang.hpp"
#include "surgeon/invariants.hpp"
#include "surgeon/io.hpp"
#include "surgeon/model.hpp"
#include "surgeon/surgery.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace surgeon::cli {

enum class Format { json, text };

struct Options {
  Format format = Format::json;
  bool color = false;
  std::optional<std::string> knot;
  std::optional<std::string> output;         // expand
  std::optional<std::string> emit_diagram;   // front
};

inline constexpr int kOk = 0;
inline constexpr int kUserError = 1;
inline constexpr int kInternalError = 2;

class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UserError(path + ": cannot write file");
  out << content;
  if (!out) throw UserError(path + ": write failed");
}

inline std::string label(Severity s, bool color) {
  const char* word = s == Severity::error ? "error" : "warning";
  if (!color) return word;
  return std::string(s == Severity::error ? "\x1b[31m" : "\x1b[33m") + word + "\x1b[0m";
}

inline void print_text(std::ostream& out, const Json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      print_text(out, value, prefix + key + ".");
    } else {
      out << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

inline void emit(std::ostream& out, const Json& j, Format format) {
  if (format == Format::json)
    out << dump_json(j) << '\n';
  else
    print_text(out, j);
}

/// Parses and validates; prints diagnostics to `err`. Returns nullopt if the
/// file has errors.
inline std::optional<SurgeryDiagram> load_diagram(const std::string& path, std::ostream& err, bool color) {
  SurgeryDiagram d;
  try {
    d = parse_diagram(read_file(path));
  } catch (const DiagramFileError& e) {
    err << path << ":" << e.location() << ": " << label(Severity::error, color) << ": "
        << std::string(e.what()).substr(e.location().size() + 2) << '\n';
    return std::nullopt;
  }
  const auto diagnostics = validate(d);
  for (const auto& diag : diagnostics)
    err << path << ":" << (diag.location.empty() ? "/" : diag.location) << ": " << label(diag.severity, color) << ": "
        << diag.message << '\n';
  if (has_errors(diagnostics)) return std::nullopt;
  return d;
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UserError& e) {
    err << e.what() << '\n';
    return kUserError;
  } catch (const FrontError& e) {
    err << e.what() << '\n';
    return kUserError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

inline int cmd_check(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto d = load_diagram(path, err, opt.color);
    if (!d) return kUserError;
    Json j{{"valid", true}, {"components", d->size()}, {"knots", d->knots.size()}};
    emit(out, j, opt.format);
    return kOk;
  });
}

inline int cmd_invariants(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto d = load_diagram(path, err, opt.color);
    if (!d) return kUserError;
    if (opt.knot) {
      emit(out, invariants_to_json(compute_invariants(*d, *opt.knot)), opt.format);
      return kOk;
    }
    if (d->knots.empty()) throw UserError(path + ": diagram has no knots");
    Json all = Json::object();
    for (const auto& k : d->knots) all[k.name] = invariants_to_json(compute_invariants(*d, k.name));
    emit(out, all, opt.format);
    return kOk;
  });
}

inline int cmd_d3(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto d = load_diagram(path, err, opt.color);
    if (!d) return kUserError;
    emit(out, d3_to_json(*d, compute_d3(*d)), opt.format);
    return kOk;
  });
}

inline int cmd_expand(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto d = load_diagram(path, err, opt.color);
    if (!d) return kUserError;
    const std::string rendered = render_diagram(expand_to_pm1(*d));
    if (opt.output)
      write_file(*opt.output, rendered);
    else
      out << rendered;
    return kOk;
  });
}

inline Json front_to_json(const FrontInvariants& inv) {
  Json comps = Json::array();
  for (const auto& c : inv.components)
    comps.push_back(Json{{"name", c.name}, {"tb", c.tb}, {"rot", c.rot}, {"writhe", c.writhe}, {"cusps", c.cusps}});
  Json lk = Json::array();
  for (const auto& row : inv.lk) lk.push_back(row);
  return Json{{"components", comps}, {"lk", lk}};
}

inline int cmd_front(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    FrontDocument doc;
    try {
      doc = parse_front(read_file(path));
    } catch (const FrontError& e) {
      err << path << ":" << e.line() << ":" << e.column() << ": " << label(Severity::error, opt.color) << ": "
          << std::string(e.what()).substr(std::string(e.what()).find(": ") + 2) << '\n';
      return kUserError;
    }
    const FrontInvariants inv = classical_invariants(doc);
    if (opt.format == Format::json) {
      out << dump_json(front_to_json(inv)) << '\n';
    } else {
      for (const auto& c : inv.components) out << c.name << ": tb=" << c.tb << " rot=" << c.rot << '\n';
      for (std::size_t i = 0; i < inv.lk.size(); ++i)
        for (std::size_t j = i + 1; j < inv.lk.size(); ++j)
          out << "lk(" << inv.components[i].name << ", " << inv.components[j].name << ") = " << inv.lk[i][j] << '\n';
    }
    if (opt.emit_diagram) write_file(*opt.emit_diagram, render_diagram(to_diagram(doc)));
    return kOk;
  });
}

}  // namespace surgeon::cli
