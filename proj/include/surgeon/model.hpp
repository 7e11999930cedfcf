#pragma once

// Surgery diagrams: an oriented Legendrian link in the standard contact S^3
// with contact (+-1/m)-coefficients, plus companion knots in its complement.

#include "surgeon/numeric.hpp"

#include <cstdint>
#include <optional>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace surgeon {

enum class Sign : int { negative = -1, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

/// Contact surgery coefficient s/m with s = +-1 and m >= 1.
class ContactCoefficient {
 public:
  ContactCoefficient(Sign sign, std::int64_t magnitude) : sign_(sign), magnitude_(magnitude) {
    if (magnitude < 1) throw std::invalid_argument("contact coefficient magnitude must be >= 1");
  }

  static ContactCoefficient plus_one() { return {Sign::positive, 1}; }
  static ContactCoefficient minus_one() { return {Sign::negative, 1}; }

  /// Accepts "+1", "-1", "1", "+1/m", "-1/m", "1/m". General coefficients
  /// such as "3/4" are rejected.
  static ContactCoefficient parse(std::string_view text) {
    static const std::regex pattern(R"(^([+-]?)1(?:/([0-9]+))?$)");
    std::match_results<std::string_view::const_iterator> match;
    if (!std::regex_match(text.begin(), text.end(), match, pattern)) {
      throw std::invalid_argument(
          "unsupported contact coefficient '" + std::string(text) +
          "': only +-1/m is accepted; expand general coefficients into (+-1/m)-surgeries first");
    }
    const Sign sign = match[1].str() == "-" ? Sign::negative : Sign::positive;
    std::int64_t m = 1;
    if (match[2].matched) {
      const std::string digits = match[2].str();
      if (digits.size() > 15) throw std::invalid_argument("contact coefficient denominator too large");
      m = std::stoll(digits);
      if (m < 1) throw std::invalid_argument("contact coefficient '" + std::string(text) + "' has zero denominator");
    }
    return {sign, m};
  }

  Sign sign() const { return sign_; }
  std::int64_t magnitude() const { return magnitude_; }
  int sign_value() const { return to_int(sign_); }
  Rational value() const { return Rational(sign_value(), magnitude_); }

  std::string str() const {
    std::string s = sign_ == Sign::positive ? "+1" : "-1";
    if (magnitude_ != 1) s += "/" + std::to_string(magnitude_);
    return s;
  }

  friend bool operator==(const ContactCoefficient&, const ContactCoefficient&) = default;

 private:
  Sign sign_;
  std::int64_t magnitude_;
};

struct LegendrianComponent {
  std::string name;
  std::int64_t tb = 0;
  std::int64_t rot = 0;
  ContactCoefficient coeff = ContactCoefficient::plus_one();

  friend bool operator==(const LegendrianComponent&, const LegendrianComponent&) = default;
};

struct LegendrianKnotData {
  std::int64_t tb = 0;
  std::int64_t rot = 0;
  friend bool operator==(const LegendrianKnotData&, const LegendrianKnotData&) = default;
};

struct TransverseKnotData {
  std::int64_t sl = 0;
  Sign sign = Sign::positive;
  friend bool operator==(const TransverseKnotData&, const TransverseKnotData&) = default;
};

/// A knot in the complement of the surgery link; `lk[i]` is its linking
/// number with component i.
struct CompanionKnot {
  std::string name;
  std::variant<LegendrianKnotData, TransverseKnotData> data;
  std::vector<std::int64_t> lk;

  bool is_legendrian() const { return std::holds_alternative<LegendrianKnotData>(data); }
  bool is_transverse() const { return std::holds_alternative<TransverseKnotData>(data); }
  const LegendrianKnotData& legendrian() const { return std::get<LegendrianKnotData>(data); }
  const TransverseKnotData& transverse() const { return std::get<TransverseKnotData>(data); }

  friend bool operator==(const CompanionKnot&, const CompanionKnot&) = default;
};

/// `linking` is symmetric with zero diagonal; framings live in tb.
struct SurgeryDiagram {
  std::vector<LegendrianComponent> components;
  std::vector<std::vector<std::int64_t>> linking;
  std::vector<CompanionKnot> knots;

  std::size_t size() const { return components.size(); }

  const CompanionKnot& knot(std::string_view name) const {
    for (const auto& k : knots)
      if (k.name == name) return k;
    throw std::invalid_argument("unknown knot '" + std::string(name) + "'");
  }

  bool all_unit_coefficients() const {
    for (const auto& c : components)
      if (c.coeff.magnitude() != 1) return false;
    return true;
  }

  friend bool operator==(const SurgeryDiagram&, const SurgeryDiagram&) = default;
};

enum class Severity { warning, error };

struct Diagnostic {
  Severity severity;
  std::string location;  // JSON-pointer style path into the diagram
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == Severity::error) return true;
  return false;
}

inline std::vector<Diagnostic> validate(const SurgeryDiagram& diagram) {
  std::vector<Diagnostic> out;
  auto error = [&](std::string where, std::string what) {
    out.push_back({Severity::error, std::move(where), std::move(what)});
  };
  auto warning = [&](std::string where, std::string what) {
    out.push_back({Severity::warning, std::move(where), std::move(what)});
  };
  const std::size_t k = diagram.size();

  std::set<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = diagram.components[i];
    const std::string where = "/components/" + std::to_string(i);
    if (c.name.empty()) error(where + "/name", "empty component name");
    if (!names.insert(c.name).second) error(where + "/name", "duplicate name '" + c.name + "'");
    if ((c.tb + c.rot) % 2 == 0)
      warning(where, "tb+rot even for '" + c.name + "' (no Legendrian knot in S^3 has this)");
  }

  if (diagram.linking.size() != k) {
    error("/linking", "linking matrix has " + std::to_string(diagram.linking.size()) + " rows, expected " +
                          std::to_string(k));
  } else {
    bool shape_ok = true;
    for (std::size_t i = 0; i < k; ++i)
      if (diagram.linking[i].size() != k) {
        error("/linking/" + std::to_string(i), "linking matrix row has wrong length");
        shape_ok = false;
      }
    if (shape_ok) {
      for (std::size_t i = 0; i < k; ++i)
        if (diagram.linking[i][i] != 0)
          error("/linking/" + std::to_string(i) + "/" + std::to_string(i),
                "linking matrix diagonal must be zero (framing is carried by tb)");
      bool symmetric = true;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
          if (diagram.linking[i][j] != diagram.linking[j][i]) symmetric = false;
      if (!symmetric) error("/linking", "linking matrix not symmetric");
    }
  }

  for (std::size_t i = 0; i < diagram.knots.size(); ++i) {
    const auto& knot = diagram.knots[i];
    const std::string where = "/knots/" + std::to_string(i);
    if (knot.name.empty()) error(where + "/name", "empty knot name");
    if (!names.insert(knot.name).second) error(where + "/name", "duplicate name '" + knot.name + "'");
    if (knot.lk.size() != k)
      error(where + "/lk", "lk vector has length " + std::to_string(knot.lk.size()) + ", expected " +
                               std::to_string(k));
    if (knot.is_legendrian() && (knot.legendrian().tb + knot.legendrian().rot) % 2 == 0)
      warning(where, "tb+rot even for '" + knot.name + "' (no Legendrian knot in S^3 has this)");
  }
  return out;
}

/// Topological surgery slope p/q of a component, normalized to q = m > 0.
struct Slope {
  Integer p;
  Integer q;
  friend bool operator==(const Slope&, const Slope&) = default;
};

inline Slope topological_coefficient(const LegendrianComponent& c) {
  const Integer m = c.coeff.magnitude();
  return {m * c.tb + c.coeff.sign_value(), m};
}

}  // namespace surgeon
