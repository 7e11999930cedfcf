#pragma once

// Euler class and d3-invariant of the contact structure given by a contact
// (+-1/m)-surgery diagram. Two independent routes to d3:
//   closed form   d3 = 1/4 sum_i (m_i b_i rot_i + (3 - m_i) s_i) - 3/4 sigma(Q) - 1/2
//   (+-1) route   d3 = 1/4 (<b, rot> - 3 sigma(Q) - 2k) - 1/2 + #(+1 components)
// where Q b = rot. The second applies to all-(+-1) diagrams, hence to the
// push-off expansion of any diagram.

#include "surgeon/exactlin.hpp"
#include "surgeon/model.hpp"
#include "surgeon/surgery.hpp"

#include <optional>
#include <stdexcept>

namespace surgeon {

struct EulerClassVector {
  /// Poincare dual of e(xi) in the meridian basis: m_i * rot_i.
  IntVector coefficients;
  bool torsion = false;
  /// Rational solution of Q b = rot, present iff torsion.
  std::optional<RatVector> b;
};

inline RatVector rotation_numbers(const SurgeryDiagram& diagram) {
  RatVector r;
  for (const auto& c : diagram.components) r.emplace_back(c.rot);
  return r;
}

inline EulerClassVector euler_class(const SurgeryDiagram& diagram) {
  EulerClassVector e;
  for (const auto& c : diagram.components) e.coefficients.push_back(Integer(c.coeff.magnitude()) * c.rot);
  auto solved = solve_rational(build_q(diagram).q, rotation_numbers(diagram));
  e.torsion = solved.has_value();
  if (solved) e.b = std::move(solved->particular);
  return e;
}

/// nullopt when the Euler class is not torsion.
inline std::optional<Rational> d3_closed_form(const SurgeryDiagram& diagram) {
  const EulerClassVector e = euler_class(diagram);
  if (!e.torsion) return std::nullopt;
  Rational sum = 0;
  for (std::size_t i = 0; i < diagram.size(); ++i) {
    const auto& c = diagram.components[i];
    sum += c.coeff.magnitude() * (*e.b)[i] * c.rot;
    sum += (3 - c.coeff.magnitude()) * c.coeff.sign_value();
  }
  return sum / 4 - Rational(3, 4) * signature_of_q(diagram) - Rational(1, 2);
}

/// Requires every coefficient to be +-1. nullopt when the Euler class is not
/// torsion.
inline std::optional<Rational> d3_pm1(const SurgeryDiagram& diagram) {
  if (!diagram.all_unit_coefficients())
    throw std::invalid_argument("d3_pm1 requires contact (+-1)-coefficients; expand the diagram first");
  const IntMatrix q = build_q(diagram).q;
  const RatVector rot = rotation_numbers(diagram);
  auto solved = solve_rational(q, rot);
  if (!solved) return std::nullopt;
  long long plus_count = 0;
  for (const auto& c : diagram.components)
    if (c.coeff.sign() == Sign::positive) ++plus_count;
  const long long k = static_cast<long long>(diagram.size());
  const Rational pairing = dot(solved->particular, rot);
  return (pairing - 3 * symmetric_signature(q).signature() - 2 * k) / 4 - Rational(1, 2) + plus_count;
}

struct D3Report {
  HomologyPresentation homology;
  EulerClassVector euler;
  long long signature = 0;
  std::optional<Rational> d3;
  std::optional<Rational> d3_via_expansion;
};

inline D3Report compute_d3(const SurgeryDiagram& diagram) {
  return {homology(build_q(diagram)), euler_class(diagram), signature_of_q(diagram), d3_closed_form(diagram),
          d3_pm1(expand_to_pm1(diagram))};
}

}  // namespace surgeon
