#pragma once

// Classical invariants of a companion knot after contact (+-1/m)-surgery:
// order in H_1, tb, rot and sl, rational when the order exceeds one.
//
// With a an integral solution of Q a = d l (d minimal) and q_i = m_i:
//   tb_M  = tb  - (1/d) sum a_i q_i l_i
//   rot_M = rot - (1/d) sum a_i q_i rot_i
//   sl_M  = sl  - (1/d) sum a_i q_i (l_i -+ rot_i)   (- for positive transverse)

#include "surgeon/exactlin.hpp"
#include "surgeon/model.hpp"
#include "surgeon/surgery.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace surgeon {

/// Change of a Seifert-dependent invariant when the kernel generator is added
/// to the solution vector.
struct KernelShift {
  IntVector kernel_generator;
  Rational shift;
};

/// A surgered invariant together with its dependence on the Seifert class.
/// `dependence` is empty iff ker Q = 0.
struct SurgeredValue {
  Rational value;
  std::vector<KernelShift> dependence;

  bool unique() const { return dependence.empty(); }
};

/// nullopt means the knot is not rationally nullhomologous. order == 1 means
/// nullhomologous.
inline std::optional<SolveResult> order_and_solution(const SurgeryDiagram& diagram, const CompanionKnot& knot) {
  if (knot.lk.size() != diagram.size()) throw std::invalid_argument("lk vector length does not match the link");
  return minimal_order_solve(build_q(diagram).q, to_integers(knot.lk));
}

namespace detail {

// (1/d) sum_i a_i m_i w_i
inline Rational weighted_pairing(const SurgeryDiagram& diagram, const IntVector& a, const Integer& d,
                                 const std::vector<Integer>& w) {
  Integer sum = 0;
  for (std::size_t i = 0; i < diagram.size(); ++i) sum += a[i] * diagram.components[i].coeff.magnitude() * w[i];
  return Rational(sum, d);
}

inline std::vector<KernelShift> shifts(const SurgeryDiagram& diagram, const SolveResult& solution,
                                       const std::vector<Integer>& w) {
  std::vector<KernelShift> out;
  for (const auto& v : solution.kernel_basis)
    out.push_back({v, -weighted_pairing(diagram, v, solution.order, w)});
  return out;
}

inline std::vector<Integer> rotation_vector(const SurgeryDiagram& diagram) {
  std::vector<Integer> r;
  for (const auto& c : diagram.components) r.emplace_back(c.rot);
  return r;
}

}  // namespace detail

inline Rational tb_surgered(const SurgeryDiagram& diagram, const CompanionKnot& knot, const SolveResult& solution) {
  if (!knot.is_legendrian()) throw std::invalid_argument("tb is only defined for Legendrian knots ('" + knot.name + "')");
  return Rational(knot.legendrian().tb) -
         detail::weighted_pairing(diagram, solution.particular, solution.order, to_integers(knot.lk));
}

inline SurgeredValue rot_surgered(const SurgeryDiagram& diagram, const CompanionKnot& knot,
                                  const SolveResult& solution) {
  if (!knot.is_legendrian())
    throw std::invalid_argument("rot is only defined for Legendrian knots ('" + knot.name + "')");
  const auto rot = detail::rotation_vector(diagram);
  return {Rational(knot.legendrian().rot) - detail::weighted_pairing(diagram, solution.particular, solution.order, rot),
          detail::shifts(diagram, solution, rot)};
}

inline SurgeredValue sl_surgered(const SurgeryDiagram& diagram, const CompanionKnot& knot,
                                 const SolveResult& solution) {
  if (!knot.is_transverse())
    throw std::invalid_argument("sl is only computed for transverse knots ('" + knot.name + "')");
  const auto& t = knot.transverse();
  const auto rot = detail::rotation_vector(diagram);
  std::vector<Integer> w(diagram.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = t.sign == Sign::positive ? Integer(knot.lk[i] - rot[i]) : Integer(knot.lk[i] + rot[i]);
  return {Rational(t.sl) - detail::weighted_pairing(diagram, solution.particular, solution.order, w),
          detail::shifts(diagram, solution, w)};
}

/// Self-linking of the positive/negative transverse push-off: tb -+ rot.
template <class T>
T legendrian_pushoff_sl(const T& tb, const T& rot, Sign sign) {
  return sign == Sign::positive ? T(tb - rot) : T(tb + rot);
}

struct InvariantReport {
  std::string knot;
  bool legendrian = true;
  /// Empty when the knot is not rationally nullhomologous.
  std::optional<SolveResult> solution;
  std::optional<Rational> tb;
  std::optional<SurgeredValue> rot;
  std::optional<SurgeredValue> sl;

  bool rationally_nullhomologous() const { return solution.has_value(); }
};

inline InvariantReport compute_invariants(const SurgeryDiagram& diagram, const std::string& knot_name) {
  const CompanionKnot& knot = diagram.knot(knot_name);
  InvariantReport r;
  r.knot = knot.name;
  r.legendrian = knot.is_legendrian();
  r.solution = order_and_solution(diagram, knot);
  if (!r.solution) return r;
  if (knot.is_legendrian()) {
    r.tb = tb_surgered(diagram, knot, *r.solution);
    r.rot = rot_surgered(diagram, knot, *r.solution);
  } else {
    r.sl = sl_surgered(diagram, knot, *r.solution);
  }
  return r;
}

}  // namespace surgeon
