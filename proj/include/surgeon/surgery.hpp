#pragma once

#include "surgeon/exactlin.hpp"
#include "surgeon/matrix.hpp"
#include "surgeon/model.hpp"

#include <string>
#include <vector>

namespace surgeon {

/// Generalised linking matrix. Row/column i corresponds to the meridian of
/// component i; Q(i,i) = p_i and Q(i,j) = q_j * lk(L_i, L_j).
struct GenLinkingMatrix {
  IntMatrix q;
  IntVector slope_p;
  IntVector slope_q;  // = m_i

  std::size_t size() const { return q.rows(); }

  /// diag(m) * Q, which is always symmetric.
  IntMatrix symmetrized() const {
    IntMatrix s = q;
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) *= slope_q[i];
    return s;
  }
};

inline GenLinkingMatrix build_q(const SurgeryDiagram& diagram) {
  const std::size_t k = diagram.size();
  GenLinkingMatrix g{IntMatrix(k, k), IntVector(k), IntVector(k)};
  for (std::size_t i = 0; i < k; ++i) {
    const Slope s = topological_coefficient(diagram.components[i]);
    g.slope_p[i] = s.p;
    g.slope_q[i] = s.q;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      g.q(i, j) = i == j ? g.slope_p[i] : g.slope_q[j] * diagram.linking[i][j];
  return g;
}

/// H_1 of the surgered manifold: Z^free_rank + sum Z/factor.
struct HomologyPresentation {
  IntVector invariant_factors;
  std::size_t free_rank = 0;

  bool trivial() const { return invariant_factors.empty() && free_rank == 0; }

  std::string str() const {
    if (trivial()) return "0";
    std::string s;
    for (std::size_t i = 0; i < free_rank; ++i) s += (s.empty() ? "" : " + ") + std::string("Z");
    for (const auto& f : invariant_factors) s += (s.empty() ? "" : " + ") + ("Z/" + f.str());
    return s;
  }

  friend bool operator==(const HomologyPresentation&, const HomologyPresentation&) = default;
};

inline HomologyPresentation homology(const IntMatrix& q) {
  const SmithDecomposition s = smith_normal_form(q);
  HomologyPresentation h;
  for (const auto& d : s.diagonal())
    if (d > 1) h.invariant_factors.push_back(d);
  h.free_rank = q.cols() - s.rank;
  return h;
}

inline HomologyPresentation homology(const GenLinkingMatrix& g) { return homology(g.q); }

/// Replaces each (s/m)-component by m Legendrian push-offs with coefficient
/// s. Copies of L_i are consecutive and link each other tb_i times. Diagrams
/// that are already all-(+-1) are returned unchanged.
inline SurgeryDiagram expand_to_pm1(const SurgeryDiagram& diagram) {
  if (diagram.all_unit_coefficients()) return diagram;
  const std::size_t k = diagram.size();
  std::vector<std::size_t> origin;
  SurgeryDiagram out;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = diagram.components[i];
    const auto m = c.coeff.magnitude();
    for (std::int64_t j = 1; j <= m; ++j) {
      LegendrianComponent copy = c;
      copy.coeff = ContactCoefficient(c.coeff.sign(), 1);
      if (m > 1) copy.name = c.name + "." + std::to_string(j);
      out.components.push_back(std::move(copy));
      origin.push_back(i);
    }
  }
  const std::size_t n = origin.size();
  out.linking.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const std::size_t i = origin[a], j = origin[b];
      out.linking[a][b] = i == j ? diagram.components[i].tb : diagram.linking[i][j];
    }
  for (const auto& knot : diagram.knots) {
    CompanionKnot copy = knot;
    copy.lk.clear();
    for (std::size_t a = 0; a < n; ++a) copy.lk.push_back(knot.lk[origin[a]]);
    out.knots.push_back(std::move(copy));
  }
  return out;
}

/// sigma(Q), obtained from the symmetric matrix Q' of the (+-1)-expansion via
/// sigma(Q') = sigma(Q) + sum (m_i - 1) s_i.
inline long long signature_of_q(const SurgeryDiagram& diagram) {
  const GenLinkingMatrix expanded = build_q(expand_to_pm1(diagram));
  long long sigma = symmetric_signature(expanded.q).signature();
  for (const auto& c : diagram.components) sigma -= (c.coeff.magnitude() - 1) * c.coeff.sign_value();
  return sigma;
}

}  // namespace surgeon
