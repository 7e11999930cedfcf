#pragma once

// Exact linear algebra over Z and Q: Smith normal form, integer and rational
// solving with kernel bases, minimal-order solving, exact inertia of symmetric
// matrices, and characteristic polynomials.

#include "surgeon/matrix.hpp"
#include "surgeon/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace surgeon {

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , zeros last.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::size_t rank = 0;

  /// The nonzero diagonal entries d1 | d2 | ... | d_rank.
  IntVector diagonal() const {
    IntVector out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

// Position of the nonzero entry of least absolute value in the trailing
// submatrix starting at (t, t), or nullopt if that submatrix is zero.
inline std::optional<std::pair<std::size_t, std::size_t>> min_nonzero(const IntMatrix& m,
                                                                       std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Integer a = abs_value(m(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& d = s.d;
  const std::size_t diag = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < diag; ++t) {
    bool reduced = false;
    while (!reduced) {
      auto pivot = detail::min_nonzero(d, t);
      if (!pivot) return s;
      auto [pi, pj] = *pivot;
      d.swap_rows(t, pi);
      s.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        s.u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        s.v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest; otherwise fold the offending row in.
      reduced = true;
      for (std::size_t i = t + 1; i < d.rows() && reduced; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, 1);
            s.u.add_row(t, i, 1);
            reduced = false;
            break;
          }
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
    s.rank = t + 1;
  }
  return s;
}

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

/// Row-style Hermite normal form of the row lattice: positive pivots, entries
/// above each pivot reduced into [0, pivot), zero rows dropped.
inline IntMatrix hermite_rows(IntMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < a.rows(); ++i)
        if (a(i, c) != 0 && (!best || abs_value(a(i, c)) < abs_value(a(*best, c)))) best = i;
      if (!best) break;
      a.swap_rows(r, *best);
      bool done = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        a.add_row(i, r, -(a(i, c) / a(r, c)));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) a.add_row(i, r, -floor_div(a(i, c), a(r, c)));
    ++r;
  }
  IntMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

/// Solution of M a = d v over Z; `order` is 1 for plain integer solving.
struct SolveResult {
  Integer order = 1;
  IntVector particular;
  /// Hermite-reduced basis of ker_Z(M).
  std::vector<IntVector> kernel_basis;
};

namespace detail {

inline std::vector<IntVector> kernel_from_smith(const SmithDecomposition& s) {
  const std::size_t n = s.v.rows();
  IntMatrix rows(n - s.rank, n);
  for (std::size_t k = s.rank; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) rows(k - s.rank, i) = s.v(i, k);
  IntMatrix h = hermite_rows(rows);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < h.rows(); ++i) out.push_back(h.row(i));
  return out;
}

// Canonical coset representative of `a` modulo the Hermite-reduced lattice.
inline void reduce_modulo(IntVector& a, const std::vector<IntVector>& hermite) {
  for (const auto& row : hermite) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    Integer q = floor_div(a[c], row[c]);
    if (q == 0) continue;
    for (std::size_t j = 0; j < a.size(); ++j) a[j] -= q * row[j];
  }
}

inline std::optional<SolveResult> solve_scaled(const IntMatrix& m, const IntVector& v, bool minimal_order) {
  if (m.rows() != v.size()) throw std::invalid_argument("solve: dimension mismatch");
  const SmithDecomposition s = smith_normal_form(m);
  const IntVector w = s.u * v;
  for (std::size_t i = s.rank; i < w.size(); ++i)
    if (w[i] != 0) return std::nullopt;

  Integer order = 1;
  for (std::size_t i = 0; i < s.rank; ++i) {
    const Integer& di = s.d(i, i);
    if (minimal_order)
      order = lcm(order, di / gcd(di, w[i]));
    else if (w[i] % di != 0)
      return std::nullopt;
  }
  IntVector y(m.cols(), Integer(0));
  for (std::size_t i = 0; i < s.rank; ++i) y[i] = order * w[i] / s.d(i, i);

  SolveResult out;
  out.order = order;
  out.particular = s.v * y;
  out.kernel_basis = kernel_from_smith(s);
  reduce_modulo(out.particular, out.kernel_basis);
  return out;
}

}  // namespace detail

/// Integral solution of M a = v, or nullopt when none exists.
inline std::optional<SolveResult> solve_integer(const IntMatrix& m, const IntVector& v) {
  return detail::solve_scaled(m, v, false);
}

/// Smallest d >= 1 for which M a = d v has an integral solution. nullopt iff
/// v is not in the rational column space of M.
inline std::optional<SolveResult> minimal_order_solve(const IntMatrix& m, const IntVector& v) {
  return detail::solve_scaled(m, v, true);
}

inline std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  return detail::kernel_from_smith(smith_normal_form(m));
}

struct RationalSolution {
  RatVector particular;
  std::vector<RatVector> kernel_basis;
};

/// Solution of M b = v over Q via reduced row echelon form. Free variables are
/// set to zero in the particular solution; kernel vectors have one free
/// variable equal to 1.
inline std::optional<RationalSolution> solve_rational(const IntMatrix& m, const RatVector& v) {
  if (m.rows() != v.size()) throw std::invalid_argument("solve_rational: dimension mismatch");
  const std::size_t rows = m.rows(), cols = m.cols();
  RatMatrix a(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = Rational(m(i, j));
    a(i, cols) = v[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(r, p);
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j <= cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a(i, c) != 0) a.add_row(i, r, -a(i, c));
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a(i, cols) != 0) return std::nullopt;

  RationalSolution out;
  out.particular.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) out.particular[pivots[i]] = a(i, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    RatVector k(cols, Rational(0));
    k[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -a(i, f);
    out.kernel_basis.push_back(std::move(k));
  }
  return out;
}

/// Counts of positive, zero and negative eigenvalues.
struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  long long signature() const {
    return static_cast<long long>(positive) - static_cast<long long>(negative);
  }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia of a symmetric integer matrix. The nullity comes from the
/// Smith rank; the positive/negative split from symmetric congruence
/// elimination over Q (Sylvester's law of inertia).
inline Inertia symmetric_signature(const IntMatrix& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("symmetric_signature: matrix is not symmetric");
  const std::size_t n = s.rows();
  RatMatrix a = to_rational(s);
  Inertia out;
  std::size_t nonzero_pivots = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // Zero diagonal: a nonzero a(i, j) gives a(i, i) = 2 a(i, j) after
      // adding row/column j to row/column i.
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = k; i < n && !off; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            off = {i, j};
            break;
          }
      if (!off) break;
      a.add_row(off->first, off->second, 1);
      a.add_col(off->first, off->second, 1);
      p = off->first;
    }
    a.swap_rows(k, p);
    a.swap_cols(k, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      a.add_row(i, k, -f);
      a.add_col(i, k, -f);
    }
    (a(k, k) > 0 ? out.positive : out.negative) += 1;
    ++nonzero_pivots;
  }
  const std::size_t r = rank(s);
  if (r != nonzero_pivots) throw std::logic_error("symmetric_signature: rank mismatch");
  out.zero = n - r;
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials, coefficients stored lowest degree first.

using IntPolynomial = IntVector;

/// det(x I - A) by Faddeev-LeVerrier; every division is exact over Z.
inline IntPolynomial characteristic_polynomial(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  IntPolynomial c(n + 1, Integer(0));
  c[n] = 1;
  IntMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const IntMatrix am = a * mk;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Integer(k);
  }
  return c;
}

/// Exact quotient num / den over Z, or nullopt if the remainder is nonzero or
/// a coefficient division is inexact.
inline std::optional<IntPolynomial> divide_exact(IntPolynomial num, const IntPolynomial& den) {
  auto degree = [](const IntPolynomial& p) {
    std::ptrdiff_t d = static_cast<std::ptrdiff_t>(p.size()) - 1;
    while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
    return d;
  };
  const auto dd = degree(den);
  if (dd < 0) throw std::invalid_argument("polynomial division by zero");
  const auto dn = degree(num);
  if (dn < dd) {
    if (dn >= 0) return std::nullopt;
    return IntPolynomial{Integer(0)};
  }
  const Integer& lead = den[static_cast<std::size_t>(dd)];
  IntPolynomial q(static_cast<std::size_t>(dn - dd + 1), Integer(0));
  for (auto i = dn; i >= dd; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (num[ui] == 0) continue;
    if (num[ui] % lead != 0) return std::nullopt;
    const Integer f = num[ui] / lead;
    q[static_cast<std::size_t>(i - dd)] = f;
    for (std::ptrdiff_t j = 0; j <= dd; ++j) num[static_cast<std::size_t>(i - dd + j)] -= f * den[static_cast<std::size_t>(j)];
  }
  for (const auto& r : num)
    if (r != 0) return std::nullopt;
  return q;
}

/// Root-sign counts of a polynomial whose roots are all real, by Descartes'
/// rule of signs (exact in that case). Throws if the counts do not add up to
/// the degree, i.e. the polynomial has non-real roots.
inline Inertia real_rooted_inertia(const IntPolynomial& p) {
  std::size_t lo = 0;
  while (lo < p.size() && p[lo] == 0) ++lo;
  if (lo == p.size()) throw std::invalid_argument("real_rooted_inertia: zero polynomial");
  std::size_t hi = p.size() - 1;
  while (p[hi] == 0) --hi;
  auto changes = [&](bool alternate) {
    std::size_t count = 0;
    int last = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
      int s = sign_of(p[i]);
      if (s == 0) continue;
      if (alternate && (i % 2 == 1)) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  Inertia out{changes(false), lo, changes(true)};
  if (out.positive + out.negative + out.zero != hi)
    throw std::domain_error("real_rooted_inertia: polynomial has non-real roots");
  return out;
}

}  // namespace surgeon
