#pragma once

// Generators and independent oracles shared by the unit and acceptance tests.

#include "surgeon/surgeon.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace surgeon::testing {

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(rng, -bound, bound);
  return m;
}

struct DiagramBounds {
  std::size_t max_components = 3;
  std::int64_t max_tb = 3;
  std::int64_t max_magnitude = 4;
  std::int64_t max_linking = 3;
  std::size_t knots = 1;
};

/// Random valid diagram: tb + rot odd, |rot| <= |tb| + 1, symmetric linking.
inline SurgeryDiagram random_diagram(std::mt19937_64& rng, const DiagramBounds& b = {}) {
  SurgeryDiagram d;
  const auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(b.max_components)));
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t tb = uniform(rng, -b.max_tb, b.max_tb);
    const std::int64_t reach = std::abs(tb) + 1;
    std::int64_t rot = uniform(rng, -reach, reach);
    if ((tb + rot) % 2 == 0) rot += rot < reach ? 1 : -1;
    const Sign s = uniform(rng, 0, 1) ? Sign::positive : Sign::negative;
    d.components.push_back({"L" + std::to_string(i + 1), tb, rot, ContactCoefficient(s, uniform(rng, 1, b.max_magnitude))});
  }
  d.linking.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) d.linking[i][j] = d.linking[j][i] = uniform(rng, -b.max_linking, b.max_linking);
  for (std::size_t n = 0; n < b.knots; ++n) {
    CompanionKnot knot{"K" + std::to_string(n), LegendrianKnotData{-1, 0}, {}};
    const std::int64_t tb = uniform(rng, -3, 1);
    std::int64_t rot = uniform(rng, -2, 2);
    if ((tb + rot) % 2 == 0) rot += 1;
    knot.data = LegendrianKnotData{tb, rot};
    for (std::size_t i = 0; i < k; ++i) knot.lk.push_back(uniform(rng, -3, 3));
    d.knots.push_back(std::move(knot));
  }
  return d;
}

/// Random diagram with det Q = 0 and a knot whose lk vector is Q a0 for a
/// random a0, so the knot is nullhomologous with a non-unique solution.
inline SurgeryDiagram random_singular_diagram(std::mt19937_64& rng) {
  DiagramBounds b;
  b.max_tb = 2;
  b.max_magnitude = 2;
  b.max_linking = 2;
  while (true) {
    SurgeryDiagram d = random_diagram(rng, b);
    if (d.size() < 2) continue;
    const IntMatrix q = build_q(d).q;
    if (determinant(q) != 0) continue;
    IntVector a0(d.size());
    for (auto& x : a0) x = uniform(rng, -2, 2);
    d.knots[0].lk.clear();
    for (const auto& x : q * a0) d.knots[0].lk.push_back(static_cast<std::int64_t>(x));
    return d;
  }
}

inline Eigen::MatrixXd to_eigen(const IntMatrix& m) {
  Eigen::MatrixXd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m(i, j));
  return e;
}

/// Floating-point inertia of a matrix with real spectrum, the zero count taken
/// from the exact rank. nullopt when some nonzero eigenvalue is too close to 0
/// to classify reliably.
inline std::optional<Inertia> float_inertia(const IntMatrix& m, double margin = 1e-6) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(to_eigen(m), false);
  const auto values = solver.eigenvalues();
  const std::size_t zero = m.rows() - rank(m);
  std::vector<double> real;
  for (Eigen::Index i = 0; i < values.size(); ++i) real.push_back(values[i].real());
  std::sort(real.begin(), real.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  Inertia out;
  out.zero = zero;
  for (std::size_t i = zero; i < real.size(); ++i) {
    if (std::abs(real[i]) < margin) return std::nullopt;
    (real[i] > 0 ? out.positive : out.negative) += 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracles over machine integers, independent of the Smith form.

inline std::vector<std::vector<std::int64_t>> to_int64(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<std::int64_t>(m(i, j));
  return out;
}

/// Smallest d in [1, max_order] such that M a = d v for some a in
/// [-box, box]^n, found by enumerating the box.
inline std::optional<std::int64_t> brute_min_order(const IntMatrix& m, const std::vector<std::int64_t>& v, int box,
                                                   std::int64_t max_order) {
  const auto a64 = to_int64(m);
  const std::size_t n = m.cols();
  std::vector<std::int64_t> a(n, -box);
  std::optional<std::int64_t> best;
  std::size_t pivot = v.size();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      pivot = i;
      break;
    }
  while (true) {
    std::vector<std::int64_t> ma(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) ma[i] += a64[i][j] * a[j];
    std::optional<std::int64_t> d;
    if (pivot == v.size()) {
      if (std::all_of(ma.begin(), ma.end(), [](std::int64_t x) { return x == 0; })) d = 1;
    } else if (ma[pivot] % v[pivot] == 0 && ma[pivot] / v[pivot] >= 1) {
      d = ma[pivot] / v[pivot];
      for (std::size_t i = 0; i < v.size() && d; ++i)
        if (ma[i] != *d * v[i]) d.reset();
    }
    if (d && *d <= max_order && (!best || *d < *best)) best = d;
    std::size_t j = 0;
    while (j < n && a[j] == box) a[j++] = -box;
    if (j == n) break;
    ++a[j];
  }
  return best;
}

/// Determinantal divisors: gcd of all k x k minors, k = 1..min(rows, cols),
/// by enumerating row and column subsets.
inline std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Integer> out;
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == k) {
        all.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return all;
  };
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    Integer g = 0;
    for (const auto& rows : subsets(r, k))
      for (const auto& cols : subsets(c, k)) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(rows[i], cols[j]);
        g = gcd(g, determinant(minor));
      }
    out.push_back(g);
  }
  return out;
}

/// Integral solvability of M x = b from minors alone: rank(M) = rank([M|b])
/// and both have the same gcd of rank-size minors.
inline bool integer_solvable(const IntMatrix& m, const IntVector& b) {
  IntMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto dm = determinantal_divisors(m);
  const auto da = determinantal_divisors(aug);
  auto rank_of = [](const std::vector<Integer>& d) {
    std::size_t r = 0;
    while (r < d.size() && d[r] != 0) ++r;
    return r;
  };
  const std::size_t r = rank_of(dm);
  if (rank_of(da) != r) return false;
  return r == 0 || dm[r - 1] == da[r - 1];
}

/// Evaluates an integer polynomial at a square matrix (Horner).
inline IntMatrix evaluate_at(const IntPolynomial& p, const IntMatrix& a) {
  IntMatrix acc(a.rows(), a.cols());
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t d = 0; d < a.rows(); ++d) acc(d, d) += p[i];
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Geometric front oracle. The front is drawn as a polyline graph: node
// (column c, slot j) is the strand at height j just after event c, cusps are
// extra nodes. Crossing signs come from the cross product of the traversal
// directions, cusp directions from comparing the heights of the neighbours.

struct OracleFront {
  std::vector<std::int64_t> tb, rot;
  std::vector<std::vector<std::int64_t>> lk;
};

inline OracleFront oracle_front(const std::vector<FrontEvent>& events, const std::vector<bool>& reversed = {}) {
  struct Node {
    double x, y;
    std::vector<std::size_t> nbr;
    bool cusp = false;
  };
  std::vector<Node> nodes;
  std::vector<std::size_t> column;  // node ids at the current column, top first
  std::vector<std::size_t> left_cusps;
  struct X {
    std::size_t over_from, over_to, under_from, under_to;
  };
  std::vector<X> crossings;
  auto add = [&](double x, double y, bool cusp = false) {
    nodes.push_back({x, y, {}, cusp});
    return nodes.size() - 1;
  };
  auto link = [&](std::size_t a, std::size_t b) {
    nodes[a].nbr.push_back(b);
    nodes[b].nbr.push_back(a);
  };
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    const double x = static_cast<double>(i + 1);
    const std::size_t p = static_cast<std::size_t>(e.position - 1);
    std::vector<std::size_t> next;
    if (e.kind == EventKind::left_cusp) {
      const std::size_t c = add(x - 0.5, -(static_cast<double>(p) + 0.5), true);
      left_cusps.push_back(c);
      for (std::size_t j = 0; j < column.size() + 2; ++j) {
        const std::size_t n = add(x, -static_cast<double>(j));
        next.push_back(n);
        if (j == p || j == p + 1)
          link(c, n);
        else
          link(column[j < p ? j : j - 2], n);
      }
    } else if (e.kind == EventKind::right_cusp) {
      const std::size_t c = add(x - 0.5, -(static_cast<double>(p) + 0.5), true);
      link(column[p], c);
      link(column[p + 1], c);
      for (std::size_t j = 0; j + 2 < column.size(); ++j) {
        const std::size_t n = add(x, -static_cast<double>(j));
        next.push_back(n);
        link(column[j < p ? j : j + 2], n);
      }
    } else {
      for (std::size_t j = 0; j < column.size(); ++j) next.push_back(add(x, -static_cast<double>(j)));
      for (std::size_t j = 0; j < column.size(); ++j) {
        const std::size_t src = j == p ? p + 1 : j == p + 1 ? p : j;
        link(column[src], next[j]);
      }
      // upper-left to lower-right is in front
      crossings.push_back({column[p], next[p + 1], column[p + 1], next[p]});
    }
    column = std::move(next);
  }

  // Traverse each component from its first left cusp towards the upper branch.
  std::vector<std::size_t> comp(nodes.size(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> succ(nodes.size());
  std::vector<std::int64_t> down, up;
  std::size_t count = 0;
  for (std::size_t c : left_cusps) {
    if (comp[c] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = count++;
    const bool rev = id < reversed.size() && reversed[id];
    const auto& nb = nodes[c].nbr;
    const std::size_t upper = nodes[nb[0]].y > nodes[nb[1]].y ? nb[0] : nb[1];
    const std::size_t lower = upper == nb[0] ? nb[1] : nb[0];
    std::size_t prev = c, cur = rev ? lower : upper;
    comp[c] = id;
    succ[c] = cur;
    while (cur != c) {
      comp[cur] = id;
      const std::size_t nxt = nodes[cur].nbr[0] == prev ? nodes[cur].nbr[1] : nodes[cur].nbr[0];
      succ[cur] = nxt;
      prev = cur;
      cur = nxt;
    }
    down.push_back(0);
    up.push_back(0);
  }
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (!nodes[n].cusp) continue;
    std::size_t pred = nodes[n].nbr[0] == succ[n] ? nodes[n].nbr[1] : nodes[n].nbr[0];
    (nodes[succ[n]].y < nodes[pred].y ? down : up)[comp[n]] += 1;
  }
  OracleFront out;
  std::vector<std::int64_t> writhe(count, 0);
  out.lk.assign(count, std::vector<std::int64_t>(count, 0));
  auto direction = [&](std::size_t a, std::size_t b) {
    // traversal direction along the edge a-b
    const bool forward = succ[a] == b;
    const double dx = nodes[b].x - nodes[a].x, dy = nodes[b].y - nodes[a].y;
    return forward ? std::pair{dx, dy} : std::pair{-dx, -dy};
  };
  for (const auto& x : crossings) {
    const auto [ox, oy] = direction(x.over_from, x.over_to);
    const auto [ux, uy] = direction(x.under_from, x.under_to);
    const int sign = ox * uy - oy * ux > 0 ? 1 : -1;
    const std::size_t a = comp[x.over_from], b = comp[x.under_from];
    if (a == b)
      writhe[a] += sign;
    else
      out.lk[a][b] += sign, out.lk[b][a] += sign;
  }
  for (std::size_t i = 0; i < count; ++i) {
    out.tb.push_back(writhe[i] - (down[i] + up[i]) / 2);
    out.rot.push_back((down[i] - up[i]) / 2);
    for (auto& v : out.lk[i]) v /= 2;
  }
  return out;
}

/// Random closed event sequence with at most `max_events` events before the
/// strands are closed off.
inline std::vector<FrontEvent> random_events(std::mt19937_64& rng, int max_events, int max_strands = 8) {
  std::vector<FrontEvent> out;
  int strands = 0;
  for (int i = 0; i < max_events || strands > 0; ++i) {
    const bool closing = i >= max_events;
    const auto roll = uniform(rng, 0, 9);
    if (!closing && strands + 2 <= max_strands && (strands == 0 || roll < 3)) {
      out.push_back({EventKind::left_cusp, static_cast<int>(uniform(rng, 1, strands + 1))});
      strands += 2;
    } else if (!closing && roll < 7 && strands >= 2) {
      out.push_back({EventKind::crossing, static_cast<int>(uniform(rng, 1, strands - 1))});
    } else if (strands >= 2) {
      out.push_back({EventKind::right_cusp, static_cast<int>(uniform(rng, 1, strands - 1))});
      strands -= 2;
    }
  }
  return out;
}

}  // namespace surgeon::testing
