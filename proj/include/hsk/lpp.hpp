#pragma once
// Last-passage percolation on up-right lattice paths, plus the matching
// positive-temperature (log-partition) sums.  One DP engine serves both: the
// max-plus algebra gives passage times, log-sum-exp gives log Z.
//
// Conventions
//   * paths step (i,j) -> (i+1,j) or (i,j+1); a passage value includes the
//     weight of both endpoints unless include_start is turned off
//   * unreachable queries (v not componentwise >= u) evaluate to -inf
//   * weights may be +inf (degenerate parameter cells); -inf marks forbidden
//     cells and absorbs through the recursion
//
// Path constraints, one per query:
//   CrossDiagonalAtMostOnce  if (m,m) is on the path, (m-1,m) is not; such
//                            paths stay weakly below the diagonal until they
//                            step off some (m,m) upward, then stay strictly
//                            above.  This is the admissibility rule for the
//                            symmetric-environment models.
//   MustHitOffset            path must visit some vertex with j - i == offset
//   MaxSkew                  every vertex satisfies |j - i| <= max_skew
//                            (the parallelogram restriction)

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "hsk/env.hpp"

namespace hsk {

struct Point {
  long long i = 0, j = 0;
  friend bool operator==(const Point& a, const Point& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator<=(const Point& a, const Point& b) { return a.i <= b.i && a.j <= b.j; }
};

// Level-t L-shaped line, parametrized by a signed coordinate: nonnegative j
// runs along the horizontal ray, negative j mirrors up the vertical one.
inline Point lpoint(long long j, long long t) {
  return j >= 0 ? Point{t + j, t} : Point{t, t - j};
}

struct Constraint {
  enum class Kind { None, CrossDiagonalAtMostOnce, MustHitOffset, MaxSkew };
  Kind kind = Kind::None;
  long long offset = 0;   // MustHitOffset: target set {j - i == offset}
  double max_skew = 0.0;  // MaxSkew bound on |j - i|

  static Constraint none() { return {}; }
  static Constraint cross_diagonal_at_most_once() {
    return {Kind::CrossDiagonalAtMostOnce, 0, 0.0};
  }
  static Constraint must_hit_offset(long long c) { return {Kind::MustHitOffset, c, 0.0}; }
  static Constraint skew_within(double s) { return {Kind::MaxSkew, 0, s}; }
};

namespace alg {

inline double logaddexp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

struct MaxPlus {
  static double combine(double a, double b) { return a > b ? a : b; }
};
struct LogSumExp {
  static double combine(double a, double b) { return logaddexp(a, b); }
};

}  // namespace alg

namespace detail {

// -inf is the absorbing zero in both algebras; keep it clear of +inf weights
// so no NaN can leak out of the recursion.
inline double extend(double acc, double w) {
  if (acc == -kInf || w == -kInf) return -kInf;
  return acc + w;
}

// Rolling-row DP over the rectangle [u,v].  Visitor sees every finished cell:
// visit(i, j, value) with value already combined across admissible layers.
template <class Alg, class F, class Visit>
void sweep(const F& w, Point u, Point v, Constraint c, bool include_start, Visit&& visit) {
  using K = Constraint::Kind;
  if (!(u <= v)) throw std::invalid_argument("sweep: v must dominate u");
  const std::size_t ni = static_cast<std::size_t>(v.i - u.i + 1);
  // layer 0: plain paths (or "phase before" for the layered constraints)
  // layer 1: above-diagonal phase / already-hit flag
  std::vector<double> p0(ni, -kInf), p1(ni, -kInf), c0(ni), c1(ni);
  for (long long j = u.j; j <= v.j; ++j) {
    for (std::size_t ii = 0; ii < ni; ++ii) {
      const long long i = u.i + static_cast<long long>(ii);
      double wt = w(i, j);
      if (c.kind == K::MaxSkew && std::abs(static_cast<double>(j - i)) > c.max_skew)
        wt = -kInf;
      double v0 = -kInf, v1 = -kInf;
      if (i == u.i && j == u.j) {
        const double seed = (wt == -kInf) ? -kInf : (include_start ? wt : 0.0);
        const bool upper = (c.kind == K::CrossDiagonalAtMostOnce && j > i) ||
                           (c.kind == K::MustHitOffset && j - i == c.offset);
        (upper ? v1 : v0) = seed;
      } else {
        const double l0 = ii ? c0[ii - 1] : -kInf, d0 = p0[ii];
        const double l1 = ii ? c1[ii - 1] : -kInf, d1 = p1[ii];
        switch (c.kind) {
          case K::None:
          case K::MaxSkew:
            v0 = detail::extend(Alg::combine(l0, d0), wt);
            break;
          case K::CrossDiagonalAtMostOnce:
            if (j <= i) {
              v0 = detail::extend(Alg::combine(l0, d0), wt);
            } else {
              // d0 is nonzero only when (i,j-1) sits on the diagonal, which
              // is exactly the one admissible way in from the lower phase
              v1 = detail::extend(Alg::combine(Alg::combine(l1, d1), d0), wt);
            }
            break;
          case K::MustHitOffset:
            if (j - i == c.offset) {
              v1 = detail::extend(Alg::combine(Alg::combine(l0, d0), Alg::combine(l1, d1)), wt);
            } else {
              v0 = detail::extend(Alg::combine(l0, d0), wt);
              v1 = detail::extend(Alg::combine(l1, d1), wt);
            }
            break;
        }
      }
      c0[ii] = v0;
      c1[ii] = v1;
      const double out = (c.kind == K::MustHitOffset) ? v1 : Alg::combine(v0, v1);
      visit(i, j, out);
    }
    std::swap(p0, c0);
    std::swap(p1, c1);
  }
}

}  // namespace detail

template <class Alg, class F>
double span_value(const F& w, Point u, Point v, Constraint c, bool include_start) {
  if (!(u <= v)) return -kInf;
  double out = -kInf;
  detail::sweep<Alg>(w, u, v, c, include_start, [&](long long i, long long j, double val) {
    if (i == v.i && j == v.j) out = val;
  });
  return out;
}

// Passage time from u to v.
template <class F>
double passage_time(const F& w, Point u, Point v, Constraint c = {},
                    bool include_start = true) {
  return span_value<alg::MaxPlus>(w, u, v, c, include_start);
}

// log of the path-sum partition function; the field must hand back log-weights.
template <class F>
double log_partition(const F& logw, Point u, Point v, Constraint c = {},
                     bool include_start = true) {
  return span_value<alg::LogSumExp>(logw, u, v, c, include_start);
}

// Passage times from u to the level-t line, one value per signed coordinate in
// [jlo, jhi].  Entry idx j-jlo is the value at lpoint(j,t), or -inf when that
// point is not reachable from u.
template <class F>
std::vector<double> passage_to_level(const F& w, Point u, long long t, long long jlo,
                                     long long jhi, Constraint c = {},
                                     bool include_start = true) {
  if (jlo > jhi) throw std::invalid_argument("passage_to_level: empty range");
  std::vector<double> out(static_cast<std::size_t>(jhi - jlo + 1), -kInf);
  Point corner{t + std::max<long long>(jhi, 0), t + std::max<long long>(-jlo, 0)};
  if (!(u <= corner)) throw std::invalid_argument("passage_to_level: u beyond level");
  detail::sweep<alg::MaxPlus>(w, u, corner, c, include_start,
                              [&](long long i, long long j, double val) {
                                if (j == t && i >= t && i - t >= jlo && i - t <= jhi)
                                  out[static_cast<std::size_t>(i - t - jlo)] = val;
                                if (i == t && j > t && t - j >= jlo && t - j <= jhi)
                                  out[static_cast<std::size_t>(t - j - jlo)] = val;
                              });
  return out;
}

// Point passage X(1,1;n,n) over paths confined to the closed lower triangle
// {j <= i}; the natural query for one-parameter half-space fields, and worth
// its own tight loop since the exponent scans burn billions of cells here.
template <class F>
double triangle_passage(const F& w, long long n) {
  // col[j] holds the previous row's value until row i reaches j; entries with
  // j > i stay -inf untouched, so no per-row reset is needed
  std::vector<double> col(static_cast<std::size_t>(n) + 1, -kInf);
  for (long long i = 1; i <= n; ++i) {
    for (long long j = 1; j <= i; ++j) {
      const double prev = (i == 1 && j == 1) ? 0.0 : std::max(col[j], col[j - 1]);
      col[j] = (prev == -kInf) ? -kInf : prev + w(i, j);
    }
  }
  return col[static_cast<std::size_t>(n)];
}

// max over the trapezoid target line: trapezoid endpoints (n+r, m-r) for
// 0 <= r <= m-1, all measured from (1,1).
template <class F>
double trapezoid_passage(const F& w, long long n, long long m, Constraint c = {}) {
  double best = -kInf;
  Point corner{n + m - 1, m};
  detail::sweep<alg::MaxPlus>(w, {1, 1}, corner, c, true,
                              [&](long long i, long long j, double val) {
                                if (i + j == n + m && j >= 1 && j <= m)
                                  best = std::max(best, val);
                              });
  return best;
}

// log of the summed partition function over the same trapezoid target line.
template <class F>
double trapezoid_log_partition(const F& logw, long long n, long long m, Constraint c = {}) {
  double acc = -kInf;
  Point corner{n + m - 1, m};
  detail::sweep<alg::LogSumExp>(logw, {1, 1}, corner, c, true,
                                [&](long long i, long long j, double val) {
                                  if (i + j == n + m && j >= 1 && j <= m)
                                    acc = alg::logaddexp(acc, val);
                                });
  return acc;
}

// Geodesic (argmax path) from u to v.  Ties default to the step from (i-1,j),
// giving the leftmost maximizer; flip prefer_horizontal for the other one.
// Supported for the unconstrained and max-skew queries.
template <class F>
std::vector<Point> extract_geodesic(const F& w, Point u, Point v, Constraint c = {},
                                    bool prefer_horizontal = true) {
  using K = Constraint::Kind;
  if (c.kind == K::CrossDiagonalAtMostOnce || c.kind == K::MustHitOffset)
    throw std::invalid_argument("extract_geodesic: layered constraints unsupported");
  if (!(u <= v)) throw std::invalid_argument("extract_geodesic: v must dominate u");
  const std::size_t ni = static_cast<std::size_t>(v.i - u.i + 1);
  const std::size_t nj = static_cast<std::size_t>(v.j - u.j + 1);
  std::vector<double> tab(ni * nj, -kInf);
  auto at = [&](long long i, long long j) -> double& {
    return tab[static_cast<std::size_t>(i - u.i) * nj + static_cast<std::size_t>(j - u.j)];
  };
  detail::sweep<alg::MaxPlus>(w, u, v, c, true,
                              [&](long long i, long long j, double val) { at(i, j) = val; });
  if (at(v.i, v.j) == -kInf)
    throw std::invalid_argument("extract_geodesic: no admissible path");
  std::vector<Point> path{v};
  Point p = v;
  while (!(p == u)) {
    const double horiz = p.i > u.i ? at(p.i - 1, p.j) : -kInf;
    const double vert = p.j > u.j ? at(p.i, p.j - 1) : -kInf;
    const bool take_horiz = prefer_horizontal ? horiz >= vert : horiz > vert;
    p = take_horiz ? Point{p.i - 1, p.j} : Point{p.i, p.j - 1};
    path.push_back(p);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Largest violation of the composition identity
//   X(u;v) = max over the cut {i+j=s} of [ X(u;w) + X(w;v) - weight(w) ]
// across every cut level s between u and v.  Zero up to rounding.
template <class F>
double metric_composition_gap(const F& w, Point u, Point v) {
  if (!(u <= v)) throw std::invalid_argument("metric_composition_gap: v must dominate u");
  const std::size_t ni = static_cast<std::size_t>(v.i - u.i + 1);
  const std::size_t nj = static_cast<std::size_t>(v.j - u.j + 1);
  std::vector<double> fwd(ni * nj), bwd(ni * nj);
  auto id = [&](long long i, long long j) {
    return static_cast<std::size_t>(i - u.i) * nj + static_cast<std::size_t>(j - u.j);
  };
  detail::sweep<alg::MaxPlus>(w, u, v, Constraint::none(), true,
                              [&](long long i, long long j, double val) { fwd[id(i, j)] = val; });
  // backward table by the mirrored recursion: bwd(p) = X(p; v)
  for (long long j = v.j; j >= u.j; --j)
    for (long long i = v.i; i >= u.i; --i) {
      double succ = -kInf;
      if (i == v.i && j == v.j) succ = 0.0;
      if (i < v.i) succ = std::max(succ, bwd[id(i + 1, j)]);
      if (j < v.j) succ = std::max(succ, bwd[id(i, j + 1)]);
      bwd[id(i, j)] = detail::extend(succ, w(i, j));
    }
  const double direct = fwd[id(v.i, v.j)];
  double worst = 0.0;
  for (long long s = u.i + u.j; s <= v.i + v.j; ++s) {
    double best = -kInf;
    for (long long i = std::max(u.i, s - v.j); i <= std::min(v.i, s - u.j); ++i) {
      const long long j = s - i;
      const double wt = w(i, j);
      if (!std::isfinite(wt)) continue;  // degenerate cells make X - w meaningless
      const double through = detail::extend(
          fwd[id(i, j)], bwd[id(i, j)] == -kInf ? -kInf : bwd[id(i, j)] - wt);
      best = std::max(best, through);
    }
    worst = std::max(worst, std::abs(best - direct));
  }
  return worst;
}

}  // namespace hsk
