#pragma once
// Exhaustive reference implementations used to pin the DP engines down.
// Every up-right path is generated explicitly and filtered by a literal
// transcription of the admissibility rules, so these share no code (and no
// reasoning) with the rolling-row recursions in lpp.hpp.  Only viable for
// small windows; the test suites stay at or below 8x8.

#include <vector>

#include "hsk/lpp.hpp"

namespace hsk {

inline bool path_admissible(const std::vector<Point>& path, Constraint c) {
  using K = Constraint::Kind;
  switch (c.kind) {
    case K::None:
      return true;
    case K::CrossDiagonalAtMostOnce:
      // the rule, verbatim: if (m,m) lies on the path then (m-1,m) does not
      for (const Point& q : path) {
        if (q.i != q.j) continue;
        for (const Point& r : path)
          if (r.i == q.i - 1 && r.j == q.j) return false;
      }
      return true;
    case K::MustHitOffset:
      for (const Point& q : path)
        if (q.j - q.i == c.offset) return true;
      return false;
    case K::MaxSkew:
      for (const Point& q : path)
        if (std::abs(static_cast<double>(q.j - q.i)) > c.max_skew) return false;
      return true;
  }
  return false;
}

namespace detail {

template <class Leaf>
void walk_paths(Point p, Point v, std::vector<Point>& path, Leaf&& leaf) {
  path.push_back(p);
  if (p == v) {
    leaf(path);
  } else {
    if (p.i < v.i) walk_paths({p.i + 1, p.j}, v, path, leaf);
    if (p.j < v.j) walk_paths({p.i, p.j + 1}, v, path, leaf);
  }
  path.pop_back();
}

template <class F>
double path_sum(const F& w, const std::vector<Point>& path, bool include_start) {
  double s = 0.0;
  for (std::size_t k = include_start ? 0 : 1; k < path.size(); ++k) {
    const double wt = w(path[k].i, path[k].j);
    if (wt == -kInf) return -kInf;
    s += wt;
  }
  return s;
}

}  // namespace detail

template <class F>
double oracle_passage(const F& w, Point u, Point v, Constraint c = {},
                      bool include_start = true) {
  if (!(u <= v)) return -kInf;
  double best = -kInf;
  std::vector<Point> path;
  detail::walk_paths(u, v, path, [&](const std::vector<Point>& p) {
    if (!path_admissible(p, c)) return;
    best = std::max(best, detail::path_sum(w, p, include_start));
  });
  return best;
}

template <class F>
double oracle_log_partition(const F& logw, Point u, Point v, Constraint c = {},
                            bool include_start = true) {
  if (!(u <= v)) return -kInf;
  double acc = -kInf;
  std::vector<Point> path;
  detail::walk_paths(u, v, path, [&](const std::vector<Point>& p) {
    if (!path_admissible(p, c)) return;
    acc = alg::logaddexp(acc, detail::path_sum(logw, p, include_start));
  });
  return acc;
}

}  // namespace hsk
