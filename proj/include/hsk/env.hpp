#pragma once
// Random weight environments on the symmetric lattice.
//
// A field assigns one weight to each unordered pair {i,j} (cell (i,j) and its
// mirror (j,i) always agree).  Three model families share the same parameter
// layout: a boundary parameter alpha acting on the diagonal, and per-index
// parameters gamma_i, equal to a default theta except for listed exceptions.
//
//   exponential:  w(i,i) ~ Exp(alpha + gamma_i)     w(i,j) ~ Exp(gamma_i + gamma_j)
//   log-gamma:    w(i,i) ~ InvGamma(alpha + gamma_i) w(i,j) ~ InvGamma(gamma_i + gamma_j)
//   geometric:    w(i,i) ~ Geo(alpha * gamma_i)      w(i,j) ~ Geo(gamma_i * gamma_j)
//
// Parameters outside the admissible range produce sentinel weights instead of
// throwing: a nonpositive exponential/log-gamma parameter (or a geometric
// parameter >= 1) is the +inf weight, and an infinite exponential rate is the
// constant 0.  Downstream passage-time code is written to absorb both.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "hsk/rng.hpp"

namespace hsk {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Model { Exponential, Geometric, LogGamma };

struct EnvironmentSpec {
  Model model = Model::Exponential;
  double alpha = 1.0;
  double theta = 0.5;
  std::map<long long, double> gamma_exceptions;

  double gamma(long long i) const {
    auto it = gamma_exceptions.find(i);
    return it == gamma_exceptions.end() ? theta : it->second;
  }

  // Distribution parameter for cell (i,j): rate, shape, or geometric ratio.
  double cell_param(long long i, long long j) const {
    if (model == Model::Geometric)
      return i == j ? alpha * gamma(i) : gamma(i) * gamma(j);
    return i == j ? alpha + gamma(i) : gamma(i) + gamma(j);
  }

  // The one-parameter half-space model: diagonal Exp(alpha), bulk Exp(1).
  // Realized as theta = 1/2 with boundary alpha - 1/2, so the diagonal rate
  // (alpha - 1/2) + 1/2 comes out to alpha exactly.
  static EnvironmentSpec homogeneous_halfspace(double alpha) {
    EnvironmentSpec e;
    e.model = Model::Exponential;
    e.alpha = alpha - 0.5;
    e.theta = 0.5;
    return e;
  }
};

inline double sample_weight(const EnvironmentSpec& spec, Stream cell_stream,
                            long long i, long long j) {
  const double p = spec.cell_param(i, j);
  switch (spec.model) {
    case Model::Exponential:
      return cell_stream.exponential(p);
    case Model::LogGamma:
      return cell_stream.inverse_gamma(p);
    case Model::Geometric:
      if (p >= 1.0) return kInf;          // ratio at or past 1: no distribution
      if (p <= 0.0) return 0.0;           // Geo(0) is the point mass at 0
      return static_cast<double>(cell_stream.geometric(p));
  }
  return kInf;  // unreachable
}

// Lazy symmetric field: samples cells on demand, never stores them.
class Field {
 public:
  Field(const EnvironmentSpec& spec, Stream stream)
      : spec_(spec), cells_(stream.sub(tag::kCell)) {}

  double operator()(long long i, long long j) const {
    const long long hi = i > j ? i : j, lo = i > j ? j : i;
    return sample_weight(spec_, cells_.at(hi, lo), i, j);
  }

  const EnvironmentSpec& spec() const { return spec_; }

 private:
  EnvironmentSpec spec_;
  Stream cells_;
};

// Dense rectangular materialization of a window [i0,i1] x [j0,j1].
class Window {
 public:
  Window(long long i0, long long i1, long long j0, long long j1, double fill = 0.0)
      : i0_(i0), j0_(j0),
        ni_(static_cast<std::size_t>(i1 - i0 + 1)),
        nj_(static_cast<std::size_t>(j1 - j0 + 1)),
        w_(ni_ * nj_, fill) {
    if (i1 < i0 || j1 < j0) throw std::invalid_argument("Window: empty range");
  }

  double operator()(long long i, long long j) const { return w_[idx(i, j)]; }
  double& at(long long i, long long j) { return w_[idx(i, j)]; }

  bool contains(long long i, long long j) const {
    return i >= i0_ && j >= j0_ && i < i0_ + static_cast<long long>(ni_) &&
           j < j0_ + static_cast<long long>(nj_);
  }
  long long i_lo() const { return i0_; }
  long long j_lo() const { return j0_; }
  long long i_hi() const { return i0_ + static_cast<long long>(ni_) - 1; }
  long long j_hi() const { return j0_ + static_cast<long long>(nj_) - 1; }

 private:
  std::size_t idx(long long i, long long j) const {
    if (!contains(i, j)) throw std::out_of_range("Window: cell outside window");
    return static_cast<std::size_t>(i - i0_) * nj_ + static_cast<std::size_t>(j - j0_);
  }
  long long i0_, j0_;
  std::size_t ni_, nj_;
  std::vector<double> w_;
};

template <class FieldLike>
Window materialize(const FieldLike& f, long long i0, long long i1, long long j0,
                   long long j1) {
  Window win(i0, i1, j0, j1);
  for (long long i = i0; i <= i1; ++i)
    for (long long j = j0; j <= j1; ++j) win.at(i, j) = f(i, j);
  return win;
}

struct CellValue {
  long long i, j;
  double value;
};

// Replace listed cells in a materialized window.  When the window represents a
// symmetric field the mirror cell is kept in sync, and listing both (i,j) and
// (j,i) with different values is rejected rather than silently resolved.
inline void override_cells(Window& win, const std::vector<CellValue>& cells,
                           bool symmetric = true) {
  if (symmetric) {
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = a + 1; b < cells.size(); ++b)
        if (cells[a].i == cells[b].j && cells[a].j == cells[b].i &&
            cells[a].value != cells[b].value)
          throw std::invalid_argument("override_cells: conflicting mirror values");
  }
  for (const auto& c : cells) {
    win.at(c.i, c.j) = c.value;
    if (symmetric && c.i != c.j && win.contains(c.j, c.i)) win.at(c.j, c.i) = c.value;
  }
}

}  // namespace hsk
