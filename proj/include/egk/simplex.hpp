#pragma once

#include <cassert>
#include <vector>

#include "egk/rational.hpp"

namespace egk::lp {

enum class Sense { less_equal, greater_equal, equal };

/// maximize c'x  subject to  a.row(r) x  (sense[r])  b(r),  x >= 0.
template <typename Scalar>
struct LinearProgram {
  Matrix<Scalar> a;
  Vector<Scalar> b;
  std::vector<Sense> sense;
  Vector<Scalar> c;
};

enum class Status { optimal, infeasible, unbounded };

template <typename Scalar>
struct Solution {
  Status status = Status::infeasible;
  Scalar objective{};
  Vector<Scalar> x;
};

namespace detail {

/// Dense tableau. Rows 0..m-1 are constraints, row m is the reduced-cost row
/// (entry j holds c_j - c_B' B^-1 A_j; the last column holds -objective).
template <typename Scalar>
class Tableau {
 public:
  Tableau(Matrix<Scalar> t, std::vector<int> basis) : t_(std::move(t)), basis_(std::move(basis)) {}

  int rows() const { return static_cast<int>(t_.rows()) - 1; }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  const std::vector<int>& basis() const { return basis_; }
  const Scalar& rhs(int r) const { return t_(r, cols()); }
  const Scalar& at(int r, int j) const { return t_(r, j); }
  Scalar objective() const { return -t_(rows(), cols()); }

  void set_objective(const Vector<Scalar>& c) {
    const int m = rows();
    t_.row(m).setZero();
    t_.row(m).head(cols()) = c.transpose();
    for (int r = 0; r < m; ++r) {
      const Scalar& cb = c(basis_[r]);
      if (cb != 0) t_.row(m) -= cb * t_.row(r);
    }
  }

  void pivot(int r, int j) {
    const Scalar p = t_(r, j);
    t_.row(r) /= p;
    for (int k = 0; k < t_.rows(); ++k) {
      if (k == r) continue;
      const Scalar f = t_(k, j);
      if (f != 0) t_.row(k) -= f * t_.row(r);
    }
    basis_[r] = j;
  }

  /// Bland's rule: lowest-index improving column enters; ties in the ratio
  /// test leave by lowest basic variable index. Columns >= `column_limit`
  /// never enter.
  Status optimize(int column_limit) {
    const int m = rows();
    for (;;) {
      int enter = -1;
      for (int j = 0; j < column_limit; ++j) {
        if (t_(m, j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Status::optimal;
      int leave = -1;
      Scalar best{};
      for (int r = 0; r < m; ++r) {
        if (t_(r, enter) <= 0) continue;
        Scalar ratio = rhs(r) / t_(r, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return Status::unbounded;
      pivot(leave, enter);
    }
  }

 private:
  Matrix<Scalar> t_;
  std::vector<int> basis_;
};

}  // namespace detail

/// Two-phase primal simplex with Bland's anti-cycling rule. Exact when
/// Scalar is exact; there are no tolerances anywhere.
template <typename Scalar>
Solution<Scalar> solve(const LinearProgram<Scalar>& lp) {
  const int m = static_cast<int>(lp.a.rows());
  const int n = static_cast<int>(lp.a.cols());
  assert(lp.b.size() == m && static_cast<int>(lp.sense.size()) == m && lp.c.size() == n);

  Matrix<Scalar> a = lp.a;
  Vector<Scalar> b = lp.b;
  std::vector<Sense> sense = lp.sense;
  for (int r = 0; r < m; ++r) {
    if (b(r) < 0) {
      a.row(r) *= Scalar(-1);
      b(r) = -b(r);
      if (sense[r] == Sense::less_equal) {
        sense[r] = Sense::greater_equal;
      } else if (sense[r] == Sense::greater_equal) {
        sense[r] = Sense::less_equal;
      }
    }
  }

  int slacks = 0;
  int artificials = 0;
  for (Sense s : sense) {
    if (s != Sense::equal) ++slacks;
    if (s != Sense::less_equal) ++artificials;
  }
  const int structural = n + slacks;
  const int total = structural + artificials;

  Matrix<Scalar> t = Matrix<Scalar>::Zero(m + 1, total + 1);
  std::vector<int> basis(static_cast<std::size_t>(m));
  t.topLeftCorner(m, n) = a;
  t.block(0, total, m, 1) = b;
  int next_slack = n;
  int next_art = structural;
  for (int r = 0; r < m; ++r) {
    switch (sense[r]) {
      case Sense::less_equal:
        t(r, next_slack) = 1;
        basis[r] = next_slack++;
        break;
      case Sense::greater_equal:
        t(r, next_slack++) = -1;
        t(r, next_art) = 1;
        basis[r] = next_art++;
        break;
      case Sense::equal:
        t(r, next_art) = 1;
        basis[r] = next_art++;
        break;
    }
  }

  detail::Tableau<Scalar> tab(std::move(t), std::move(basis));
  Solution<Scalar> out;

  if (artificials > 0) {
    Vector<Scalar> phase1 = Vector<Scalar>::Zero(total);
    phase1.tail(artificials).setConstant(Scalar(-1));
    tab.set_objective(phase1);
    tab.optimize(total);
    if (tab.objective() < 0) {
      out.status = Status::infeasible;
      return out;
    }
    // Drive zero-valued artificials out of the basis where possible; rows
    // where that fails are redundant and stay inert.
    for (int r = 0; r < m; ++r) {
      if (tab.basis()[r] < structural) continue;
      for (int j = 0; j < structural; ++j) {
        if (tab.at(r, j) != 0) {
          tab.pivot(r, j);
          break;
        }
      }
    }
  }

  Vector<Scalar> phase2 = Vector<Scalar>::Zero(total);
  phase2.head(n) = lp.c;
  tab.set_objective(phase2);
  out.status = tab.optimize(structural);
  if (out.status != Status::optimal) return out;

  out.objective = tab.objective();
  out.x = Vector<Scalar>::Zero(n);
  for (int r = 0; r < m; ++r) {
    if (tab.basis()[r] < n) out.x(tab.basis()[r]) = tab.rhs(r);
  }
  return out;
}

}  // namespace egk::lp
