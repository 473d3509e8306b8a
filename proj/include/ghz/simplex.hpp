// Dense two-phase simplex for small linear programs:
//   maximize c.x  subject to  A x <= b, x >= 0.
// Classic tableau method with lexicographic (value, index) pivot selection
// to avoid cycling. Intended for problems with a few hundred rows and
// columns; everything is kept dense.

#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace ghz {

class SimplexSolver {
 public:
  using Row = std::vector<double>;

  enum class Status { Optimal, Infeasible, Unbounded };

  SimplexSolver(std::vector<Row> a, Row b, Row c)
      : m_(b.size()), n_(c.size()), nonbasic_(n_ + 1), basic_(m_),
        tab_(m_ + 2, Row(n_ + 2)) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = a[i][j];
      basic_[i] = static_cast<int>(n_ + i);
      tab_[i][n_] = -1.0;
      tab_[i][n_ + 1] = b[i];
    }
    for (std::size_t j = 0; j < n_; ++j) {
      nonbasic_[j] = static_cast<int>(j);
      tab_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    tab_[m_ + 1][n_] = 1.0;
  }

  // On Optimal, x holds the solution and objective the optimum of c.x.
  Status solve(Row& x, double& objective) {
    std::size_t r = 0;
    for (std::size_t i = 1; i < m_; ++i) {
      if (tab_[i][n_ + 1] < tab_[r][n_ + 1]) r = i;
    }
    if (m_ > 0 && tab_[r][n_ + 1] < -kEps) {
      pivot(r, n_);
      if (!optimize(2) || tab_[m_ + 1][n_ + 1] < -kEps) return Status::Infeasible;
      for (std::size_t i = 0; i < m_; ++i) {
        if (basic_[i] == -1) {
          std::size_t s = 0;
          for (std::size_t j = 1; j <= n_; ++j) {
            if (better(tab_[i][j], nonbasic_[j], tab_[i][s], nonbasic_[s])) s = j;
          }
          pivot(i, s);
        }
      }
    }
    bool bounded = optimize(1);
    x.assign(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] >= 0 && basic_[i] < static_cast<int>(n_)) {
        x[basic_[i]] = tab_[i][n_ + 1];
      }
    }
    objective = tab_[m_][n_ + 1];
    return bounded ? Status::Optimal : Status::Unbounded;
  }

 private:
  static constexpr double kEps = 1e-11;

  static bool better(double va, int ia, double vb, int ib) {
    return va < vb || (va == vb && ia < ib);
  }

  void pivot(std::size_t r, std::size_t s) {
    double* a = tab_[r].data();
    const double inv = 1.0 / a[s];
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i != r && std::abs(tab_[i][s]) > kEps) {
        double* b = tab_[i].data();
        const double binv = b[s] * inv;
        for (std::size_t j = 0; j < n_ + 2; ++j) b[j] -= a[j] * binv;
        b[s] = a[s] * binv;
      }
    }
    for (std::size_t j = 0; j < n_ + 2; ++j) {
      if (j != s) tab_[r][j] *= inv;
    }
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i != r) tab_[i][s] *= -inv;
    }
    tab_[r][s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  bool optimize(int phase) {
    const std::size_t obj = m_ + phase - 1;
    for (;;) {
      std::size_t s = n_ + 1;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase) continue;
        if (s == n_ + 1 || better(tab_[obj][j], nonbasic_[j], tab_[obj][s], nonbasic_[s])) s = j;
      }
      if (tab_[obj][s] >= -kEps) return true;
      std::size_t r = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (tab_[i][s] <= kEps) continue;
        if (r == m_ ||
            better(tab_[i][n_ + 1] / tab_[i][s], basic_[i], tab_[r][n_ + 1] / tab_[r][s],
                   basic_[r])) {
          r = i;
        }
      }
      if (r == m_) return false;  // unbounded
      pivot(r, s);
    }
  }

  std::size_t m_, n_;
  std::vector<int> nonbasic_, basic_;
  std::vector<Row> tab_;
};

}  // namespace ghz
