#include "robust/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace robust {

double evaluate(const LinearConstraint& c,
                const std::function<double(const VarKey&)>& value) {
  double lhs = 0.0;
  for (const auto& [key, coef] : c.terms) lhs += coef * value(key);
  return lhs;
}

double violation(const LinearConstraint& c,
                 const std::function<double(const VarKey&)>& value) {
  double lhs = evaluate(c, value);
  switch (c.sense) {
    case Sense::LessEq:
      return std::max(0.0, lhs - c.rhs);
    case Sense::GreaterEq:
      return std::max(0.0, c.rhs - lhs);
    case Sense::Equal:
      return std::abs(lhs - c.rhs);
  }
  return 0.0;
}

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

/// Full-tableau two-phase simplex over variables x_j in [0, ub_j].
/// Nonbasic variables rest at one of their bounds; Bland's rule (lowest
/// eligible index for entering, lowest basic variable index among ratio
/// ties for leaving) prevents cycling.
class BoundedSimplex {
 public:
  BoundedSimplex(int n_structural, const std::vector<DenseRow>& rows,
                 const std::vector<double>& objective, long long pivot_cap)
      : pivot_cap_(pivot_cap) {
    // Presolve: fold single-variable rows into bounds.
    ub_.assign(n_structural, kInf);
    lb_zero_ok_ = true;
    std::vector<const DenseRow*> structural;
    for (const DenseRow& row : rows) {
      if (row.terms.size() == 1 && row.terms[0].second > 0.0) {
        int j = row.terms[0].first;
        double b = row.rhs / row.terms[0].second;
        switch (row.sense) {
          case Sense::LessEq:
            ub_[j] = std::min(ub_[j], b);
            continue;
          case Sense::GreaterEq:
            if (b > kFeasTol) break;  // keep as a structural row
            continue;                 // implied by x >= 0
          case Sense::Equal:
            break;  // keep as structural
        }
      }
      structural.push_back(&row);
    }
    for (double u : ub_)
      if (u < -kFeasTol) lb_zero_ok_ = false;

    m_ = static_cast<int>(structural.size());
    // Columns: structural vars, then one slack per row (<=: +1, >=: -1),
    // then one artificial per row.
    n_ = n_structural;
    slack_of_.assign(m_, -1);
    art_of_.assign(m_, -1);
    int cols = n_;
    for (int i = 0; i < m_; ++i)
      if (structural[i]->sense != Sense::Equal) slack_of_[i] = cols++;
    first_art_ = cols;
    for (int i = 0; i < m_; ++i) art_of_[i] = cols++;
    total_ = cols;
    ub_.resize(total_, kInf);

    tab_.assign(m_, std::vector<double>(total_ + 1, 0.0));
    basis_.assign(m_, -1);
    at_upper_.assign(total_, 0);

    for (int i = 0; i < m_; ++i) {
      const DenseRow& row = *structural[i];
      double sign = row.rhs < 0.0 ? -1.0 : 1.0;
      for (const auto& [j, a] : row.terms) tab_[i][j] += sign * a;
      tab_[i][total_] = sign * row.rhs;
      if (slack_of_[i] >= 0) {
        double s = row.sense == Sense::LessEq ? 1.0 : -1.0;
        tab_[i][slack_of_[i]] = sign * s;
      }
      tab_[i][art_of_[i]] = 1.0;
      basis_[i] = art_of_[i];
    }

    obj_ = objective;
    obj_.resize(total_, 0.0);
  }

  LpResult run() {
    LpResult result;
    if (!lb_zero_ok_) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Phase 1: minimize the sum of artificials.
    std::vector<double> phase1(total_, 0.0);
    for (int i = 0; i < m_; ++i) phase1[art_of_[i]] = 1.0;
    LpStatus st = optimize(phase1, /*phase1=*/true);
    if (st != LpStatus::Optimal) {
      result.status = st;
      return result;
    }
    if (current_objective(phase1) > 1e-7) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Pivot leftover basic artificials out where possible; lock all
    // artificials at zero either way.
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < first_art_) continue;
      for (int j = 0; j < first_art_; ++j)
        if (std::abs(tab_[i][j]) > kPivotTol) {
          pivot(i, j);
          break;
        }
    }
    for (int j = first_art_; j < total_; ++j) ub_[j] = 0.0;

    st = optimize(obj_, /*phase1=*/false);
    result.status = st;
    result.pivots = pivots_;
    if (st != LpStatus::Optimal) return result;
    result.x = primal_values();
    result.x.resize(n_);
    result.objective = 0.0;
    for (int j = 0; j < n_; ++j) result.objective += obj_[j] * result.x[j];
    return result;
  }

 private:
  std::vector<double> primal_values() const {
    std::vector<double> x(total_, 0.0);
    for (int j = 0; j < total_; ++j)
      if (at_upper_[j] && ub_[j] < kInf) x[j] = ub_[j];
    for (int i = 0; i < m_; ++i) x[basis_[i]] = beta(i);
    return x;
  }

  /// Value of basic variable i given nonbasic-at-upper offsets.
  double beta(int i) const {
    double b = tab_[i][total_];
    for (int j = 0; j < total_; ++j)
      if (at_upper_[j] && ub_[j] > 0.0 && ub_[j] < kInf)
        b -= tab_[i][j] * ub_[j];
    return b;
  }

  double current_objective(const std::vector<double>& c) const {
    std::vector<double> x = primal_values();
    double v = 0.0;
    for (int j = 0; j < total_; ++j) v += c[j] * x[j];
    return v;
  }

  void pivot(int row, int col) {
    double p = tab_[row][col];
    for (double& v : tab_[row]) v /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      double f = tab_[i][col];
      if (f == 0.0) continue;
      for (int j = 0; j <= total_; ++j) tab_[i][j] -= f * tab_[row][j];
    }
    basis_[row] = col;
    at_upper_[col] = 0;
    ++pivots_;
  }

  /// Reduced costs d_j = c_j - c_B B^-1 A_j, computed from the tableau.
  std::vector<double> reduced_costs(const std::vector<double>& c) const {
    std::vector<double> d(c.begin(), c.begin() + total_);
    for (int i = 0; i < m_; ++i) {
      double cb = c[basis_[i]];
      if (cb == 0.0) continue;
      for (int j = 0; j < total_; ++j) d[j] -= cb * tab_[i][j];
    }
    return d;
  }

  LpStatus optimize(const std::vector<double>& c, bool phase1) {
    std::vector<char> is_basic(total_, 0);
    while (true) {
      if (pivots_ > pivot_cap_) return LpStatus::PivotCap;
      std::fill(is_basic.begin(), is_basic.end(), 0);
      for (int i = 0; i < m_; ++i) is_basic[basis_[i]] = 1;
      std::vector<double> d = reduced_costs(c);

      // Bland: lowest-index eligible nonbasic column.
      int enter = -1;
      bool from_upper = false;
      for (int j = 0; j < total_; ++j) {
        if (is_basic[j]) continue;
        if (!phase1 && j >= first_art_) continue;  // artificials locked
        if (ub_[j] == 0.0) continue;
        if (!at_upper_[j] && d[j] < -kPivotTol) {
          enter = j;
          from_upper = false;
          break;
        }
        if (at_upper_[j] && ub_[j] < kInf && d[j] > kPivotTol) {
          enter = j;
          from_upper = true;
          break;
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      // Ratio test: entering moves by t >= 0 away from its bound
      // (direction +1 from lower, -1 from upper).
      double dir = from_upper ? -1.0 : 1.0;
      double best_t = ub_[enter] < kInf ? ub_[enter] : kInf;  // bound flip
      int leave_row = -1;  // -1 means bound flip
      for (int i = 0; i < m_; ++i) {
        double a = dir * tab_[i][enter];
        double bi = beta(i);
        double t = kInf;
        if (a > kPivotTol) {
          t = bi / a;  // basic variable drops to 0
        } else if (a < -kPivotTol && ub_[basis_[i]] < kInf) {
          t = (ub_[basis_[i]] - bi) / (-a);  // basic variable hits its ub
        }
        if (t < -kFeasTol) t = 0.0;
        if (t < best_t - 1e-12 ||
            (t < best_t + 1e-12 && leave_row >= 0 &&
             basis_[i] < basis_[leave_row])) {
          best_t = t;
          leave_row = i;
        }
      }
      if (best_t == kInf) return LpStatus::Unbounded;

      if (leave_row < 0) {
        // Bound flip: entering crosses to its other bound.
        at_upper_[enter] = from_upper ? 0 : 1;
        ++pivots_;
        continue;
      }
      int leaving = basis_[leave_row];
      double a = dir * tab_[leave_row][enter];
      bool leaving_to_upper = a < 0.0;
      pivot(leave_row, enter);
      if (from_upper) at_upper_[enter] = 0;
      at_upper_[leaving] = leaving_to_upper ? 1 : 0;
    }
  }

  int m_ = 0;
  int n_ = 0;
  int first_art_ = 0;
  int total_ = 0;
  long long pivot_cap_;
  long long pivots_ = 0;
  bool lb_zero_ok_ = true;
  std::vector<std::vector<double>> tab_;
  std::vector<double> obj_;
  std::vector<double> ub_;
  std::vector<int> basis_;
  std::vector<int> slack_of_;
  std::vector<int> art_of_;
  std::vector<char> at_upper_;
};

}  // namespace

LpResult simplex_solve(int var_count, const std::vector<DenseRow>& rows,
                       const std::vector<double>& objective,
                       long long pivot_cap) {
  std::vector<double> obj = objective;
  obj.resize(var_count, 0.0);
  BoundedSimplex solver(var_count, rows, obj, pivot_cap);
  return solver.run();
}

}  // namespace robust
