#include "liegrad/lp.hpp"

#include <utility>

#include "liegrad/errors.hpp"

namespace liegrad {

std::size_t LinearProgram::add_var(std::optional<Rat> lo, std::optional<Rat> hi) {
  objective.emplace_back(0);
  lower.push_back(std::move(lo));
  upper.push_back(std::move(hi));
  for (auto& c : constraints) c.coeffs.emplace_back(0);
  return objective.size() - 1;
}

void LinearProgram::add(RatVec coeffs, Relation rel, Rat rhs) {
  if (coeffs.size() != num_vars()) throw DimensionMismatch("constraint length differs from variable count");
  constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::check() const {
  const std::size_t n = num_vars();
  if (lower.size() != n || upper.size() != n) throw DimensionMismatch("bound vectors differ from variable count");
  for (const auto& c : constraints)
    if (c.coeffs.size() != n) throw DimensionMismatch("constraint length differs from variable count");
}

bool LpResult::certificate_ok() const {
  if (status != LpStatus::Optimal) return false;
  for (const auto& r : reduced_costs)
    if (r > 0) return false;
  return true;
}

bool is_feasible(const LinearProgram& lp, const RatVec& x) {
  if (x.size() != lp.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.lower[j] && x[j] < *lp.lower[j]) return false;
    if (lp.upper[j] && x[j] > *lp.upper[j]) return false;
  }
  for (const auto& c : lp.constraints) {
    Rat lhs = dot(c.coeffs, x);
    if (c.rel == Relation::Le && lhs > c.rhs) return false;
    if (c.rel == Relation::Ge && lhs < c.rhs) return false;
    if (c.rel == Relation::Eq && lhs != c.rhs) return false;
  }
  return true;
}

Rat objective_value(const LinearProgram& lp, const RatVec& x) { return dot(lp.objective, x); }

namespace {

// x_j = offset + sum sign * y_col over the listed columns
struct VarMap {
  Rat offset;
  std::vector<std::pair<std::size_t, int>> cols;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), a_(rows, RatVec(cols + 1, Rat(0))) {}

  Rat& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rat& rhs(std::size_t r) { return a_[r][n_]; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c, RatVec& cost) {
    Rat inv = 1 / a_[r][c];
    for (auto& x : a_[r])
      if (x != 0) x *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      Rat f = a_[i][c];
      for (std::size_t j = 0; j <= n_; ++j)
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
    }
    if (cost[c] != 0) {
      Rat f = cost[c];
      for (std::size_t j = 0; j <= n_; ++j)
        if (a_[r][j] != 0) cost[j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  // Bland's rule: lowest-index entering column with positive reduced cost,
  // ratio ties broken by lowest basic variable index. Returns false when
  // unbounded. `allowed` masks columns that may enter.
  bool optimize(RatVec& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (allowed[j] && cost[j] > 0) {
          enter = j;
          break;
        }
      if (enter == n_) return true;
      std::size_t leave = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (a_[i][enter] <= 0) continue;
        Rat ratio = a_[i][n_] / a_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter, cost);
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

 private:
  std::size_t m_, n_;
  std::vector<RatVec> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult simplex_solve(const LinearProgram& lp) {
  lp.check();
  const std::size_t nv = lp.num_vars();
  LpResult result;

  // Substitute bounded/free variables by nonnegative columns.
  std::vector<VarMap> vars(nv);
  std::size_t ncols = 0;
  std::vector<Constraint> rows;
  for (std::size_t j = 0; j < nv; ++j) {
    const auto& lo = lp.lower[j];
    const auto& hi = lp.upper[j];
    if (lo) {
      if (hi && *hi < *lo) return result;  // Infeasible
      vars[j] = {*lo, {{ncols++, 1}}};
    } else if (hi) {
      vars[j] = {*hi, {{ncols++, -1}}};
    } else {
      vars[j] = {Rat(0), {{ncols, 1}, {ncols + 1, -1}}};
      ncols += 2;
    }
  }
  auto translate = [&](const RatVec& coeffs, Rat rhs) {
    RatVec out(ncols, Rat(0));
    for (std::size_t j = 0; j < nv; ++j) {
      if (coeffs[j] == 0) continue;
      rhs -= coeffs[j] * vars[j].offset;
      for (auto [c, s] : vars[j].cols) out[c] += s * coeffs[j];
    }
    return std::make_pair(out, rhs);
  };
  for (const auto& c : lp.constraints) {
    auto [coeffs, rhs] = translate(c.coeffs, c.rhs);
    rows.push_back({std::move(coeffs), c.rel, std::move(rhs)});
  }
  for (std::size_t j = 0; j < nv; ++j)
    if (lp.lower[j] && lp.upper[j]) {
      RatVec coeffs(ncols, Rat(0));
      coeffs[vars[j].cols[0].first] = 1;
      rows.push_back({std::move(coeffs), Relation::Le, *lp.upper[j] - *lp.lower[j]});
    }

  // Columns: structural | slacks | artificials.
  const std::size_t m = rows.size();
  std::size_t nslack = 0;
  for (const auto& r : rows)
    if (r.rel != Relation::Eq) ++nslack;
  std::vector<int> slack_sign(m, 0);
  std::vector<bool> needs_art(m, true);
  std::size_t nart = 0;
  for (std::size_t i = 0; i < m; ++i) {
    int s = rows[i].rel == Relation::Le ? 1 : rows[i].rel == Relation::Ge ? -1 : 0;
    if (rows[i].rhs < 0) s = -s;
    slack_sign[i] = s;
    needs_art[i] = s != 1;
    if (needs_art[i]) ++nart;
  }
  const std::size_t total = ncols + nslack + nart;
  Tableau t(m, total);
  t.basis().assign(m, 0);
  std::size_t slack_col = ncols, art_col = ncols + nslack;
  for (std::size_t i = 0; i < m; ++i) {
    int flip = rows[i].rhs < 0 ? -1 : 1;
    for (std::size_t c = 0; c < ncols; ++c) t.at(i, c) = flip * rows[i].coeffs[c];
    t.rhs(i) = flip * rows[i].rhs;
    if (rows[i].rel != Relation::Eq) {
      t.at(i, slack_col) = slack_sign[i];
      if (!needs_art[i]) t.basis()[i] = slack_col;
      ++slack_col;
    }
    if (needs_art[i]) {
      t.at(i, art_col) = 1;
      t.basis()[i] = art_col++;
    }
  }

  // Phase one: maximize -sum(artificials).
  std::vector<bool> allowed(total, true);
  if (nart > 0) {
    RatVec cost(total + 1, Rat(0));
    for (std::size_t c = ncols + nslack; c < total; ++c) cost[c] = -1;
    for (std::size_t i = 0; i < m; ++i)
      if (t.basis()[i] >= ncols + nslack)
        for (std::size_t c = 0; c <= total; ++c) cost[c] += t.at(i, c);
    t.optimize(cost, allowed);
    for (std::size_t i = 0; i < t.rows(); ++i)
      if (t.basis()[i] >= ncols + nslack && t.rhs(i) != 0) return result;  // Infeasible
    // drive zero-level artificials out of the basis
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basis()[i] < ncols + nslack) {
        ++i;
        continue;
      }
      std::size_t c = 0;
      while (c < ncols + nslack && t.at(i, c) == 0) ++c;
      if (c == ncols + nslack) {
        t.drop_row(i);  // redundant constraint
      } else {
        t.pivot(i, c, cost);
        ++i;
      }
    }
    for (std::size_t c = ncols + nslack; c < total; ++c) allowed[c] = false;
  }

  // Phase two in the maximization convention.
  RatVec c_obj(total + 1, Rat(0));
  Rat const_term = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    Rat cj = lp.sense == Sense::Maximize ? lp.objective[j] : Rat(-lp.objective[j]);
    if (cj == 0) continue;
    const_term += cj * vars[j].offset;
    for (auto [c, s] : vars[j].cols) c_obj[c] += s * cj;
  }
  RatVec cost = c_obj;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    Rat cb = c_obj[t.basis()[i]];
    if (cb == 0) continue;
    for (std::size_t c = 0; c <= total; ++c) cost[c] -= cb * t.at(i, c);
  }
  if (!t.optimize(cost, allowed)) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  RatVec y(ncols + nslack, Rat(0));
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basis()[i] < y.size()) y[t.basis()[i]] = t.rhs(i);
  result.point.assign(nv, Rat(0));
  for (std::size_t j = 0; j < nv; ++j) {
    Rat x = vars[j].offset;
    for (auto [c, s] : vars[j].cols) x += s * y[c];
    result.point[j] = x;
  }
  result.status = LpStatus::Optimal;
  result.value = objective_value(lp, result.point);
  result.reduced_costs.assign(cost.begin(), cost.begin() + static_cast<std::ptrdiff_t>(ncols + nslack));
  return result;
}

void IntegerProgram::check() const {
  lp.check();
  const std::size_t n = lp.num_vars();
  if (!integral.empty() && integral.size() != n) throw DimensionMismatch("integrality flags length");
  if (!binary.empty() && binary.size() != n) throw DimensionMismatch("binary flags length");
}

namespace {

struct BranchAndBound {
  const IntegerProgram& ip;
  std::vector<bool> integral;
  bool integral_objective = true;
  IlpResult best;

  bool better(const Rat& a, const Rat& b) const {
    return ip.lp.sense == Sense::Maximize ? a > b : a < b;
  }

  // Tightest bound the subtree can still reach.
  Rat bound_of(const Rat& relaxed) const {
    if (!integral_objective) return relaxed;
    return Rat(ip.lp.sense == Sense::Maximize ? floor_rat(relaxed) : ceil_rat(relaxed));
  }

  void explore(LinearProgram& node) {
    ++best.nodes;
    LpResult r = simplex_solve(node);
    if (r.status == LpStatus::Infeasible) return;
    if (r.status == LpStatus::Unbounded) throw Error("ilp_solve: LP relaxation unbounded despite bounds");
    if (best.status == IlpStatus::Optimal && !better(bound_of(r.value), best.value)) return;
    std::size_t branch = r.point.size();
    for (std::size_t j = 0; j < r.point.size(); ++j)
      if (integral[j] && !is_integer(r.point[j])) {
        branch = j;
        break;
      }
    if (branch == r.point.size()) {
      best.status = IlpStatus::Optimal;
      best.value = r.value;
      best.point.clear();
      for (const auto& x : r.point) best.point.push_back(floor_rat(x));
      return;
    }
    const Rat v = r.point[branch];
    auto saved_lo = node.lower[branch];
    auto saved_hi = node.upper[branch];
    node.upper[branch] = Rat(floor_rat(v));
    explore(node);
    node.upper[branch] = saved_hi;
    node.lower[branch] = Rat(ceil_rat(v));
    explore(node);
    node.lower[branch] = saved_lo;
  }
};

}  // namespace

IlpResult ilp_solve(const IntegerProgram& ip) {
  ip.check();
  const std::size_t n = ip.lp.num_vars();
  LinearProgram root = ip.lp;
  BranchAndBound bb{ip, std::vector<bool>(n, true), true, {}};
  if (!ip.integral.empty()) bb.integral = ip.integral;
  for (std::size_t j = 0; j < n; ++j) {
    if (!ip.binary.empty() && ip.binary[j]) {
      bb.integral[j] = true;
      root.lower[j] = Rat(0);
      root.upper[j] = Rat(1);
    }
    if (!root.lower[j] || !root.upper[j]) throw Error("ilp_solve: every variable needs finite bounds");
    if (ip.lp.objective[j] != 0 && (!bb.integral[j] || !is_integer(ip.lp.objective[j])))
      bb.integral_objective = false;
  }
  bb.explore(root);
  return bb.best;
}

}  // namespace liegrad
