#include "symext/lp.hpp"

#include <algorithm>
#include <optional>

#include "symext/error.hpp"

namespace symext {

namespace {

Inequality scaled_by_first_nonzero(const Inequality& h, bool allow_negation) {
  const Rat* lead = nullptr;
  for (const auto& x : h.a)
    if (sgn(x) != 0) {
      lead = &x;
      break;
    }
  if (!lead && sgn(h.b) != 0) lead = &h.b;
  if (!lead) return h;
  Rat f = 1 / *lead;
  if (!allow_negation && sgn(f) < 0) f = -f;
  return Inequality{scale(f, h.a), h.b * f};
}

}  // namespace

Inequality normalized(const Inequality& h) { return scaled_by_first_nonzero(h, false); }
Inequality normalized_equality(const Inequality& h) { return scaled_by_first_nonzero(h, true); }

void HRep::validate() const {
  for (const auto& h : ineqs)
    if (h.a.size() != dim) throw Error(ErrorKind::dimension_mismatch, "inequality length differs from dim");
  for (const auto& h : eqs)
    if (h.a.size() != dim) throw Error(ErrorKind::dimension_mismatch, "equality length differs from dim");
}

bool HRep::contains(std::span<const Rat> x) const {
  if (x.size() != dim) throw Error(ErrorKind::dimension_mismatch, "point length differs from dim");
  for (const auto& h : ineqs)
    if (sgn(slack(h, x)) < 0) return false;
  for (const auto& h : eqs)
    if (sgn(slack(h, x)) != 0) return false;
  return true;
}

void VRep::validate() const {
  for (const auto& v : vertices)
    if (v.size() != dim) throw Error(ErrorKind::dimension_mismatch, "vertex length differs from dim");
}

namespace {

class Simplex {
 public:
  explicit Simplex(const StandardLp& lp) : lp_(lp), m_(lp.rows), n_(lp.columns.size()) {
    if (lp.b.size() != m_ || lp.c.size() != n_) throw Error(ErrorKind::dimension_mismatch, "standard LP shapes");
    sign_.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i)
      if (sgn(lp.b[i]) < 0) sign_[i] = -1;
    cols_.reserve(n_ + m_);
    for (const auto& col : lp.columns) {
      SparseColumn scaled;
      for (const auto& [i, v] : col) {
        if (i >= m_) throw Error(ErrorKind::dimension_mismatch, "column entry outside row range");
        if (sgn(v) != 0) scaled.emplace_back(i, sign_[i] < 0 ? Rat(-v) : v);
      }
      cols_.push_back(std::move(scaled));
    }
    for (std::size_t i = 0; i < m_; ++i) cols_.push_back(SparseColumn{{i, Rat(1)}});
    binv_ = RatMat::identity(m_);
    xb_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) xb_[i] = sign_[i] < 0 ? Rat(-lp.b[i]) : lp.b[i];
    basis_.resize(m_);
    where_.assign(n_ + m_, -1);
    for (std::size_t i = 0; i < m_; ++i) {
      basis_[i] = n_ + i;
      where_[n_ + i] = static_cast<long>(i);
    }
  }

  StandardLpResult run() {
    StandardLpResult res;
    RatVec cost1(n_ + m_);
    for (std::size_t i = 0; i < m_; ++i) cost1[n_ + i] = 1;
    barred_.assign(n_ + m_, false);
    iterate(cost1, res);
    Rat phase1;
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] >= n_) phase1 += xb_[r];
    if (sgn(phase1) > 0) {
      res.status = StandardLpResult::Status::infeasible;
      res.y = unscaled(duals(cost1));
      return res;
    }
    drive_out_artificials(res);
    for (std::size_t j = n_; j < n_ + m_; ++j) barred_[j] = true;
    RatVec cost2(n_ + m_);
    for (std::size_t j = 0; j < n_; ++j) cost2[j] = lp_.c[j];
    if (auto ray_col = iterate(cost2, res)) {
      res.status = StandardLpResult::Status::unbounded;
      res.x = primal();
      res.ray = zeros(n_);
      res.ray[*ray_col] = 1;
      const RatVec d = column_in_basis(*ray_col);
      for (std::size_t r = 0; r < m_; ++r)
        if (basis_[r] < n_) res.ray[basis_[r]] = -d[r];
      return res;
    }
    res.status = StandardLpResult::Status::optimal;
    res.x = primal();
    res.y = unscaled(duals(cost2));
    res.value = dot(lp_.c, res.x);
    return res;
  }

 private:
  RatVec column_in_basis(std::size_t j) const {
    RatVec d(m_);
    for (std::size_t r = 0; r < m_; ++r)
      for (const auto& [i, v] : cols_[j])
        if (sgn(binv_(r, i)) != 0) d[r] += binv_(r, i) * v;
    return d;
  }

  RatVec duals(const RatVec& cost) const {
    RatVec y(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const Rat& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t i = 0; i < m_; ++i)
        if (sgn(binv_(r, i)) != 0) y[i] += cb * binv_(r, i);
    }
    return y;
  }

  RatVec unscaled(RatVec y) const {
    for (std::size_t i = 0; i < m_; ++i)
      if (sign_[i] < 0) y[i] = -y[i];
    return y;
  }

  RatVec primal() const {
    RatVec x(n_);
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) x[basis_[r]] = xb_[r];
    return x;
  }

  void pivot(std::size_t r, std::size_t j, const RatVec& d) {
    const Rat inv = 1 / d[r];
    for (std::size_t i = 0; i < m_; ++i)
      if (sgn(binv_(r, i)) != 0) binv_(r, i) *= inv;
    xb_[r] *= inv;
    for (std::size_t q = 0; q < m_; ++q) {
      if (q == r || sgn(d[q]) == 0) continue;
      const Rat f = d[q];
      for (std::size_t i = 0; i < m_; ++i)
        if (sgn(binv_(r, i)) != 0) binv_(q, i) -= f * binv_(r, i);
      xb_[q] -= f * xb_[r];
    }
    where_[basis_[r]] = -1;
    basis_[r] = j;
    where_[j] = static_cast<long>(r);
  }

  // Bland's rule. Returns the entering column when the LP is unbounded.
  std::optional<std::size_t> iterate(const RatVec& cost, StandardLpResult& res) {
    for (;;) {
      const RatVec y = duals(cost);
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < n_ + m_ && !entering; ++j) {
        if (where_[j] >= 0 || barred_[j]) continue;
        Rat rc = cost[j];
        for (const auto& [i, v] : cols_[j])
          if (sgn(y[i]) != 0) rc -= y[i] * v;
        if (sgn(rc) < 0) entering = j;
      }
      if (!entering) return std::nullopt;
      const RatVec d = column_in_basis(*entering);
      std::optional<std::size_t> leave;
      Rat best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(d[r]) <= 0) continue;
        Rat ratio = xb_[r] / d[r];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return entering;
      pivot(*leave, *entering, d);
      ++res.pivots;
    }
  }

  void drive_out_artificials(StandardLpResult& res) {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (where_[j] >= 0) continue;
        Rat dr;
        for (const auto& [i, v] : cols_[j])
          if (sgn(binv_(r, i)) != 0) dr += binv_(r, i) * v;
        if (sgn(dr) == 0) continue;
        pivot(r, j, column_in_basis(j));
        ++res.pivots;
        break;
      }
      // Otherwise row r is redundant; its artificial stays basic at zero.
    }
  }

  const StandardLp& lp_;
  std::size_t m_, n_;
  std::vector<int> sign_;
  std::vector<SparseColumn> cols_;
  RatMat binv_;
  RatVec xb_;
  std::vector<std::size_t> basis_;
  std::vector<long> where_;
  std::vector<bool> barred_;
};

}  // namespace

StandardLpResult solve_standard_form(const StandardLp& lp) { return Simplex(lp).run(); }

namespace {

// Free x = x+ - x-, one surplus column per inequality.
StandardLp to_standard(const HRep& h, std::span<const Rat> objective) {
  const std::size_t d = h.dim;
  const std::size_t mi = h.ineqs.size();
  StandardLp lp;
  lp.rows = mi + h.eqs.size();
  lp.columns.assign(2 * d + mi, {});
  lp.b.resize(lp.rows);
  lp.c = zeros(2 * d + mi);
  auto add_row = [&](std::size_t row, const Inequality& q) {
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(q.a[k]) == 0) continue;
      lp.columns[k].emplace_back(row, q.a[k]);
      lp.columns[d + k].emplace_back(row, -q.a[k]);
    }
    lp.b[row] = q.b;
  };
  for (std::size_t i = 0; i < mi; ++i) {
    add_row(i, h.ineqs[i]);
    lp.columns[2 * d + i].emplace_back(i, Rat(-1));
  }
  for (std::size_t i = 0; i < h.eqs.size(); ++i) add_row(mi + i, h.eqs[i]);
  for (std::size_t k = 0; k < d; ++k) {
    lp.c[k] = objective[k];
    lp.c[d + k] = -objective[k];
  }
  return lp;
}

RatVec combine(const HRep& h, std::span<const Rat> y_ineq, std::span<const Rat> y_eq) {
  RatVec s = zeros(h.dim);
  for (std::size_t i = 0; i < h.ineqs.size(); ++i) axpy(s, y_ineq[i], h.ineqs[i].a);
  for (std::size_t i = 0; i < h.eqs.size(); ++i) axpy(s, y_eq[i], h.eqs[i].a);
  return s;
}

Rat combine_rhs(const HRep& h, std::span<const Rat> y_ineq, std::span<const Rat> y_eq) {
  Rat s;
  for (std::size_t i = 0; i < h.ineqs.size(); ++i) s += y_ineq[i] * h.ineqs[i].b;
  for (std::size_t i = 0; i < h.eqs.size(); ++i) s += y_eq[i] * h.eqs[i].b;
  return s;
}

}  // namespace

LpResult lp_optimize(const HRep& h, std::span<const Rat> objective, Sense sense) {
  h.validate();
  if (objective.size() != h.dim) throw Error(ErrorKind::dimension_mismatch, "objective length differs from dim");
  RatVec obj(objective.begin(), objective.end());
  if (sense == Sense::maximize)
    for (auto& x : obj) x = -x;
  const StandardLp lp = to_standard(h, obj);
  const auto res = solve_standard_form(lp);
  const std::size_t d = h.dim, mi = h.ineqs.size();

  auto split = [&](const RatVec& y) {
    return std::pair{RatVec(y.begin(), y.begin() + static_cast<long>(mi)), RatVec(y.begin() + static_cast<long>(mi), y.end())};
  };
  auto point_of = [&](const RatVec& x) {
    RatVec p(d);
    for (std::size_t k = 0; k < d; ++k) p[k] = x[k] - x[d + k];
    return p;
  };

  switch (res.status) {
    case StandardLpResult::Status::infeasible: {
      auto [yi, ye] = split(res.y);
      const bool ok = std::all_of(yi.begin(), yi.end(), [](const Rat& v) { return sgn(v) >= 0; }) &&
                      is_zero(combine(h, yi, ye)) && sgn(combine_rhs(h, yi, ye)) > 0;
      if (!ok) throw Error(ErrorKind::internal, "LP infeasibility certificate failed re-check");
      return LpInfeasible{std::move(yi), std::move(ye)};
    }
    case StandardLpResult::Status::unbounded: {
      RatVec p = point_of(res.x), ray = point_of(res.ray);
      bool ok = h.contains(p) && sgn(dot(obj, ray)) < 0;
      for (const auto& q : h.ineqs) ok = ok && sgn(dot(q.a, ray)) >= 0;
      for (const auto& q : h.eqs) ok = ok && sgn(dot(q.a, ray)) == 0;
      if (!ok) throw Error(ErrorKind::internal, "LP unbounded ray failed re-check");
      return LpUnbounded{std::move(p), std::move(ray)};
    }
    case StandardLpResult::Status::optimal: break;
  }
  RatVec p = point_of(res.x);
  auto [yi, ye] = split(res.y);
  Rat value = dot(obj, p);
  const bool ok = h.contains(p) && std::all_of(yi.begin(), yi.end(), [](const Rat& v) { return sgn(v) >= 0; }) &&
                  combine(h, yi, ye) == obj && combine_rhs(h, yi, ye) == value;
  if (!ok) throw Error(ErrorKind::internal, "LP optimum failed dual re-check");
  if (sense == Sense::maximize) {
    value = -value;
    for (auto& v : yi) v = -v;
    for (auto& v : ye) v = -v;
  }
  return LpOptimum{std::move(value), std::move(p), std::move(yi), std::move(ye)};
}

bool is_feasible(const HRep& h) {
  return !std::holds_alternative<LpInfeasible>(lp_optimize(h, zeros(h.dim), Sense::minimize));
}

HullMembership member_of_hull(const std::vector<RatVec>& vertices, std::span<const Rat> x) {
  if (vertices.empty()) throw Error(ErrorKind::invalid_argument, "member_of_hull: empty vertex list");
  const std::size_t d = x.size();
  for (const auto& v : vertices)
    if (v.size() != d) throw Error(ErrorKind::dimension_mismatch, "member_of_hull: vertex length differs from point");
  StandardLp lp;
  lp.rows = d + 1;
  lp.b.resize(d + 1);
  lp.b[0] = 1;
  for (std::size_t k = 0; k < d; ++k) lp.b[k + 1] = x[k];
  lp.c = zeros(vertices.size());
  for (const auto& v : vertices) {
    SparseColumn col{{0, Rat(1)}};
    for (std::size_t k = 0; k < d; ++k)
      if (sgn(v[k]) != 0) col.emplace_back(k + 1, v[k]);
    lp.columns.push_back(std::move(col));
  }
  const auto res = solve_standard_form(lp);
  if (res.status == StandardLpResult::Status::optimal) {
    RatVec sum = zeros(d);
    Rat total;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (sgn(res.x[i]) < 0) throw Error(ErrorKind::internal, "member_of_hull: negative coefficient");
      axpy(sum, res.x[i], vertices[i]);
      total += res.x[i];
    }
    if (total != 1 || sum != RatVec(x.begin(), x.end()))
      throw Error(ErrorKind::internal, "member_of_hull: coefficients do not reproduce the point");
    return HullInside{res.x};
  }
  // y0 + y.u <= 0 for all vertices u and y0 + y.x > 0.
  Inequality sep{RatVec(d), res.y[0]};
  for (std::size_t k = 0; k < d; ++k) sep.a[k] = -res.y[k + 1];
  sep = normalized(sep);
  for (const auto& v : vertices)
    if (sgn(slack(sep, v)) < 0) throw Error(ErrorKind::internal, "member_of_hull: separator cuts a vertex");
  if (sgn(slack(sep, x)) >= 0) throw Error(ErrorKind::internal, "member_of_hull: separator does not cut the point");
  return HullOutside{std::move(sep.a), std::move(sep.b)};
}

}  // namespace symext
