#include "symext/linalg.hpp"

#include <algorithm>

#include "symext/action.hpp"
#include "symext/error.hpp"

namespace symext {

namespace {

void normalize_leading_positive(RatVec& v) {
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

// Reduced row echelon form of `a`, with `track` receiving the same row
// operations. Returns pivot columns in row order.
std::vector<std::size_t> rref(RatMat& a, RatMat* track, RatVec* rhs) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      if (track)
        for (std::size_t j = 0; j < track->cols(); ++j) std::swap((*track)(p, j), (*track)(r, j));
      if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
    }
    const Rat inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    if (track)
      for (std::size_t j = 0; j < track->cols(); ++j) (*track)(r, j) *= inv;
    if (rhs) (*rhs)[r] *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rat f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
      if (track)
        for (std::size_t j = 0; j < track->cols(); ++j)
          if (sgn((*track)(r, j)) != 0) (*track)(i, j) -= f * (*track)(r, j);
      if (rhs) (*rhs)[i] -= f * (*rhs)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

LinearSystemResult solve_linear(const RatMat& a, std::span<const Rat> b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::dimension_mismatch, "solve_linear: rows(A) != dim(b)");
  RatMat work = a;
  RatMat track = RatMat::identity(a.rows());
  RatVec rhs(b.begin(), b.end());
  const auto pivots = rref(work, &track, &rhs);

  for (std::size_t i = pivots.size(); i < a.rows(); ++i) {
    if (sgn(rhs[i]) != 0) {
      RatVec y(track.row(i).begin(), track.row(i).end());
      normalize_leading_positive(y);
      return InconsistencyWitness{std::move(y)};
    }
  }

  LinearSolution sol;
  sol.particular = zeros(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = rhs[i];

  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v = zeros(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work(i, f);
    normalize_leading_positive(v);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::size_t rank(const RatMat& a) {
  RatMat work = a;
  return rref(work, nullptr, nullptr).size();
}

std::size_t rank(const std::vector<RatVec>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(RatMat::from_rows(rows, cols));
}

std::optional<RatMat> inverse(const RatMat& a) {
  if (!a.is_square()) throw Error(ErrorKind::dimension_mismatch, "inverse of non-square matrix");
  RatMat work = a;
  RatMat inv = RatMat::identity(a.rows());
  if (rref(work, &inv, nullptr).size() != a.rows()) return std::nullopt;
  return inv;
}

namespace {

// Cheap candidates first so that witnesses stay small and readable.
std::optional<NegativeDirection> simple_negative_direction(const RatMat& m) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(m(i, i)) < 0) {
      RatVec v = unit_vector(n, i);
      return NegativeDirection{v, m(i, i)};
    }
  for (int s : {-1, 1})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        RatVec v = zeros(n);
        v[i] = 1;
        v[j] = s;
        Rat value = quadratic_form(m, v);
        if (sgn(value) < 0) return NegativeDirection{std::move(v), std::move(value)};
      }
  return std::nullopt;
}

}  // namespace

PsdResult psd_check(const RatMat& m) {
  if (!m.is_square()) throw Error(ErrorKind::dimension_mismatch, "psd_check: matrix is not square");
  if (!m.is_symmetric()) throw Error(ErrorKind::not_symmetric, "psd_check: matrix is not symmetric");
  const std::size_t n = m.rows();

  RatMat schur = m;
  RatMat lower = RatMat::identity(n);
  RatMat elim = RatMat::identity(n);  // elim * m * elim^T = diag(pivots so far) (+) schur block
  RatVec pivots(n);

  auto fail = [&](RatVec w) -> PsdResult {
    if (auto simple = simple_negative_direction(m)) return *simple;
    RatVec v = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(w[i]) != 0) axpy(v, w[i], elim.row(i));
    Rat value = quadratic_form(m, v);
    if (sgn(value) >= 0) throw Error(ErrorKind::internal, "psd_check: witness does not certify");
    return NegativeDirection{std::move(v), std::move(value)};
  };

  for (std::size_t k = 0; k < n; ++k) {
    const Rat d = schur(k, k);
    if (sgn(d) < 0) return fail(unit_vector(n, k));
    if (sgn(d) == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (sgn(schur(k, j)) == 0) continue;
        // (t e_k + e_j)^T S (t e_k + e_j) = 2 t S_kj + S_jj = -1
        RatVec w = zeros(n);
        w[k] = -(schur(j, j) + 1) / (2 * schur(k, j));
        w[j] = 1;
        return fail(std::move(w));
      }
      continue;
    }
    pivots[k] = d;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(schur(i, k)) == 0) continue;
      const Rat l = schur(i, k) / d;
      lower(i, k) = l;
      for (std::size_t j = k + 1; j < n; ++j) schur(i, j) -= l * schur(k, j);
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(elim(k, j)) != 0) elim(i, j) -= l * elim(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      schur(i, k) = 0;
      schur(k, i) = 0;
    }
  }
  return LdlDecomposition{std::move(lower), std::move(pivots)};
}

bool is_positive_definite(const RatMat& m) {
  auto r = psd_check(m);
  if (!is_psd(r)) return false;
  const auto& piv = std::get<LdlDecomposition>(r).pivots;
  return std::all_of(piv.begin(), piv.end(), [](const Rat& p) { return sgn(p) > 0; });
}

RatMat average_bilinear_form(const AffineAction& action, const RatMat& seed) {
  const std::size_t d = action.dim();
  if (seed.rows() != d || seed.cols() != d)
    throw Error(ErrorKind::dimension_mismatch, "average_bilinear_form: seed shape differs from action dimension");
  if (!seed.is_symmetric()) throw Error(ErrorKind::not_symmetric, "average_bilinear_form: seed not symmetric");
  if (!is_positive_definite(seed))
    throw Error(ErrorKind::not_positive_definite, "average_bilinear_form: seed is not positive definite");

  const auto& elements = action.group().elements();
  RatMat sum(d, d);
  for (const auto& g : elements) {
    const RatMat l = action.map(g).linear_matrix();
    sum = sum + l.transpose() * seed * l;
  }
  RatMat avg = (Rat(1) / Rat(static_cast<unsigned long>(elements.size()))) * sum;

  for (const auto& g : action.group().generators()) {
    const RatMat l = action.map(g).linear_matrix();
    if (l.transpose() * avg * l != avg)
      throw Error(ErrorKind::internal, "average_bilinear_form: averaged form not invariant");
  }
  return avg;
}

}  // namespace symext
