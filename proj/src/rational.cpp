#include "symext/rational.hpp"

#include <sstream>

#include "symext/error.hpp"

namespace symext {

Rat make_rat(long num, long den) {
  if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digit_run(num) || !is_digit_run(den))
    throw Error(ErrorKind::parse, "not a rational: \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::parse, "zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

bool is_canonical(const Rat& r) {
  if (r.get_den() <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return g == 1;
}

RatVec zeros(std::size_t n) { return RatVec(n); }

RatVec unit_vector(std::size_t n, std::size_t i) {
  RatVec v(n);
  v.at(i) = 1;
  return v;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::dimension_mismatch, "dot product of unequal lengths");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0 || sgn(b[i]) == 0) continue;
    s += a[i] * b[i];
  }
  return s;
}

RatVec add(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::dimension_mismatch, "vector sum of unequal lengths");
  RatVec r(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

RatVec sub(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::dimension_mismatch, "vector difference of unequal lengths");
  RatVec r(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

RatVec scale(const Rat& s, std::span<const Rat> a) {
  RatVec r(a.begin(), a.end());
  for (auto& x : r) x *= s;
  return r;
}

void axpy(RatVec& a, const Rat& s, std::span<const Rat> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::dimension_mismatch, "axpy of unequal lengths");
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) a[i] += s * b[i];
}

bool is_zero(std::span<const Rat> a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

std::string to_string(std::span<const Rat> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::size_t RatVecHash::operator()(const RatVec& v) const noexcept {
  std::size_t h = v.size();
  for (const auto& x : v) {
    const mpz_srcptr num = x.get_num_mpz_t();
    const mpz_srcptr den = x.get_den_mpz_t();
    std::size_t e = static_cast<std::size_t>(mpz_size(num) ? mpz_getlimbn(num, 0) : 0);
    e = e * 31 + static_cast<std::size_t>(mpz_sgn(num) + 1);
    e = e * 1000003u + static_cast<std::size_t>(mpz_getlimbn(den, 0));
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::dimension_mismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  RatMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::dimension_mismatch, "row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMat RatMat::diagonal(std::span<const Rat> d) {
  RatMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatVec RatMat::column(std::size_t j) const {
  RatVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::dimension_mismatch, "matrix product shapes");
  RatMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::dimension_mismatch, "matrix sum shapes");
  RatMat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::dimension_mismatch, "matrix difference shapes");
  RatMat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

RatMat operator*(const Rat& s, const RatMat& a) {
  RatMat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

RatVec operator*(const RatMat& a, std::span<const Rat> x) {
  if (a.cols() != x.size()) throw Error(ErrorKind::dimension_mismatch, "matrix-vector shapes");
  RatVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x);
  return y;
}

Rat frobenius(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::dimension_mismatch, "Frobenius product shapes");
  Rat s;
  for (std::size_t i = 0; i < a.rows(); ++i) s += dot(a.row(i), b.row(i));
  return s;
}

Rat quadratic_form(const RatMat& m, std::span<const Rat> x) { return dot(x, m * x); }

std::string to_string(const RatMat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << to_string(m.row(i));
  }
  os << "]";
  return os.str();
}

}  // namespace symext
