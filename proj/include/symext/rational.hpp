#pragma once

// Exact rational scalars, vectors and dense matrices.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symext {

// mpq_class keeps values canonical (reduced, positive denominator) after
// every arithmetic operation; constructors that bypass that are wrapped below.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

Rat make_rat(long num, long den = 1);

/// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rat& r);

/// Accepts "p" or "p/q" with decimal integers only; q must be positive.
Rat parse_rat(std::string_view text);

bool is_canonical(const Rat& r);

RatVec zeros(std::size_t n);
RatVec unit_vector(std::size_t n, std::size_t i);
Rat dot(std::span<const Rat> a, std::span<const Rat> b);
RatVec add(std::span<const Rat> a, std::span<const Rat> b);
RatVec sub(std::span<const Rat> a, std::span<const Rat> b);
RatVec scale(const Rat& s, std::span<const Rat> a);
/// a += s * b
void axpy(RatVec& a, const Rat& s, std::span<const Rat> b);
bool is_zero(std::span<const Rat> a);
std::string to_string(std::span<const Rat> v);

struct RatVecHash {
  std::size_t operator()(const RatVec& v) const noexcept;
};

class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMat identity(std::size_t n);
  static RatMat from_rows(const std::vector<RatVec>& rows, std::size_t cols);
  static RatMat diagonal(std::span<const Rat> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rat> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Rat> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  RatVec column(std::size_t j) const;

  RatMat transpose() const;
  bool is_symmetric() const;

  friend bool operator==(const RatMat&, const RatMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatMat operator*(const RatMat& a, const RatMat& b);
RatMat operator+(const RatMat& a, const RatMat& b);
RatMat operator-(const RatMat& a, const RatMat& b);
RatMat operator*(const Rat& s, const RatMat& a);
RatVec operator*(const RatMat& a, std::span<const Rat> x);

/// Frobenius product sum_ij A_ij B_ij.
Rat frobenius(const RatMat& a, const RatMat& b);
/// x^T M x
Rat quadratic_form(const RatMat& m, std::span<const Rat> x);

std::string to_string(const RatMat& m);

}  // namespace symext
