/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// \file zmod_linalg.hpp
/// Exact linear algebra over Z_D for arbitrary D >= 2.
///
/// Z_D is not a principal ideal domain when D is composite, so every
/// decomposition here is carried out over the integers (Smith normal form
/// with arbitrary-precision entries) and reduced mod D only when counting
/// or solving.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qudit {

using BigInt = boost::multiprecision::cpp_int;
using Modulus = std::int64_t;
/// Vector over Z_D with entries in [0, D).
using ZVector = std::vector<std::int64_t>;

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_modulus(Modulus d) {
  if (d < 2)
    throw std::invalid_argument("modulus must be >= 2, got " +
                                std::to_string(d));
}

inline std::int64_t reduce(std::int64_t v, Modulus d) {
  std::int64_t r = v % d;
  return r < 0 ? r + d : r;
}

inline std::int64_t reduce(const BigInt &v, Modulus d) {
  BigInt r = v % d;
  if (r < 0)
    r += d;
  return static_cast<std::int64_t>(r);
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, Modulus d) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % d);
}

inline std::int64_t add_mod(std::int64_t a, std::int64_t b, Modulus d) {
  std::int64_t s = a + b;
  return s >= d ? s - d : s;
}

} // namespace detail

inline BigInt big_pow(Modulus base, std::size_t exponent) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exponent; ++i)
    r *= base;
  return r;
}

/// Dot product over Z_D.
inline std::int64_t dot(std::span<const std::int64_t> a,
                        std::span<const std::int64_t> b, Modulus d) {
  if (a.size() != b.size())
    throw DimensionMismatch("dot: length mismatch");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc = detail::add_mod(acc, detail::mul_mod(a[i], b[i], d), d);
  return acc;
}

inline ZVector reduce_vector(std::span<const std::int64_t> v, Modulus d) {
  ZVector out(v.size());
  std::transform(v.begin(), v.end(), out.begin(),
                 [d](std::int64_t e) { return detail::reduce(e, d); });
  return out;
}

inline bool is_zero_vector(std::span<const std::int64_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e == 0; });
}

inline std::size_t hamming_weight(std::span<const std::int64_t> v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](std::int64_t e) { return e != 0; }));
}

// ---------------------------------------------------------------------------
// IntegerMatrix

/// Dense row-major matrix over the integers.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("IntegerMatrix product: inner dimensions differ");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt &aik = a(i, k);
        if (aik == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;

  IntegerMatrix transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const BigInt &e) { return e == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt &factor) {
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(src, j) != 0)
        (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt &factor) {
    for (std::size_t i = 0; i < rows_; ++i)
      if ((*this)(i, src) != 0)
        (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(r, j) = -(*this)(r, j);
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
inline BigInt determinant(IntegerMatrix m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// ZModMatrix

/// Dense row-major matrix over Z_D; entries are kept in [0, D).
class ZModMatrix {
public:
  ZModMatrix() = default;
  ZModMatrix(std::size_t rows, std::size_t cols, Modulus d)
      : rows_(rows), cols_(cols), modulus_(d), data_(rows * cols, 0) {
    detail::require_modulus(d);
  }

  /// Builds from row-major integers of any sign, reducing mod D.
  static ZModMatrix from_rows(std::size_t rows, std::size_t cols, Modulus d,
                              std::span<const std::int64_t> values) {
    if (values.size() != rows * cols)
      throw DimensionMismatch("ZModMatrix::from_rows: expected " +
                              std::to_string(rows * cols) + " entries");
    ZModMatrix m(rows, cols, d);
    for (std::size_t i = 0; i < values.size(); ++i)
      m.data_[i] = detail::reduce(values[i], d);
    return m;
  }

  static ZModMatrix from_rows(std::size_t cols, Modulus d,
                              const std::vector<ZVector> &rows) {
    ZModMatrix m(rows.size(), cols, d);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols)
        throw DimensionMismatch("ZModMatrix::from_rows: ragged row");
      for (std::size_t c = 0; c < cols; ++c)
        m.set(r, c, rows[r][c]);
    }
    return m;
  }

  static ZModMatrix identity(std::size_t n, Modulus d) {
    ZModMatrix m(n, n, d);
    for (std::size_t i = 0; i < n; ++i)
      m.data_[i * n + i] = 1;
    return m;
  }

  /// Reduces an integer matrix mod D.
  static ZModMatrix reduce(const IntegerMatrix &a, Modulus d) {
    ZModMatrix m(a.rows(), a.cols(), d);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        m.data_[i * a.cols() + j] = detail::reduce(a(i, j), d);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Modulus modulus() const { return modulus_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t v) {
    data_[r * cols_ + c] = detail::reduce(v, modulus_);
  }
  /// Adds v (any sign) to entry (r, c).
  void accumulate(std::size_t r, std::size_t c, std::int64_t v) {
    auto &e = data_[r * cols_ + c];
    e = detail::reduce(e + detail::reduce(v, modulus_), modulus_);
  }

  ZVector row(std::size_t r) const {
    return ZVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  ZVector column(std::size_t c) const {
    ZVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      v[r] = (*this)(r, c);
    return v;
  }
  std::vector<ZVector> row_list() const {
    std::vector<ZVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      out.push_back(row(r));
    return out;
  }

  ZModMatrix transpose() const {
    ZModMatrix t(cols_, rows_, modulus_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
  }

  /// Integer lift with entries in [0, D).
  IntegerMatrix lift() const {
    IntegerMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m(i, j) = (*this)(i, j);
    return m;
  }

  bool is_zero() const { return is_zero_vector(data_); }

  /// Matrix-vector product A·x over Z_D.
  ZVector apply(std::span<const std::int64_t> x) const {
    if (x.size() != cols_)
      throw DimensionMismatch("ZModMatrix::apply: vector length " +
                              std::to_string(x.size()) + " != " +
                              std::to_string(cols_));
    ZVector y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      y[r] = dot(std::span<const std::int64_t>(data_).subspan(r * cols_, cols_),
                 x, modulus_);
    return y;
  }

  friend ZModMatrix operator*(const ZModMatrix &a, const ZModMatrix &b) {
    if (a.modulus_ != b.modulus_)
      throw DimensionMismatch("ZModMatrix product: moduli differ");
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("ZModMatrix product: inner dimensions differ");
    ZModMatrix out(a.rows_, b.cols_, a.modulus_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::int64_t aik = a(i, k);
        if (aik == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          out.data_[i * b.cols_ + j] = detail::add_mod(
              out.data_[i * b.cols_ + j], detail::mul_mod(aik, b(k, j), a.modulus_),
              a.modulus_);
      }
    return out;
  }

  friend bool operator==(const ZModMatrix &, const ZModMatrix &) = default;

  std::span<const std::int64_t> data() const { return data_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Modulus modulus_ = 2;
  std::vector<std::int64_t> data_;
};

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithDecomposition {
  IntegerMatrix U;           ///< rows x rows, unimodular
  std::vector<BigInt> diag;  ///< positive invariant factors d_1 | d_2 | ... | d_r
  IntegerMatrix V;           ///< cols x cols, unimodular

  std::size_t rank() const { return diag.size(); }

  /// The diagonal matrix U·A·V as a full rows x cols matrix.
  IntegerMatrix diagonal_matrix() const {
    IntegerMatrix s(U.rows(), V.rows());
    for (std::size_t i = 0; i < diag.size(); ++i)
      s(i, i) = diag[i];
    return s;
  }
};

/// Smith normal form over the integers with U·A·V = diag(d_1..d_r, 0..).
///
/// Pivots on the smallest nonzero absolute value in the trailing block;
/// non-divisible entries are folded back into the pivot row until the
/// divisibility chain holds.
inline SmithDecomposition smith_normal_form(const IntegerMatrix &a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntegerMatrix b = a;
  IntegerMatrix u = IntegerMatrix::identity(m);
  IntegerMatrix v = IntegerMatrix::identity(n);
  std::vector<BigInt> diag;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool found = false;
    for (;;) {
      // smallest |entry| in the trailing block
      std::size_t pi = 0, pj = 0;
      BigInt best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const BigInt &e = b(i, j);
          if (e == 0)
            continue;
          BigInt ae = abs(e);
          if (best == 0 || ae < best) {
            best = ae;
            pi = i;
            pj = j;
          }
        }
      if (best == 0)
        break;
      found = true;
      b.swap_rows(t, pi);
      u.swap_rows(t, pi);
      b.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool cleared = true;
      const BigInt pivot = b(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (b(i, t) == 0)
          continue;
        BigInt q = b(i, t) / pivot;
        if (q != 0) {
          b.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
        }
        if (b(i, t) != 0)
          cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (b(t, j) == 0)
          continue;
        BigInt q = b(t, j) / pivot;
        if (q != 0) {
          b.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
        }
        if (b(t, j) != 0)
          cleared = false;
      }
      if (!cleared)
        continue;

      // divisibility: pull an offending row into the pivot row and redo
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (b(i, j) % pivot != 0) {
            b.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible)
        break;
    }
    if (!found)
      break;
    if (b(t, t) < 0) {
      b.negate_row(t);
      u.negate_row(t);
    }
    diag.push_back(b(t, t));
  }
  return {std::move(u), std::move(diag), std::move(v)};
}

// ---------------------------------------------------------------------------
// Submodules of Z_D^n

/// Submodule of Z_D^n generated by the rows of a generator matrix.
///
/// The SNF of the integer-lifted generators G (U·G·V = Σ) is cached as
/// V mod D and the gcds g_i = gcd(d_i, D). Then
///   |E|         = Π_i D / g_i
///   x ∈ E       iff (x·V)_i ∈ g_i·Z_D for i < r and (x·V)_i = 0 otherwise
///   E⊥ = ker G  = { V·w : w_i ∈ (D/g_i)·Z_D for i < r }
class SubmoduleSpan {
public:
  explicit SubmoduleSpan(ZModMatrix generators)
      : generators_(std::move(generators)) {
    const Modulus d = generators_.modulus();
    const SmithDecomposition snf = smith_normal_form(generators_.lift());
    v_mod_ = ZModMatrix::reduce(snf.V, d);
    gcds_.reserve(snf.rank());
    cardinality_ = 1;
    for (const BigInt &di : snf.diag) {
      const std::int64_t g = std::gcd(detail::reduce(di, d), d);
      gcds_.push_back(g);
      cardinality_ *= d / g;
    }
  }

  /// Zero submodule of Z_D^n.
  static SubmoduleSpan zero(std::size_t n, Modulus d) {
    return SubmoduleSpan(ZModMatrix(0, n, d));
  }
  /// All of Z_D^n.
  static SubmoduleSpan full(std::size_t n, Modulus d) {
    return SubmoduleSpan(ZModMatrix::identity(n, d));
  }
  /// Span of the rows of a.
  static SubmoduleSpan row_span(const ZModMatrix &a) { return SubmoduleSpan(a); }
  /// Span of the columns of a.
  static SubmoduleSpan column_span(const ZModMatrix &a) {
    return SubmoduleSpan(a.transpose());
  }

  std::size_t ambient_dimension() const { return generators_.cols(); }
  Modulus modulus() const { return generators_.modulus(); }
  const ZModMatrix &generators() const { return generators_; }
  const BigInt &cardinality() const { return cardinality_; }

  bool contains(std::span<const std::int64_t> x) const {
    if (x.size() != ambient_dimension())
      throw DimensionMismatch("SubmoduleSpan::contains: vector length " +
                              std::to_string(x.size()) + " != ambient " +
                              std::to_string(ambient_dimension()));
    const Modulus d = modulus();
    const std::size_t n = ambient_dimension();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t yi = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (x[k] != 0)
          yi = detail::add_mod(yi, detail::mul_mod(detail::reduce(x[k], d),
                                                   v_mod_(k, i), d),
                               d);
      const std::int64_t g = i < gcds_.size() ? gcds_[i] : d;
      if (yi % g != 0)
        return false;
    }
    return true;
  }

  /// E⊥ = { x : x·y = 0 for all y in E }.
  SubmoduleSpan orthogonal_complement() const {
    const Modulus d = modulus();
    const std::size_t n = ambient_dimension();
    std::vector<ZVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t g = i < gcds_.size() ? gcds_[i] : d;
      if (g == 1)
        continue;
      const std::int64_t scale = d / g;
      ZVector col(n);
      for (std::size_t k = 0; k < n; ++k)
        col[k] = detail::mul_mod(scale, v_mod_(k, i), d);
      if (!is_zero_vector(col))
        rows.push_back(std::move(col));
    }
    return SubmoduleSpan(ZModMatrix::from_rows(n, d, rows));
  }

private:
  ZModMatrix generators_;
  ZModMatrix v_mod_;
  std::vector<std::int64_t> gcds_;
  BigInt cardinality_;
};

inline BigInt span_cardinality(const SubmoduleSpan &span) {
  return span.cardinality();
}

inline SubmoduleSpan orthogonal_complement(const SubmoduleSpan &span) {
  return span.orthogonal_complement();
}

inline bool contains(const SubmoduleSpan &span, std::span<const std::int64_t> x) {
  return span.contains(x);
}

/// |{ x in Z_D^n : A·x = 0 }| = D^(n-r) · Π_{i<r} gcd(d_i, D).
inline BigInt kernel_cardinality(const ZModMatrix &a) {
  const Modulus d = a.modulus();
  const SmithDecomposition snf = smith_normal_form(a.lift());
  BigInt count = big_pow(d, a.cols() - snf.rank());
  for (const BigInt &di : snf.diag)
    count *= std::gcd(detail::reduce(di, d), d);
  return count;
}

} // namespace qudit
