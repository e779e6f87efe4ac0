/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// \file oracle.hpp
/// Slow, explicit checks on the full D^n-dimensional Hilbert space and on
/// exhaustively enumerated submodules. Nothing here is used by the fast
/// paths; it exists to cross-check them.

#include "qudit/distance.hpp"
#include "qudit/pauli.hpp"
#include "qudit/zmod_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qudit {

using Complex = std::complex<double>;

inline constexpr std::size_t default_dense_cap = 4096;
inline constexpr std::uint64_t default_exhaustive_cap = 1'000'000;
inline constexpr double oracle_tolerance = 1e-9;

class OracleCapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// e^{2πik/D} for k = 0..D-1.
inline std::vector<Complex> roots_of_unity(Modulus d) {
  std::vector<Complex> w(static_cast<std::size_t>(d));
  for (Modulus k = 0; k < d; ++k)
    w[static_cast<std::size_t>(k)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                            static_cast<double>(d));
  return w;
}

/// Explicit operator on the full Hilbert space. Every entry is available;
/// storage is column-compressed because Pauli products and their sums have
/// few nonzeros per column. Entries below 1e-13 in magnitude are dropped.
class DenseOperator {
public:
  using Column = std::vector<std::pair<std::size_t, Complex>>;

  explicit DenseOperator(std::size_t dim = 0) : dim_(dim), cols_(dim) {}

  static DenseOperator identity(std::size_t dim) {
    DenseOperator m(dim);
    for (std::size_t j = 0; j < dim; ++j)
      m.cols_[j].push_back({j, 1.0});
    return m;
  }

  std::size_t dimension() const { return dim_; }
  const Column &column(std::size_t j) const { return cols_.at(j); }

  Complex operator()(std::size_t r, std::size_t c) const {
    const Column &col = cols_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto &e, std::size_t row) { return e.first < row; });
    return (it != col.end() && it->first == r) ? it->second : Complex{};
  }

  /// Replaces column j from a scratch accumulator (sorted, zeros dropped).
  void set_column(std::size_t j, Column entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    Column merged;
    for (const auto &[r, v] : entries) {
      if (!merged.empty() && merged.back().first == r)
        merged.back().second += v;
      else
        merged.push_back({r, v});
    }
    std::erase_if(merged, [](const auto &e) { return std::abs(e.second) < 1e-13; });
    cols_.at(j) = std::move(merged);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto &c : cols_)
      n += c.size();
    return n;
  }

  Complex trace() const {
    Complex t{};
    for (std::size_t j = 0; j < dim_; ++j)
      t += (*this)(j, j);
    return t;
  }

  DenseOperator adjoint() const {
    DenseOperator a(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto &[r, v] : cols_[j])
        a.cols_[r].push_back({j, std::conj(v)});
    return a; // columns filled in increasing j, hence sorted
  }

  DenseOperator scaled(Complex s) const {
    DenseOperator out(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      Column c = cols_[j];
      for (auto &e : c)
        e.second *= s;
      out.set_column(j, std::move(c));
    }
    return out;
  }

  friend DenseOperator operator*(const DenseOperator &a, const DenseOperator &b) {
    if (a.dim_ != b.dim_)
      throw DimensionMismatch("DenseOperator product: dimensions differ");
    DenseOperator out(a.dim_);
    std::vector<Complex> acc(a.dim_);
    std::vector<char> touched(a.dim_, 0);
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < b.dim_; ++j) {
      rows.clear();
      for (const auto &[k, bkj] : b.cols_[j])
        for (const auto &[i, aik] : a.cols_[k]) {
          if (!touched[i]) {
            touched[i] = 1;
            rows.push_back(i);
            acc[i] = 0;
          }
          acc[i] += aik * bkj;
        }
      Column col;
      col.reserve(rows.size());
      for (std::size_t i : rows) {
        col.push_back({i, acc[i]});
        touched[i] = 0;
      }
      out.set_column(j, std::move(col));
    }
    return out;
  }

  friend DenseOperator operator-(const DenseOperator &a, const DenseOperator &b) {
    if (a.dim_ != b.dim_)
      throw DimensionMismatch("DenseOperator difference: dimensions differ");
    DenseOperator out(a.dim_);
    for (std::size_t j = 0; j < a.dim_; ++j) {
      Column c = a.cols_[j];
      for (const auto &[r, v] : b.cols_[j])
        c.push_back({r, -v});
      out.set_column(j, std::move(c));
    }
    return out;
  }

  /// max_{i,j} |a_ij|
  double max_abs() const {
    double m = 0.0;
    for (const auto &c : cols_)
      for (const auto &e : c)
        m = std::max(m, std::abs(e.second));
    return m;
  }

  std::vector<std::vector<Complex>> to_rows() const {
    std::vector<std::vector<Complex>> m(dim_, std::vector<Complex>(dim_));
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto &[r, v] : cols_[j])
        m[r][j] = v;
    return m;
  }

private:
  std::size_t dim_;
  std::vector<Column> cols_;
};

inline double max_abs_difference(const DenseOperator &a, const DenseOperator &b) {
  return (a - b).max_abs();
}

namespace detail {

inline std::size_t hilbert_dimension(std::size_t n, Modulus d, std::size_t cap) {
  const BigInt dim = big_pow(d, n);
  if (dim > cap)
    throw OracleCapExceeded("Hilbert space dimension " + dim.str() +
                            " exceeds the oracle cap " + std::to_string(cap));
  return static_cast<std::size_t>(dim);
}

/// Base-D digits of index, qudit 0 most significant.
inline void decode_basis(std::size_t index, Modulus d, std::span<std::int64_t> digits) {
  for (std::size_t q = digits.size(); q-- > 0;) {
    digits[q] = static_cast<std::int64_t>(index % static_cast<std::size_t>(d));
    index /= static_cast<std::size_t>(d);
  }
}

inline std::size_t encode_basis(std::span<const std::int64_t> digits, Modulus d) {
  std::size_t index = 0;
  for (std::int64_t v : digits)
    index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
  return index;
}

/// Σ_k weight_k · P_k as an explicit operator.
inline DenseOperator dense_sum(std::span<const PauliProduct> terms, Complex weight,
                               std::size_t n, Modulus d, std::size_t cap) {
  const std::size_t dim = hilbert_dimension(n, d, cap);
  const auto omega = roots_of_unity(d);
  DenseOperator out(dim);
  ZVector digits(n), shifted(n);
  DenseOperator::Column col;
  for (std::size_t j = 0; j < dim; ++j) {
    decode_basis(j, d, digits);
    col.clear();
    for (const auto &p : terms) {
      // X^x Z^z |j> = ω^{z·j} |j + x>
      std::int64_t exponent = p.phase();
      for (std::size_t q = 0; q < n; ++q) {
        exponent = (exponent + p.z()[q] * digits[q]) % d;
        shifted[q] = (digits[q] + p.x()[q]) % d;
      }
      col.push_back({encode_basis(shifted, d),
                     weight * omega[static_cast<std::size_t>(exponent)]});
    }
    out.set_column(j, std::move(col));
    col = {};
  }
  return out;
}

} // namespace detail

/// ω^λ ⊗_q X^{x_q} Z^{z_q} with X|j> = |j+1>, Z|j> = ω^j |j>, qudit 1 the
/// slowest-varying tensor index.
inline DenseOperator dense_pauli(const PauliProduct &p, std::size_t cap = default_dense_cap) {
  return detail::dense_sum(std::span<const PauliProduct>(&p, 1), 1.0, p.qudits(),
                           p.modulus(), cap);
}

/// (1/|S|) Σ_{s in S} s over the enumerated group generated by generators.
inline DenseOperator dense_projector(std::span<const PauliProduct> generators,
                                     std::size_t n, Modulus d,
                                     std::size_t cap = default_dense_cap) {
  detail::hilbert_dimension(n, d, cap);
  const GroupEnumeration group = enumerate_group(generators, n, d);
  return detail::dense_sum(group.elements, 1.0 / static_cast<double>(group.size), n, d,
                           cap);
}

inline DenseOperator dense_projector(const StabilizerSpec &spec,
                                     std::size_t cap = default_dense_cap) {
  const auto gens = spec.generators();
  return dense_projector(gens, spec.qudits(), spec.modulus(), cap);
}

struct ProjectorCheck {
  Complex trace;
  double idempotence_residual = 0; ///< max |P² - P|
  double hermiticity_residual = 0; ///< max |P† - P|
  double integrality_residual = 0; ///< |Tr P - round(Re Tr P)|

  bool is_projector() const {
    return idempotence_residual < oracle_tolerance &&
           hermiticity_residual < oracle_tolerance &&
           integrality_residual < oracle_tolerance;
  }
};

inline ProjectorCheck check_projector(const DenseOperator &p) {
  ProjectorCheck c;
  c.trace = p.trace();
  c.idempotence_residual = max_abs_difference(p * p, p);
  c.hermiticity_residual = max_abs_difference(p.adjoint(), p);
  c.integrality_residual = std::abs(c.trace - Complex(std::round(c.trace.real()), 0.0));
  return c;
}

struct Theorem1Check {
  ProjectorCheck projector;
  std::size_t group_size = 0;
  bool zero_code_space = false; ///< the group contains a nontrivial scalar
  BigInt expected_dimension;    ///< 0 when zero_code_space
  long long observed_dimension = 0;

  bool passed() const {
    return projector.is_projector() && BigInt(observed_dimension) == expected_dimension;
  }
};

namespace detail {
inline Theorem1Check theorem1_from(std::span<const PauliProduct> generators,
                                   std::size_t n, Modulus d, std::size_t cap,
                                   const BigInt *expected) {
  detail::hilbert_dimension(n, d, cap);
  const GroupEnumeration group = enumerate_group(generators, n, d);
  Theorem1Check out;
  out.group_size = group.size;
  out.zero_code_space = group.scalar_violation.has_value();
  const DenseOperator p = dense_sum(group.elements,
                                    1.0 / static_cast<double>(group.size), n, d, cap);
  out.projector = check_projector(p);
  out.observed_dimension = std::llround(out.projector.trace.real());
  if (out.zero_code_space)
    out.expected_dimension = 0;
  else if (expected)
    out.expected_dimension = *expected;
  else
    out.expected_dimension = big_pow(d, n) / group.size;
  return out;
}
} // namespace detail

/// Tr P against K from the span route (code_dimension).
inline Theorem1Check verify_theorem1(const StabilizerSpec &spec,
                                     std::size_t cap = default_dense_cap) {
  const auto gens = spec.generators();
  if (noncommuting_pair(spec))
    return detail::theorem1_from(gens, spec.qudits(), spec.modulus(), cap, nullptr);
  const BigInt k = code_dimension(spec);
  return detail::theorem1_from(gens, spec.qudits(), spec.modulus(), cap, &k);
}

/// Arbitrary generators; K is taken as D^n / |S| unless a scalar shows up.
inline Theorem1Check verify_theorem1(std::span<const PauliProduct> generators,
                                     std::size_t n, Modulus d,
                                     std::size_t cap = default_dense_cap) {
  return detail::theorem1_from(generators, n, d, cap, nullptr);
}

struct LogicalActionCheck {
  Complex best_scalar;             ///< Tr(PRP) / Tr(P)
  double distance_from_scalar = 0; ///< max |PRP - c·P|

  bool acts_nontrivially() const { return distance_from_scalar > oracle_tolerance; }
};

/// Whether R restricted to the code space differs from every c·I. With P
/// the code projector, the compression PRP equals c·P exactly when R acts
/// as c on range(P); the best c is Tr(PRP)/Tr(P).
inline LogicalActionCheck verify_logical_action(const PauliProduct &r,
                                                const StabilizerSpec &spec,
                                                std::size_t cap = default_dense_cap) {
  if (!is_logical(r, spec))
    throw std::invalid_argument("verify_logical_action: operator is not logical");
  const DenseOperator p = dense_projector(spec, cap);
  const DenseOperator compressed = p * dense_pauli(r, cap) * p;
  LogicalActionCheck out;
  out.best_scalar = compressed.trace() / p.trace();
  out.distance_from_scalar = max_abs_difference(compressed, p.scaled(out.best_scalar));
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive submodule counting

struct AppendixBCheck {
  BigInt span_exhaustive;
  BigInt span_snf;
  BigInt perp_exhaustive;
  BigInt perp_snf;
  BigInt ambient; ///< D^n
  double character_residual = 0;

  bool passed() const {
    return span_exhaustive == span_snf && perp_exhaustive == perp_snf &&
           span_exhaustive * perp_exhaustive == ambient &&
           character_residual < oracle_tolerance;
  }
};

/// Enumerates Z_D^n: closes the generators under addition, counts E⊥
/// directly, and checks Σ_{x in E} ω^{η·x} = |E|·[η in E⊥] for every η.
inline AppendixBCheck verify_appendix_b(const SubmoduleSpan &span,
                                        std::uint64_t cap = default_exhaustive_cap) {
  const Modulus d = span.modulus();
  const std::size_t n = span.ambient_dimension();
  const BigInt ambient = big_pow(d, n);
  if (ambient > cap)
    throw OracleCapExceeded("Z_D^n has " + ambient.str() +
                            " elements, above the exhaustive cap");
  const std::size_t total = static_cast<std::size_t>(ambient);
  const auto gens = span.generators().row_list();

  std::vector<char> in_span(total, 0);
  std::vector<std::size_t> members{0};
  in_span[0] = 1;
  ZVector digits(n), sum(n);
  for (std::size_t head = 0; head < members.size(); ++head) {
    detail::decode_basis(members[head], d, digits);
    for (const auto &g : gens) {
      for (std::size_t q = 0; q < n; ++q)
        sum[q] = (digits[q] + g[q]) % d;
      const std::size_t idx = detail::encode_basis(sum, d);
      if (!in_span[idx]) {
        in_span[idx] = 1;
        members.push_back(idx);
      }
    }
  }
  if (static_cast<double>(members.size()) * static_cast<double>(total) > 1e9)
    throw OracleCapExceeded("character sum over E x Z_D^n is too large");

  std::vector<ZVector> elements;
  elements.reserve(members.size());
  for (std::size_t idx : members) {
    detail::decode_basis(idx, d, digits);
    elements.push_back(digits);
  }

  const auto omega = roots_of_unity(d);
  AppendixBCheck out;
  out.ambient = ambient;
  out.span_exhaustive = members.size();
  out.span_snf = span.cardinality();
  out.perp_snf = span.orthogonal_complement().cardinality();
  std::size_t perp = 0;
  ZVector eta(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    detail::decode_basis(idx, d, eta);
    const bool orthogonal = std::all_of(gens.begin(), gens.end(), [&](const ZVector &g) {
      return dot(eta, g, d) == 0;
    });
    if (orthogonal)
      ++perp;
    Complex s{};
    for (const auto &x : elements)
      s += omega[static_cast<std::size_t>(dot(eta, x, d))];
    const double expected = orthogonal ? static_cast<double>(members.size()) : 0.0;
    out.character_residual = std::max(out.character_residual, std::abs(s - expected));
  }
  out.perp_exhaustive = perp;
  return out;
}

} // namespace qudit
