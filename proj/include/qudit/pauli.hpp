/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// \file pauli.hpp
/// Symplectic qudit Pauli arithmetic and the CSS stabilizer of a 2-complex.
///
/// A PauliProduct (λ, x, z) stands for ω^λ X^x Z^z with X before Z on every
/// qudit. Moving Z^{z_P} past X^{x_Q} costs ω^{z_P·x_Q}, which fixes the
/// multiplication rule.

#include "qudit/complex2.hpp"
#include "qudit/zmod_linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace qudit {

class PauliProduct {
public:
  PauliProduct(Modulus d, std::int64_t phase, ZVector x, ZVector z)
      : modulus_(d), phase_(0), x_(std::move(x)), z_(std::move(z)) {
    detail::require_modulus(d);
    if (x_.size() != z_.size())
      throw DimensionMismatch("PauliProduct: x and z lengths differ");
    phase_ = detail::reduce(phase, d);
    for (auto &e : x_)
      e = detail::reduce(e, d);
    for (auto &e : z_)
      e = detail::reduce(e, d);
  }

  static PauliProduct identity(std::size_t n, Modulus d) {
    return {d, 0, ZVector(n, 0), ZVector(n, 0)};
  }
  static PauliProduct x_type(ZVector x, Modulus d) {
    ZVector z(x.size(), 0);
    return {d, 0, std::move(x), std::move(z)};
  }
  static PauliProduct z_type(ZVector z, Modulus d) {
    ZVector x(z.size(), 0);
    return {d, 0, std::move(x), std::move(z)};
  }

  Modulus modulus() const { return modulus_; }
  std::size_t qudits() const { return x_.size(); }
  std::int64_t phase() const { return phase_; }
  const ZVector &x() const { return x_; }
  const ZVector &z() const { return z_; }

  bool is_identity() const {
    return phase_ == 0 && is_zero_vector(x_) && is_zero_vector(z_);
  }
  /// x = z = 0, any phase.
  bool is_scalar() const { return is_zero_vector(x_) && is_zero_vector(z_); }

  friend bool operator==(const PauliProduct &, const PauliProduct &) = default;

private:
  Modulus modulus_;
  std::int64_t phase_;
  ZVector x_;
  ZVector z_;
};

namespace detail {
inline void require_compatible(const PauliProduct &p, const PauliProduct &q) {
  if (p.modulus() != q.modulus())
    throw DimensionMismatch("Pauli products over different moduli");
  if (p.qudits() != q.qudits())
    throw DimensionMismatch("Pauli products on different qudit counts: " +
                            std::to_string(p.qudits()) + " vs " +
                            std::to_string(q.qudits()));
}
} // namespace detail

/// (λ_P + λ_Q + z_P·x_Q, x_P + x_Q, z_P + z_Q).
inline PauliProduct multiply(const PauliProduct &p, const PauliProduct &q) {
  detail::require_compatible(p, q);
  const Modulus d = p.modulus();
  ZVector x(p.qudits()), z(p.qudits());
  for (std::size_t i = 0; i < p.qudits(); ++i) {
    x[i] = p.x()[i] + q.x()[i];
    z[i] = p.z()[i] + q.z()[i];
  }
  return {d, p.phase() + q.phase() + dot(p.z(), q.x(), d), std::move(x), std::move(z)};
}

inline PauliProduct operator*(const PauliProduct &p, const PauliProduct &q) {
  return multiply(p, q);
}

inline PauliProduct inverse(const PauliProduct &p) {
  const Modulus d = p.modulus();
  ZVector x(p.qudits()), z(p.qudits());
  for (std::size_t i = 0; i < p.qudits(); ++i) {
    x[i] = -p.x()[i];
    z[i] = -p.z()[i];
  }
  return {d, -p.phase() + dot(p.x(), p.z(), d), std::move(x), std::move(z)};
}

inline PauliProduct power(const PauliProduct &p, std::size_t k) {
  PauliProduct r = PauliProduct::identity(p.qudits(), p.modulus());
  for (std::size_t i = 0; i < k; ++i)
    r = r * p;
  return r;
}

/// β with P·Q = ω^β Q·P, i.e. z_P·x_Q - x_P·z_Q mod D.
inline std::int64_t commutation_phase(const PauliProduct &p, const PauliProduct &q) {
  detail::require_compatible(p, q);
  const Modulus d = p.modulus();
  return detail::reduce(dot(p.z(), q.x(), d) - dot(p.x(), q.z(), d), d);
}

/// Number of qudits where x_i != 0 or z_i != 0.
inline std::size_t weight(const PauliProduct &p) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < p.qudits(); ++i)
    if (p.x()[i] != 0 || p.z()[i] != 0)
      ++w;
  return w;
}

struct PauliProductHash {
  std::size_t operator()(const PauliProduct &p) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(p.phase());
    auto mix = [&h](std::int64_t v) {
      h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (auto v : p.x())
      mix(v);
    for (auto v : p.z())
      mix(v);
    return h;
  }
};

// ---------------------------------------------------------------------------
// Stabilizer of a 2-complex

/// CSS stabilizer data: face generators are the z-rows r(B), vertex
/// generators the x-rows r(A).
class StabilizerSpec {
public:
  StabilizerSpec(ZModMatrix face_rows, ZModMatrix vertex_rows)
      : face_rows_(std::move(face_rows)), vertex_rows_(std::move(vertex_rows)) {
    if (face_rows_.modulus() != vertex_rows_.modulus())
      throw DimensionMismatch("StabilizerSpec: moduli differ");
    if (face_rows_.cols() != vertex_rows_.cols())
      throw DimensionMismatch("StabilizerSpec: qudit counts differ");
  }

  Modulus modulus() const { return face_rows_.modulus(); }
  std::size_t qudits() const { return face_rows_.cols(); }
  std::size_t face_count() const { return face_rows_.rows(); }
  std::size_t vertex_count() const { return vertex_rows_.rows(); }
  const ZModMatrix &face_rows() const { return face_rows_; }
  const ZModMatrix &vertex_rows() const { return vertex_rows_; }

  PauliProduct face_generator(std::size_t f) const {
    return PauliProduct::z_type(face_rows_.row(f), modulus());
  }
  PauliProduct vertex_generator(std::size_t v) const {
    return PauliProduct::x_type(vertex_rows_.row(v), modulus());
  }
  /// Faces in input order, then vertices in input order.
  std::vector<PauliProduct> generators() const {
    std::vector<PauliProduct> g;
    g.reserve(face_count() + vertex_count());
    for (std::size_t f = 0; f < face_count(); ++f)
      g.push_back(face_generator(f));
    for (std::size_t v = 0; v < vertex_count(); ++v)
      g.push_back(vertex_generator(v));
    return g;
  }

  SubmoduleSpan face_span() const { return SubmoduleSpan::row_span(face_rows_); }
  SubmoduleSpan vertex_span() const { return SubmoduleSpan::row_span(vertex_rows_); }

private:
  ZModMatrix face_rows_;
  ZModMatrix vertex_rows_;
};

/// r(B) = columns of ∂₂, r(A) = rows of ∂₁ (= columns of δ₁).
inline StabilizerSpec stabilizer_spec(const ChainComplexData &chain) {
  return {chain.boundary2().transpose(), chain.boundary1()};
}

/// B_f: Z-type with z = column f of ∂₂.
inline PauliProduct face_operator(const ChainComplexData &chain, std::size_t f) {
  if (f >= chain.face_count())
    throw std::out_of_range("face_operator: face index out of range");
  return PauliProduct::z_type(chain.boundary2().column(f), chain.modulus());
}

/// A_v: X-type with x = row v of ∂₁. Self-loops contribute nothing.
inline PauliProduct vertex_operator(const ChainComplexData &chain, std::size_t v) {
  if (v >= chain.vertex_count())
    throw std::out_of_range("vertex_operator: vertex index out of range");
  return PauliProduct::x_type(chain.boundary1().row(v), chain.modulus());
}

// ---------------------------------------------------------------------------
// Group enumeration and code dimension

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

class EnumerationCapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ScalarViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GroupEnumeration {
  std::size_t size = 0;
  std::optional<PauliProduct> scalar_violation;
  std::vector<PauliProduct> elements; ///< discovery order
};

/// Breadth-first closure of the generators under multiplication.
inline GroupEnumeration enumerate_group(std::span<const PauliProduct> generators,
                                        std::size_t n, Modulus d,
                                        std::size_t cap = default_enumeration_cap) {
  for (const auto &g : generators)
    if (g.modulus() != d || g.qudits() != n)
      throw DimensionMismatch("enumerate_group: generator shape mismatch");
  GroupEnumeration out;
  std::unordered_set<PauliProduct, PauliProductHash> seen;
  std::deque<std::size_t> queue;
  auto visit = [&](PauliProduct p) {
    if (!seen.insert(p).second)
      return;
    if (seen.size() > cap)
      throw EnumerationCapExceeded("enumerate_group: more than " +
                                   std::to_string(cap) + " elements");
    if (!out.scalar_violation && p.is_scalar() && p.phase() != 0)
      out.scalar_violation = p;
    out.elements.push_back(std::move(p));
    queue.push_back(out.elements.size() - 1);
  };
  visit(PauliProduct::identity(n, d));
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    for (const auto &g : generators)
      visit(out.elements[idx] * g);
  }
  out.size = out.elements.size();
  return out;
}

/// Enumerates ⟨B_f, A_v⟩. Refuses up front when |r(A)|·|r(B)| exceeds the cap.
inline GroupEnumeration enumerate_group(const StabilizerSpec &spec,
                                        std::size_t cap = default_enumeration_cap) {
  const BigInt predicted =
      spec.face_span().cardinality() * spec.vertex_span().cardinality();
  if (predicted > cap)
    throw EnumerationCapExceeded("enumerate_group: predicted size " +
                                 predicted.str() + " exceeds cap " +
                                 std::to_string(cap));
  const auto gens = spec.generators();
  return enumerate_group(gens, spec.qudits(), spec.modulus(), cap);
}

/// First (face, vertex) pair with nonzero r(B)·r(A) pairing, if any. Such a
/// pair puts a nontrivial scalar into the group.
inline std::optional<std::pair<std::size_t, std::size_t>>
noncommuting_pair(const StabilizerSpec &spec) {
  for (std::size_t f = 0; f < spec.face_count(); ++f) {
    const ZVector zf = spec.face_rows().row(f);
    for (std::size_t v = 0; v < spec.vertex_count(); ++v)
      if (dot(zf, spec.vertex_rows().row(v), spec.modulus()) != 0)
        return std::pair{f, v};
  }
  return std::nullopt;
}

/// |S| = |r(A)|·|r(B)| for a scalar-free CSS stabilizer.
inline BigInt stabilizer_size(const StabilizerSpec &spec) {
  if (auto bad = noncommuting_pair(spec))
    throw ScalarViolation("face " + std::to_string(bad->first) + " and vertex " +
                          std::to_string(bad->second) +
                          " generators do not commute; the group contains a "
                          "nontrivial scalar and the code space is {0}");
  return spec.face_span().cardinality() * spec.vertex_span().cardinality();
}

/// K = D^n / |S|. Throws ScalarViolation when the code space is {0}.
inline BigInt code_dimension(const StabilizerSpec &spec) {
  const BigInt total = big_pow(spec.modulus(), spec.qudits());
  const BigInt s = stabilizer_size(spec);
  if (total % s != 0)
    throw std::logic_error("code_dimension: |S| does not divide D^n");
  return total / s;
}

/// β_l with E·s_l = ω^β_l s_l·E; faces first, then vertices.
inline ZVector syndrome(const PauliProduct &e, const StabilizerSpec &spec) {
  if (e.modulus() != spec.modulus() || e.qudits() != spec.qudits())
    throw DimensionMismatch("syndrome: error does not match the stabilizer shape");
  ZVector out;
  out.reserve(spec.face_count() + spec.vertex_count());
  for (const auto &g : spec.generators())
    out.push_back(commutation_phase(e, g));
  return out;
}

} // namespace qudit
