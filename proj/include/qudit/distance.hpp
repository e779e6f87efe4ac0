/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// \file distance.hpp
/// Code distance by the symplectic W-set route and by the shortest
/// nontrivial cycle/cocycle route.
///
/// Both routes scan Z_D^n in weight shells: supports of size w in
/// lexicographic order, nonzero values in odometer order (last position
/// fastest). For every candidate the X side is tested before the Z side, so
/// the first hit is the deterministic witness.

#include "qudit/complex2.hpp"
#include "qudit/pauli.hpp"
#include "qudit/zmod_linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qudit {

inline constexpr std::uint64_t default_distance_budget = 50'000'000;

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two computations that are proven to agree did not.
class TheoremViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// X: the witness a gives the logical X^a (a in r(B)⊥ \ r(A), a nontrivial
/// cocycle). Z: Z^a (a in r(A)⊥ \ r(B), a nontrivial cycle).
enum class LogicalSide { X, Z };
enum class DistanceRoute { Symplectic, Homological };

inline const char *to_string(LogicalSide s) { return s == LogicalSide::X ? "X" : "Z"; }
inline const char *to_string(DistanceRoute r) {
  return r == DistanceRoute::Symplectic ? "symplectic" : "homological";
}

struct DistanceReport {
  /// nullopt: N(S) \ ⟨ωI⟩S is empty (no logical operators).
  std::optional<std::size_t> distance;
  ZVector witness;
  LogicalSide side = LogicalSide::X;
  DistanceRoute route = DistanceRoute::Symplectic;
  std::uint64_t examined = 0;

  bool no_logicals() const { return !distance.has_value(); }

  /// X^a or Z^a for the witness a.
  PauliProduct witness_operator(Modulus d) const {
    return side == LogicalSide::X ? PauliProduct::x_type(witness, d)
                                  : PauliProduct::z_type(witness, d);
  }
};

/// Visits every vector of weight w in shell order until visit returns true.
/// Returns true if stopped early.
inline bool for_each_in_shell(std::size_t n, Modulus d, std::size_t w,
                              const std::function<bool(const ZVector &)> &visit) {
  if (w > n)
    return false;
  std::vector<std::size_t> support(w);
  for (std::size_t i = 0; i < w; ++i)
    support[i] = i;
  ZVector v(n, 0);
  for (;;) {
    std::vector<std::int64_t> values(w, 1);
    for (;;) {
      for (std::size_t i = 0; i < w; ++i)
        v[support[i]] = values[i];
      if (visit(v))
        return true;
      // odometer over (Z_D \ {0})^w
      std::size_t pos = w;
      while (pos > 0 && values[pos - 1] == d - 1) {
        values[pos - 1] = 1;
        --pos;
      }
      if (pos == 0)
        break;
      ++values[pos - 1];
    }
    for (std::size_t i = 0; i < w; ++i)
      v[support[i]] = 0;
    // next w-subset in lexicographic order
    std::size_t i = w;
    while (i > 0 && support[i - 1] == n - w + i - 1)
      --i;
    if (i == 0)
      return false;
    ++support[i - 1];
    for (std::size_t j = i; j < w; ++j)
      support[j] = support[j - 1] + 1;
  }
}

namespace detail {

inline DistanceReport weight_shell_search(
    std::size_t n, Modulus d, std::uint64_t budget, DistanceRoute route,
    const std::function<bool(const ZVector &)> &x_side,
    const std::function<bool(const ZVector &)> &z_side) {
  DistanceReport report;
  report.route = route;
  for (std::size_t w = 1; w <= n; ++w) {
    const bool hit = for_each_in_shell(n, d, w, [&](const ZVector &a) {
      if (++report.examined > budget)
        throw BudgetExceeded("distance search: examined more than " +
                             std::to_string(budget) + " candidates");
      if (x_side(a)) {
        report.side = LogicalSide::X;
      } else if (z_side(a)) {
        report.side = LogicalSide::Z;
      } else {
        return false;
      }
      report.distance = w;
      report.witness = a;
      return true;
    });
    if (hit)
      return report;
  }
  return report;
}

} // namespace detail

/// Zero syndrome against every generator.
inline bool is_in_normalizer_by_syndrome(const PauliProduct &p,
                                         const StabilizerSpec &spec) {
  return is_zero_vector(syndrome(p, spec));
}

/// x in r(B)⊥ and z in r(A)⊥.
inline bool is_in_normalizer_by_submodules(const PauliProduct &p,
                                           const StabilizerSpec &spec) {
  if (p.modulus() != spec.modulus() || p.qudits() != spec.qudits())
    throw DimensionMismatch("normalizer test: operator does not match the stabilizer");
  return spec.face_span().orthogonal_complement().contains(p.x()) &&
         spec.vertex_span().orthogonal_complement().contains(p.z());
}

/// N(S) = C(S) membership. Both characterizations are computed and must agree.
inline bool is_in_normalizer(const PauliProduct &p, const StabilizerSpec &spec) {
  const bool by_syndrome = is_in_normalizer_by_syndrome(p, spec);
  if (by_syndrome != is_in_normalizer_by_submodules(p, spec))
    throw TheoremViolation("normalizer: syndrome and submodule tests disagree");
  return by_syndrome;
}

/// In N(S) but not in ⟨ωI⟩S (x in r(A) and z in r(B)).
inline bool is_logical(const PauliProduct &p, const StabilizerSpec &spec) {
  if (!is_in_normalizer(p, spec))
    return false;
  return !(spec.vertex_span().contains(p.x()) && spec.face_span().contains(p.z()));
}

/// min weight over W = (r(B)⊥ \ r(A)) ∪ (r(A)⊥ \ r(B)).
inline DistanceReport distance_css(const StabilizerSpec &spec,
                                   std::uint64_t budget = default_distance_budget) {
  const SubmoduleSpan faces = spec.face_span();
  const SubmoduleSpan vertices = spec.vertex_span();
  const SubmoduleSpan faces_perp = faces.orthogonal_complement();
  const SubmoduleSpan vertices_perp = vertices.orthogonal_complement();
  return detail::weight_shell_search(
      spec.qudits(), spec.modulus(), budget, DistanceRoute::Symplectic,
      [&](const ZVector &a) { return faces_perp.contains(a) && !vertices.contains(a); },
      [&](const ZVector &a) { return vertices_perp.contains(a) && !faces.contains(a); });
}

/// min length over nontrivial cycles (ker ∂₁ \ im ∂₂) and nontrivial
/// cocycles (ker δ₂ \ im δ₁).
inline DistanceReport distance_homological(const ChainComplexData &chain,
                                           std::uint64_t budget = default_distance_budget) {
  const ZModMatrix &d1 = chain.boundary1();
  const ZModMatrix delta2 = chain.coboundary2();
  const SubmoduleSpan boundaries = SubmoduleSpan::column_span(chain.boundary2());
  const SubmoduleSpan coboundaries = SubmoduleSpan::column_span(chain.coboundary1());
  return detail::weight_shell_search(
      chain.edge_count(), chain.modulus(), budget, DistanceRoute::Homological,
      [&](const ZVector &a) {
        return is_zero_vector(delta2.apply(a)) && !coboundaries.contains(a);
      },
      [&](const ZVector &a) {
        return is_zero_vector(d1.apply(a)) && !boundaries.contains(a);
      });
}

inline DistanceReport distance_homological(const TwoComplex &c, Modulus d,
                                           std::uint64_t budget = default_distance_budget) {
  return distance_homological(chain_complex(c, d), budget);
}

} // namespace qudit
