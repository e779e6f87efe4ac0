/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// \file hypermap.hpp
/// Combinatorial hypermaps (α, σ), their chain maps, and the equivalent
/// 2-complex.
///
/// Darts are 0-based internally and 1-based in every external format.
/// Hyperedges are orbits of α, hypervertices orbits of σ, and faces orbits
/// of φ(i) = σ(α⁻¹(i)), i.e. α⁻¹ applied first.

#include "qudit/complex2.hpp"
#include "qudit/pauli.hpp"
#include "qudit/zmod_linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qudit {

class InvalidPermutation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Bijection of {0..n-1}.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> hit(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] >= image_.size() || hit[image_[i]])
        throw InvalidPermutation("not a permutation of {1.." +
                                 std::to_string(image_.size()) + "}");
      hit[image_[i]] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = i;
    return Permutation(std::move(img));
  }

  /// Disjoint cycles of 1-based darts; omitted darts are fixed points.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<std::size_t>> &cycles) {
    std::vector<std::size_t> img(n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = i;
    for (const auto &cyc : cycles) {
      for (std::size_t dart : cyc) {
        if (dart < 1 || dart > n)
          throw InvalidPermutation("dart " + std::to_string(dart) +
                                   " outside {1.." + std::to_string(n) + "}");
        if (used[dart - 1])
          throw InvalidPermutation("dart " + std::to_string(dart) +
                                   " appears more than once in the cycles");
        used[dart - 1] = true;
      }
      for (std::size_t k = 0; k < cyc.size(); ++k)
        img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
    }
    return Permutation(std::move(img));
  }

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_.at(i); }

  Permutation inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
      inv[image_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// i -> second(first(i)).
  static Permutation then(const Permutation &first, const Permutation &second) {
    if (first.size() != second.size())
      throw InvalidPermutation("composing permutations of different sizes");
    std::vector<std::size_t> img(first.size());
    for (std::size_t i = 0; i < first.size(); ++i)
      img[i] = second(first(i));
    return Permutation(std::move(img));
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  std::vector<std::size_t> image_;
};

/// Cycles of perm, each listed in traversal order from its smallest element;
/// cycles are ordered by that smallest element.
inline std::vector<std::vector<std::size_t>> orbits(const Permutation &perm) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i])
      continue;
    std::vector<std::size_t> cyc;
    for (std::size_t j = i; !seen[j]; j = perm(j)) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

struct Hypermap {
  Permutation alpha;
  Permutation sigma;

  Hypermap(Permutation a, Permutation s) : alpha(std::move(a)), sigma(std::move(s)) {
    if (alpha.size() != sigma.size())
      throw InvalidPermutation("hypermap: alpha and sigma act on different dart sets");
  }

  std::size_t darts() const { return alpha.size(); }
  /// φ = σ∘α⁻¹, the face permutation.
  Permutation face_permutation() const { return Permutation::then(alpha.inverse(), sigma); }
};

struct OrbitStructure {
  std::vector<std::vector<std::size_t>> hyperedges;
  std::vector<std::vector<std::size_t>> hypervertices;
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::size_t> edge_of;
  std::vector<std::size_t> vertex_of;
  std::vector<std::size_t> face_of;

  explicit OrbitStructure(const Hypermap &h)
      : hyperedges(orbits(h.alpha)), hypervertices(orbits(h.sigma)),
        faces(orbits(h.face_permutation())), edge_of(h.darts()),
        vertex_of(h.darts()), face_of(h.darts()) {
    auto fill = [](const auto &parts, std::vector<std::size_t> &lookup) {
      for (std::size_t k = 0; k < parts.size(); ++k)
        for (std::size_t dart : parts[k])
          lookup[dart] = k;
    };
    fill(hyperedges, edge_of);
    fill(hypervertices, vertex_of);
    fill(faces, face_of);
  }
};

// ---------------------------------------------------------------------------
// Chain maps on the dart module W

/// d₂ : F -> W, d₂(f) = Σ_{i in f} i. Darts x faces.
inline ZModMatrix d2_matrix(const Hypermap &h, Modulus d) {
  const OrbitStructure o(h);
  ZModMatrix m(h.darts(), o.faces.size(), d);
  for (std::size_t i = 0; i < h.darts(); ++i)
    m.accumulate(i, o.face_of[i], 1);
  return m;
}

/// d₁ : W -> V, d₁(i) = v∋α⁻¹(i) - v∋i. Hypervertices x darts.
inline ZModMatrix d1_matrix(const Hypermap &h, Modulus d) {
  const OrbitStructure o(h);
  const Permutation alpha_inv = h.alpha.inverse();
  ZModMatrix m(o.hypervertices.size(), h.darts(), d);
  for (std::size_t i = 0; i < h.darts(); ++i) {
    m.accumulate(o.vertex_of[alpha_inv(i)], i, 1);
    m.accumulate(o.vertex_of[i], i, -1);
  }
  return m;
}

/// ι : E -> W, ι(e) = Σ_{i in e} i. Darts x hyperedges.
inline ZModMatrix iota_matrix(const Hypermap &h, Modulus d) {
  const OrbitStructure o(h);
  ZModMatrix m(h.darts(), o.hyperedges.size(), d);
  for (std::size_t i = 0; i < h.darts(); ++i)
    m.accumulate(i, o.edge_of[i], 1);
  return m;
}

// ---------------------------------------------------------------------------
// Special darts and the quotient W / ι(E)

/// One chosen dart per hyperedge, indexed like OrbitStructure::hyperedges.
class SpecialDarts {
public:
  SpecialDarts(const Hypermap &h, std::vector<std::size_t> per_edge)
      : per_edge_(std::move(per_edge)), is_special_(h.darts(), false) {
    const OrbitStructure o(h);
    if (per_edge_.size() != o.hyperedges.size())
      throw std::invalid_argument("special darts: need exactly one per hyperedge (" +
                                  std::to_string(o.hyperedges.size()) + ")");
    for (std::size_t e = 0; e < per_edge_.size(); ++e) {
      const std::size_t s = per_edge_[e];
      if (s >= h.darts() || o.edge_of[s] != e)
        throw std::invalid_argument("special darts: dart " + std::to_string(s + 1) +
                                    " is not in hyperedge " + std::to_string(e + 1));
      is_special_[s] = true;
    }
    for (std::size_t i = 0; i < h.darts(); ++i)
      if (!is_special_[i])
        basis_.push_back(i);
  }

  /// Any set of darts with one per hyperedge, in any order.
  static SpecialDarts from_set(const Hypermap &h, const std::vector<std::size_t> &darts) {
    const OrbitStructure o(h);
    std::vector<std::size_t> per_edge(o.hyperedges.size(), no_index);
    for (std::size_t s : darts) {
      if (s >= h.darts())
        throw std::invalid_argument("special darts: dart " + std::to_string(s + 1) +
                                    " out of range");
      if (per_edge[o.edge_of[s]] != no_index)
        throw std::invalid_argument("special darts: two darts chosen in hyperedge " +
                                    std::to_string(o.edge_of[s] + 1));
      per_edge[o.edge_of[s]] = s;
    }
    for (std::size_t e = 0; e < per_edge.size(); ++e)
      if (per_edge[e] == no_index)
        throw std::invalid_argument("special darts: no dart chosen in hyperedge " +
                                    std::to_string(e + 1) + " (containing dart " +
                                    std::to_string(o.hyperedges[e].front() + 1) + ")");
    return SpecialDarts(h, std::move(per_edge));
  }

  /// Smallest dart of each hyperedge.
  static SpecialDarts smallest(const Hypermap &h) {
    const OrbitStructure o(h);
    std::vector<std::size_t> per_edge;
    for (const auto &e : o.hyperedges)
      per_edge.push_back(*std::min_element(e.begin(), e.end()));
    return SpecialDarts(h, std::move(per_edge));
  }

  const std::vector<std::size_t> &per_edge() const { return per_edge_; }
  bool is_special(std::size_t dart) const { return is_special_.at(dart); }
  /// Non-special darts, increasing. The basis {[i]} of W / ι(E).
  const std::vector<std::size_t> &basis() const { return basis_; }

private:
  std::vector<std::size_t> per_edge_;
  std::vector<bool> is_special_;
  std::vector<std::size_t> basis_;
};

/// Coordinates of [w] in the basis of non-special darts, using
/// [s_e] = -Σ_{i in e \ s_e} [i].
inline ZVector reduce_to_basis(std::span<const std::int64_t> w, const Hypermap &h,
                               const SpecialDarts &specials, Modulus d) {
  if (w.size() != h.darts())
    throw DimensionMismatch("reduce_to_basis: vector is not over the darts");
  const OrbitStructure o(h);
  ZVector full(w.begin(), w.end());
  for (std::size_t e = 0; e < o.hyperedges.size(); ++e) {
    const std::size_t s = specials.per_edge()[e];
    const std::int64_t c = detail::reduce(full[s], d);
    if (c == 0)
      continue;
    for (std::size_t i : o.hyperedges[e])
      if (i != s)
        full[i] -= c;
    full[s] = 0;
  }
  ZVector out;
  out.reserve(specials.basis().size());
  for (std::size_t i : specials.basis())
    out.push_back(detail::reduce(full[i], d));
  return out;
}

/// F --Δ₂--> W/ι(E) --Δ₁--> V in the basis of non-special darts.
struct HypermapChain {
  Modulus modulus;
  ZModMatrix delta1; ///< hypervertices x non-special darts
  ZModMatrix delta2; ///< non-special darts x faces
  std::vector<std::size_t> basis;

  ChainComplexData chain() const { return ChainComplexData(delta1, delta2); }
};

inline HypermapChain delta_matrices(const Hypermap &h, const SpecialDarts &specials,
                                    Modulus d) {
  const ZModMatrix d1 = d1_matrix(h, d);
  const ZModMatrix d2 = d2_matrix(h, d);
  const auto &basis = specials.basis();

  ZModMatrix delta1(d1.rows(), basis.size(), d);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t v = 0; v < d1.rows(); ++v)
      delta1.set(v, k, d1(v, basis[k]));

  ZModMatrix delta2(basis.size(), d2.cols(), d);
  for (std::size_t f = 0; f < d2.cols(); ++f) {
    const ZVector col = reduce_to_basis(d2.column(f), h, specials, d);
    for (std::size_t k = 0; k < basis.size(); ++k)
      delta2.set(k, f, col[k]);
  }
  return {d, std::move(delta1), std::move(delta2), basis};
}

// ---------------------------------------------------------------------------
// The equivalent 2-complex

/// V = hypervertices, E = non-special darts with I_s(i) = v∋i and
/// I_t(i) = v∋α⁻¹(i), F = faces. Each face cycle i_0, i_1 = φ(i_0), ... is
/// walked with every special dart s replaced by the inverted remainder of
/// its hyperedge, (α(s))⁻¹, (α²(s))⁻¹, ...
///
/// Names: vertices "v<k>", edges the 1-based dart number, faces "f<k>".
inline TwoComplex to_two_complex(const Hypermap &h, const SpecialDarts &specials) {
  const OrbitStructure o(h);
  const Permutation alpha_inv = h.alpha.inverse();
  const auto &basis = specials.basis();

  std::vector<std::size_t> edge_index(h.darts(), no_index);
  for (std::size_t k = 0; k < basis.size(); ++k)
    edge_index[basis[k]] = k;

  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < o.hypervertices.size(); ++v)
    vertices.push_back("v" + std::to_string(v + 1));

  std::vector<Edge> edges;
  for (std::size_t i : basis)
    edges.push_back({std::to_string(i + 1), o.vertex_of[i], o.vertex_of[alpha_inv(i)]});

  std::vector<Face> faces;
  for (std::size_t f = 0; f < o.faces.size(); ++f) {
    std::vector<SignedEdge> walk;
    for (std::size_t dart : o.faces[f]) {
      if (!specials.is_special(dart)) {
        walk.push_back({edge_index[dart], +1});
        continue;
      }
      for (std::size_t j = h.alpha(dart); j != dart; j = h.alpha(j))
        walk.push_back({edge_index[j], -1});
    }
    faces.push_back({"f" + std::to_string(f + 1), ClosedWalk(std::move(walk))});
  }
  return TwoComplex(std::move(vertices), std::move(edges), std::move(faces));
}

struct EquivalenceCertificate {
  bool walks_valid = false;
  bool boundary1_matches = false;
  bool boundary2_matches = false;
  bool chain_maps_compose_to_zero = false; ///< d₁d₂ = 0, d₁ι = 0, Δ₁Δ₂ = 0
  bool orientable_mod_d = false;
  bool orientable_integer = false;

  bool equivalent() const {
    return walks_valid && boundary1_matches && boundary2_matches &&
           chain_maps_compose_to_zero;
  }
  bool all() const { return equivalent() && orientable_mod_d && orientable_integer; }
};

/// Builds both chains and compares (∂₁, ∂₂) with (Δ₁, Δ₂) entrywise under
/// edge k <-> k-th non-special dart.
inline EquivalenceCertificate certify_equivalence(const Hypermap &h,
                                                  const SpecialDarts &specials,
                                                  Modulus d) {
  EquivalenceCertificate cert;
  const HypermapChain hc = delta_matrices(h, specials, d);
  const TwoComplex c = to_two_complex(h, specials);
  cert.walks_valid = validate(c).empty();
  if (cert.walks_valid) {
    cert.boundary1_matches = boundary1(c, d) == hc.delta1;
    cert.boundary2_matches = boundary2(c, d) == hc.delta2;
    cert.orientable_mod_d = is_orientable(c, d);
    cert.orientable_integer = is_orientable_integer(c);
  }
  const ZModMatrix d1 = d1_matrix(h, d);
  cert.chain_maps_compose_to_zero = (d1 * d2_matrix(h, d)).is_zero() &&
                                    (d1 * iota_matrix(h, d)).is_zero() &&
                                    (hc.delta1 * hc.delta2).is_zero();
  return cert;
}

inline bool verify_equivalence(const Hypermap &h, const SpecialDarts &specials,
                               Modulus d) {
  return certify_equivalence(h, specials, d).equivalent();
}

/// Stabilizer of the hypermap code, read directly off Δ₁ and Δ₂.
inline StabilizerSpec hypermap_stabilizer(const Hypermap &h, const SpecialDarts &specials,
                                          Modulus d) {
  return stabilizer_spec(delta_matrices(h, specials, d).chain());
}

} // namespace qudit
