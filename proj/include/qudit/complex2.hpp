/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// \file complex2.hpp
/// Oriented combinatorial 2-complexes and their chain complexes over Z_D.

#include "qudit/zmod_linalg.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qudit {

inline constexpr std::size_t no_index = std::numeric_limits<std::size_t>::max();

/// An edge traversed forwards (+1) or backwards (-1).
struct SignedEdge {
  std::size_t edge = 0;
  int sign = +1;

  SignedEdge inverse() const { return {edge, -sign}; }

  friend bool operator==(const SignedEdge &, const SignedEdge &) = default;
  /// Orders by edge index, then + before -.
  friend std::strong_ordering operator<=>(const SignedEdge &a, const SignedEdge &b) {
    if (auto c = a.edge <=> b.edge; c != 0)
      return c;
    return (a.sign > 0 ? 0 : 1) <=> (b.sign > 0 ? 0 : 1);
  }
};

/// Cyclic sequence of signed edges, stored in its lexicographically minimal
/// rotation. The empty walk is the flagged degenerate boundary that a
/// hypermap face made only of isolated special darts collapses to.
class ClosedWalk {
public:
  ClosedWalk() = default;
  explicit ClosedWalk(std::vector<SignedEdge> steps) : steps_(std::move(steps)) {
    for (const auto &s : steps_)
      if (s.sign != 1 && s.sign != -1)
        throw std::invalid_argument("ClosedWalk: sign must be +1 or -1");
    canonicalize();
  }

  const std::vector<SignedEdge> &steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool is_degenerate() const { return steps_.empty(); }

  /// w^-1: reversed order, every step inverted.
  ClosedWalk inverse() const {
    std::vector<SignedEdge> rev;
    rev.reserve(steps_.size());
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
      rev.push_back(it->inverse());
    return ClosedWalk(std::move(rev));
  }

  friend bool operator==(const ClosedWalk &, const ClosedWalk &) = default;

private:
  void canonicalize() {
    const std::size_t n = steps_.size();
    if (n < 2)
      return;
    std::size_t best = 0;
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto &a = steps_[(k + i) % n];
        const auto &b = steps_[(best + i) % n];
        if (a < b) {
          best = k;
          break;
        }
        if (b < a)
          break;
      }
    }
    std::rotate(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(best),
                steps_.end());
  }

  std::vector<SignedEdge> steps_;
};

inline ClosedWalk inverse_walk(const ClosedWalk &w) { return w.inverse(); }

struct Edge {
  std::string name;
  std::size_t source = no_index;
  std::size_t target = no_index;
};

struct Face {
  std::string name;
  ClosedWalk walk;
};

/// (V, E, I_s, I_t, F, B). Indices are dense and follow input order.
/// Construction does not check incidences; see validate().
class TwoComplex {
public:
  TwoComplex() = default;
  TwoComplex(std::vector<std::string> vertices, std::vector<Edge> edges,
             std::vector<Face> faces)
      : vertices_(std::move(vertices)), edges_(std::move(edges)),
        faces_(std::move(faces)) {}

  const std::vector<std::string> &vertices() const { return vertices_; }
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<Face> &faces() const { return faces_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  std::size_t source(const SignedEdge &s) const {
    const Edge &e = edges_.at(s.edge);
    return s.sign > 0 ? e.source : e.target;
  }
  std::size_t target(const SignedEdge &s) const {
    const Edge &e = edges_.at(s.edge);
    return s.sign > 0 ? e.target : e.source;
  }

private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  enum class Kind { DanglingSource, DanglingTarget, DanglingWalkEdge, IncidenceBreak };
  Kind kind;
  std::size_t edge = no_index;     ///< offending edge (dangling endpoint)
  std::size_t face = no_index;     ///< offending face (walk problems)
  std::size_t position = no_index; ///< step index in the stored walk; a break is position -> position+1

  std::string describe(const TwoComplex &c) const {
    auto face_name = [&] {
      return face < c.face_count() ? c.faces()[face].name : std::to_string(face);
    };
    auto edge_name = [&] {
      return edge < c.edge_count() ? c.edges()[edge].name : std::to_string(edge);
    };
    switch (kind) {
    case Kind::DanglingSource:
      return "edge " + edge_name() + ": source is not a vertex";
    case Kind::DanglingTarget:
      return "edge " + edge_name() + ": target is not a vertex";
    case Kind::DanglingWalkEdge:
      return "face " + face_name() + ": position " + std::to_string(position) +
             ": walk references an unknown edge";
    case Kind::IncidenceBreak: {
      const std::size_t len = c.faces()[face].walk.size();
      return "face " + face_name() + ": position " + std::to_string(position) +
             "->" + std::to_string((position + 1) % len) +
             ": target of step does not match source of next step";
    }
    }
    return {};
  }
};

/// Every dangling reference and every walk incidence break. Empty means valid.
inline std::vector<Violation> validate(const TwoComplex &c) {
  std::vector<Violation> out;
  const std::size_t nv = c.vertex_count();
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    if (c.edges()[e].source >= nv)
      out.push_back({Violation::Kind::DanglingSource, e, no_index, no_index});
    if (c.edges()[e].target >= nv)
      out.push_back({Violation::Kind::DanglingTarget, e, no_index, no_index});
  }
  auto endpoint_ok = [&](const SignedEdge &s) {
    return s.edge < c.edge_count() && c.edges()[s.edge].source < nv &&
           c.edges()[s.edge].target < nv;
  };
  for (std::size_t f = 0; f < c.face_count(); ++f) {
    const auto &steps = c.faces()[f].walk.steps();
    bool dangling = false;
    for (std::size_t i = 0; i < steps.size(); ++i)
      if (steps[i].edge >= c.edge_count()) {
        out.push_back({Violation::Kind::DanglingWalkEdge, steps[i].edge, f, i});
        dangling = true;
      }
    if (dangling)
      continue;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const auto &cur = steps[i];
      const auto &next = steps[(i + 1) % steps.size()];
      if (!endpoint_ok(cur) || !endpoint_ok(next))
        continue;
      if (c.target(cur) != c.source(next))
        out.push_back({Violation::Kind::IncidenceBreak, no_index, f, i});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chain data

/// ∂₁(e) = I_t(e) - I_s(e); self-loops give a zero column.
inline ZModMatrix boundary1(const TwoComplex &c, Modulus d) {
  ZModMatrix m(c.vertex_count(), c.edge_count(), d);
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    const Edge &edge = c.edges()[e];
    if (edge.source >= c.vertex_count() || edge.target >= c.vertex_count())
      throw std::invalid_argument("boundary1: edge " + edge.name +
                                  " has a dangling endpoint");
    m.accumulate(edge.target, e, 1);
    m.accumulate(edge.source, e, -1);
  }
  return m;
}

/// ∂₂ over the integers: signed multiplicity of each edge in each face walk.
inline IntegerMatrix boundary2_integer(const TwoComplex &c) {
  IntegerMatrix m(c.edge_count(), c.face_count());
  for (std::size_t f = 0; f < c.face_count(); ++f)
    for (const SignedEdge &s : c.faces()[f].walk.steps()) {
      if (s.edge >= c.edge_count())
        throw std::invalid_argument("boundary2: face " + c.faces()[f].name +
                                    " references an unknown edge");
      m(s.edge, f) += s.sign;
    }
  return m;
}

/// ∂₂(f) = c_{B(f)} reduced mod D after accumulating multiplicities.
inline ZModMatrix boundary2(const TwoComplex &c, Modulus d) {
  return ZModMatrix::reduce(boundary2_integer(c), d);
}

class InconsistentChain : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// C₂ --∂₂--> C₁ --∂₁--> C₀ over Z_D. The coboundaries δ₁, δ₂ are the
/// transposes. Construction rejects ∂₁·∂₂ != 0.
class ChainComplexData {
public:
  ChainComplexData(ZModMatrix boundary1, ZModMatrix boundary2)
      : boundary1_(std::move(boundary1)), boundary2_(std::move(boundary2)) {
    if (boundary1_.modulus() != boundary2_.modulus())
      throw InconsistentChain("chain complex: boundary moduli differ");
    if (boundary1_.cols() != boundary2_.rows())
      throw InconsistentChain("chain complex: edge counts of the boundaries differ");
    if (!(boundary1_ * boundary2_).is_zero())
      throw InconsistentChain("chain complex: boundary1 * boundary2 != 0 mod D");
  }

  Modulus modulus() const { return boundary1_.modulus(); }
  const ZModMatrix &boundary1() const { return boundary1_; }
  const ZModMatrix &boundary2() const { return boundary2_; }
  ZModMatrix coboundary1() const { return boundary1_.transpose(); }
  ZModMatrix coboundary2() const { return boundary2_.transpose(); }

  std::size_t vertex_count() const { return boundary1_.rows(); }
  std::size_t edge_count() const { return boundary1_.cols(); }
  std::size_t face_count() const { return boundary2_.cols(); }

private:
  ZModMatrix boundary1_;
  ZModMatrix boundary2_;
};

inline ChainComplexData chain_complex(const TwoComplex &c, Modulus d) {
  return ChainComplexData(boundary1(c, d), boundary2(c, d));
}

/// |H₁| = |ker ∂₁| / |im ∂₂|.
inline BigInt homology_cardinality(const ChainComplexData &chain) {
  const BigInt cycles = kernel_cardinality(chain.boundary1());
  const BigInt boundaries =
      SubmoduleSpan::column_span(chain.boundary2()).cardinality();
  if (cycles % boundaries != 0)
    throw InconsistentChain("homology: |im d2| does not divide |ker d1|");
  return cycles / boundaries;
}

/// Σ_f ∂₂(f) = 0 mod D. Depends on D: RP² passes at even D only.
inline bool is_orientable(const TwoComplex &c, Modulus d) {
  const ZModMatrix b2 = boundary2(c, d);
  for (std::size_t e = 0; e < b2.rows(); ++e) {
    std::int64_t s = 0;
    for (std::size_t f = 0; f < b2.cols(); ++f)
      s = detail::add_mod(s, b2(e, f), d);
    if (s != 0)
      return false;
  }
  return true;
}

/// Σ_f ∂₂(f) = 0 over the integers.
inline bool is_orientable_integer(const TwoComplex &c) {
  const IntegerMatrix b2 = boundary2_integer(c);
  for (std::size_t e = 0; e < b2.rows(); ++e) {
    BigInt s = 0;
    for (std::size_t f = 0; f < b2.cols(); ++f)
      s += b2(e, f);
    if (s != 0)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Builders

/// One vertex, one self-loop e, one face glued along [e, e].
inline TwoComplex rp2() {
  return TwoComplex({"v"}, {{"e", 0, 0}},
                    {{"f", ClosedWalk({{0, +1}, {0, +1}})}});
}

/// One vertex, two self-loops, one face glued along [e1, e2, e1^-1, e2^-1].
inline TwoComplex torus() {
  return TwoComplex({"v"}, {{"e1", 0, 0}, {"e2", 0, 0}},
                    {{"f", ClosedWalk({{0, +1}, {1, +1}, {0, -1}, {1, -1}})}});
}

/// k x l periodic square grid. Vertex (r, c) has index r*l + c. The first
/// k*l edges point rightward (r, c) -> (r, c+1), the next k*l upward
/// (r, c) -> (r+1, c). Face (r, c) is the counterclockwise square with lower
/// left corner (r, c).
inline TwoComplex torus_grid(std::size_t k, std::size_t l) {
  if (k == 0 || l == 0)
    throw std::invalid_argument("torus_grid: dimensions must be >= 1");
  auto vid = [&](std::size_t r, std::size_t c) { return (r % k) * l + (c % l); };
  auto right = [&](std::size_t r, std::size_t c) { return (r % k) * l + (c % l); };
  auto up = [&](std::size_t r, std::size_t c) { return k * l + (r % k) * l + (c % l); };
  auto tag = [](std::size_t r, std::size_t c) {
    return std::to_string(r) + "_" + std::to_string(c);
  };

  std::vector<std::string> vertices;
  std::vector<Edge> edges(2 * k * l);
  std::vector<Face> faces;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < l; ++c) {
      vertices.push_back("v" + tag(r, c));
      edges[right(r, c)] = {"h" + tag(r, c), vid(r, c), vid(r, c + 1)};
      edges[up(r, c)] = {"u" + tag(r, c), vid(r, c), vid(r + 1, c)};
    }
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < l; ++c)
      faces.push_back({"f" + tag(r, c), ClosedWalk({{right(r, c), +1},
                                                    {up(r, c + 1), +1},
                                                    {right(r + 1, c), -1},
                                                    {up(r, c), -1}})});
  return TwoComplex(std::move(vertices), std::move(edges), std::move(faces));
}

} // namespace qudit
