/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "support/brute.hpp"
#include "support/corpus.hpp"

#include <gtest/gtest.h>

using namespace qudit;

TEST(ClosedWalk, CanonicalRotation) {
  const ClosedWalk a({{2, +1}, {0, -1}, {1, +1}});
  const ClosedWalk b({{0, -1}, {1, +1}, {2, +1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.steps().front(), (SignedEdge{0, -1}));
}

TEST(ClosedWalk, InverseReversesAndFlips) {
  const ClosedWalk w({{0, +1}, {1, +1}, {0, -1}, {1, -1}});
  const ClosedWalk inv = w.inverse();
  EXPECT_EQ(inv, ClosedWalk({{1, +1}, {0, +1}, {1, -1}, {0, -1}}));
  EXPECT_EQ(inv.inverse(), w);
}

TEST(ClosedWalk, EmptyIsDegenerate) {
  EXPECT_TRUE(ClosedWalk().is_degenerate());
  EXPECT_THROW(ClosedWalk({{0, 2}}), std::invalid_argument);
}

TEST(Validate, BuiltinsAreValid) {
  EXPECT_TRUE(validate(rp2()).empty());
  EXPECT_TRUE(validate(torus()).empty());
  EXPECT_TRUE(validate(torus_grid(3, 2)).empty());
}

TEST(Validate, ReportsIncidenceBreak) {
  const TwoComplex c({"a", "b"}, {{"x", 0, 1}}, {{"f", ClosedWalk({{0, +1}})}});
  const auto v = validate(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::IncidenceBreak);
  EXPECT_EQ(v[0].face, 0u);
}

TEST(Validate, ReportsDanglingReferences) {
  const TwoComplex c({"a"}, {{"x", 0, 3}}, {{"f", ClosedWalk({{5, +1}})}});
  const auto v = validate(c);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].kind, Violation::Kind::DanglingTarget);
  EXPECT_EQ(v[1].kind, Violation::Kind::DanglingWalkEdge);
}

TEST(Boundary, ProjectivePlane) {
  const auto b1 = boundary1(rp2(), 5), b2 = boundary2(rp2(), 5);
  EXPECT_EQ(b1(0, 0), 0);
  EXPECT_EQ(b2(0, 0), 2);
  EXPECT_EQ(boundary2_integer(rp2())(0, 0), 2);
}

TEST(Boundary, TorusFaceIsZero) {
  EXPECT_TRUE(boundary2_integer(torus()).is_zero());
  EXPECT_TRUE(boundary1(torus(), 7).is_zero());
}

TEST(Boundary, GridShape) {
  const auto chain = chain_complex(torus_grid(2, 3), 4);
  EXPECT_EQ(chain.vertex_count(), 6u);
  EXPECT_EQ(chain.edge_count(), 12u);
  EXPECT_EQ(chain.face_count(), 6u);
  for (std::size_t f = 0; f < 6; ++f)
    EXPECT_EQ(hamming_weight(chain.boundary2().column(f)), 4u);
}

TEST(Chain, RejectsInconsistentMaps) {
  const ZModMatrix d1 = ZModMatrix::from_rows(1, 3, {{1}});
  const ZModMatrix d2 = ZModMatrix::from_rows(1, 3, {{1}});
  EXPECT_THROW(ChainComplexData(d1, d2), InconsistentChain);
}

TEST(Homology, KnownSurfaces) {
  for (Modulus d : {2, 3, 4, 5, 6, 7, 8}) {
    EXPECT_EQ(homology_cardinality(chain_complex(rp2(), d)), d % 2 == 0 ? 2 : 1);
    EXPECT_EQ(homology_cardinality(chain_complex(torus(), d)), d * d);
    EXPECT_EQ(homology_cardinality(chain_complex(torus_grid(2, 3), d)), d * d);
  }
}

TEST(Homology, AgreesWithEnumerationOnCorpus) {
  for (const auto &inst : corpus::complexes(60, 99)) {
    ASSERT_TRUE(validate(inst.complex).empty());
    const auto chain = chain_complex(inst.complex, inst.modulus);
    EXPECT_TRUE((chain.boundary1() * chain.boundary2()).is_zero());
    EXPECT_EQ(homology_cardinality(chain), brute::homology_size(chain));
  }
}

TEST(Orientability, Surfaces) {
  EXPECT_TRUE(is_orientable(torus(), 3));
  EXPECT_TRUE(is_orientable_integer(torus()));
  EXPECT_TRUE(is_orientable_integer(torus_grid(2, 2)));
  EXPECT_FALSE(is_orientable_integer(rp2()));
  EXPECT_FALSE(is_orientable(rp2(), 3));
  EXPECT_TRUE(is_orientable(rp2(), 2));
}
