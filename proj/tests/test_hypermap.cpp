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

TEST(Permutation, FromCyclesAndInverse) {
  const auto p = Permutation::from_cycles(5, {{1, 3, 4}});
  EXPECT_EQ(p(0), 2u);
  EXPECT_EQ(p(2), 3u);
  EXPECT_EQ(p(3), 0u);
  EXPECT_EQ(p(1), 1u);
  EXPECT_EQ(Permutation::then(p, p.inverse()), Permutation::identity(5));
}

TEST(Permutation, RejectsBadInput) {
  EXPECT_THROW(Permutation({0, 0}), InvalidPermutation);
  EXPECT_THROW(Permutation({2, 0}), InvalidPermutation);
  EXPECT_THROW(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), InvalidPermutation);
  EXPECT_THROW(Permutation::from_cycles(3, {{4}}), InvalidPermutation);
  EXPECT_THROW(Hypermap(Permutation::identity(2), Permutation::identity(3)),
               InvalidPermutation);
}

TEST(Permutation, OrbitsOrdered) {
  const auto o = orbits(Permutation::from_cycles(6, {{2, 5}, {6, 1, 4}}));
  ASSERT_EQ(o.size(), 3u);
  EXPECT_EQ(o[0], (std::vector<std::size_t>{0, 3, 5}));
  EXPECT_EQ(o[1], (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(o[2], (std::vector<std::size_t>{2}));
}

TEST(Hypermap, DigonByHand) {
  const Hypermap h(Permutation::from_cycles(2, {{1, 2}}), Permutation::from_cycles(2, {{1, 2}}));
  const OrbitStructure o(h);
  EXPECT_EQ(o.hyperedges.size(), 1u);
  EXPECT_EQ(o.hypervertices.size(), 1u);
  EXPECT_EQ(o.faces.size(), 2u);
  const auto specials = SpecialDarts::smallest(h);
  EXPECT_EQ(specials.basis(), (std::vector<std::size_t>{1}));
  const TwoComplex c = to_two_complex(h, specials);
  ASSERT_EQ(c.vertex_count(), 1u);
  ASSERT_EQ(c.edge_count(), 1u);
  ASSERT_EQ(c.face_count(), 2u);
  EXPECT_EQ(c.edges()[0].name, "2");
  EXPECT_EQ(c.faces()[0].walk, ClosedWalk({{0, -1}}));
  EXPECT_EQ(c.faces()[1].walk, ClosedWalk({{0, +1}}));
  EXPECT_TRUE(certify_equivalence(h, specials, 3).all());
}

TEST(Hypermap, SingleDartIsDegenerate) {
  const Hypermap h(Permutation::identity(1), Permutation::identity(1));
  const auto specials = SpecialDarts::smallest(h);
  const TwoComplex c = to_two_complex(h, specials);
  EXPECT_EQ(c.edge_count(), 0u);
  ASSERT_EQ(c.face_count(), 1u);
  EXPECT_TRUE(c.faces()[0].walk.is_degenerate());
  EXPECT_TRUE(certify_equivalence(h, specials, 2).all());
}

TEST(Hypermap, DartChainMapsCompose) {
  for (const auto &inst : corpus::hypermaps(60, 8, 41)) {
    const auto d1 = d1_matrix(inst.hypermap, inst.modulus);
    EXPECT_TRUE((d1 * d2_matrix(inst.hypermap, inst.modulus)).is_zero());
    EXPECT_TRUE((d1 * iota_matrix(inst.hypermap, inst.modulus)).is_zero());
  }
}

TEST(Hypermap, SpecialDartValidation) {
  const Hypermap h(Permutation::from_cycles(3, {{1, 2}}), Permutation::identity(3));
  EXPECT_THROW(SpecialDarts::from_set(h, {0}), std::invalid_argument);
  EXPECT_THROW(SpecialDarts::from_set(h, {0, 1, 2}), std::invalid_argument);
  EXPECT_NO_THROW(SpecialDarts::from_set(h, {2, 1}));
  EXPECT_THROW(SpecialDarts(h, {2, 1}), std::invalid_argument);
}

TEST(Hypermap, ReduceToBasisKillsHyperedges) {
  const Hypermap h(Permutation::from_cycles(4, {{1, 2, 3}}), Permutation::identity(4));
  const auto specials = SpecialDarts::smallest(h);
  ASSERT_EQ(specials.basis(), (std::vector<std::size_t>{1, 2}));
  // [1] = -[2] - [3] and [4] = 0 in W / ι(E)
  EXPECT_EQ(reduce_to_basis(ZVector{1, 0, 0, 0}, h, specials, 5), (ZVector{4, 4}));
  EXPECT_EQ(reduce_to_basis(ZVector{1, 1, 1, 2}, h, specials, 5), (ZVector{0, 0}));
  EXPECT_EQ(reduce_to_basis(ZVector{0, 2, 1, 3}, h, specials, 5), (ZVector{2, 1}));
}

TEST(Hypermap, RandomEquivalenceCertificates) {
  corpus::Rng rng(43);
  for (const auto &inst : corpus::hypermaps(80, 8, 47)) {
    for (const auto &specials :
         {SpecialDarts::smallest(inst.hypermap), corpus::random_specials(rng, inst.hypermap)}) {
      const auto cert = certify_equivalence(inst.hypermap, specials, inst.modulus);
      ASSERT_TRUE(cert.all());
      const auto hc = delta_matrices(inst.hypermap, specials, inst.modulus);
      const TwoComplex c = to_two_complex(inst.hypermap, specials);
      const auto expected = brute::homology_size(hc.chain());
      EXPECT_EQ(code_dimension(hypermap_stabilizer(inst.hypermap, specials, inst.modulus)),
                expected);
      EXPECT_EQ(homology_cardinality(chain_complex(c, inst.modulus)), expected);
    }
  }
}
