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

TEST(Shell, OrderAndCount) {
  std::vector<ZVector> seen;
  for_each_in_shell(3, 3, 2, [&](const ZVector &v) {
    seen.push_back(v);
    return false;
  });
  ASSERT_EQ(seen.size(), 12u); // C(3,2) * 2^2
  EXPECT_EQ(seen[0], (ZVector{1, 1, 0}));
  EXPECT_EQ(seen[1], (ZVector{1, 2, 0}));
  EXPECT_EQ(seen[2], (ZVector{2, 1, 0}));
  EXPECT_EQ(seen[4], (ZVector{1, 0, 1}));
  EXPECT_EQ(seen.back(), (ZVector{0, 2, 2}));
}

TEST(Shell, StopsEarly) {
  int visited = 0;
  EXPECT_TRUE(for_each_in_shell(4, 2, 1, [&](const ZVector &) { return ++visited == 2; }));
  EXPECT_EQ(visited, 2);
  EXPECT_FALSE(for_each_in_shell(2, 2, 3, [](const ZVector &) { return true; }));
}

TEST(Distance, GridTwoByTwo) {
  const auto chain = chain_complex(torus_grid(2, 2), 2);
  const auto spec = stabilizer_spec(chain);
  const auto expected = brute::min_logical_weight(spec);
  ASSERT_EQ(expected, std::optional<std::size_t>(2));
  EXPECT_EQ(distance_css(spec).distance, expected);
  EXPECT_EQ(distance_homological(chain).distance, expected);
}

TEST(Distance, TorusModThree) {
  const auto chain = chain_complex(torus(), 3);
  const auto spec = stabilizer_spec(chain);
  ASSERT_EQ(brute::min_logical_weight(spec), std::optional<std::size_t>(1));
  const auto r = distance_css(spec);
  EXPECT_EQ(r.distance, std::optional<std::size_t>(1));
  EXPECT_EQ(r.side, LogicalSide::X);
  EXPECT_EQ(r.witness, (ZVector{1, 0}));
}

TEST(Distance, ProjectivePlaneOddModulusHasNoLogicals) {
  const auto chain = chain_complex(rp2(), 3);
  const auto spec = stabilizer_spec(chain);
  EXPECT_FALSE(brute::min_logical_weight(spec));
  const auto css = distance_css(spec), hom = distance_homological(chain);
  EXPECT_TRUE(css.no_logicals());
  EXPECT_TRUE(hom.no_logicals());
  EXPECT_EQ(css.examined, 2u);
}

TEST(Distance, BudgetExceeded) {
  const auto spec = stabilizer_spec(chain_complex(torus_grid(4, 4), 3));
  EXPECT_THROW(distance_css(spec, 100), BudgetExceeded);
}

TEST(Distance, CorpusAgreesWithEnumeration) {
  for (const auto &inst : corpus::complexes(80, 31)) {
    const auto chain = chain_complex(inst.complex, inst.modulus);
    const auto spec = stabilizer_spec(chain);
    const auto expected = brute::min_logical_weight(spec);
    const auto css = distance_css(spec);
    const auto hom = distance_homological(chain);
    ASSERT_EQ(css.distance, expected);
    ASSERT_EQ(hom.distance, expected);
    if (css.distance) {
      const auto w = css.witness_operator(inst.modulus);
      EXPECT_TRUE(is_logical(w, spec));
      EXPECT_EQ(weight(w), *css.distance);
    }
  }
}

TEST(Normalizer, CharacterizationsAgree) {
  const auto spec = stabilizer_spec(chain_complex(torus(), 3));
  const std::size_t total = brute::ambient_size(2, 3);
  for (std::size_t xi = 0; xi < total; ++xi)
    for (std::size_t zi = 0; zi < total; ++zi) {
      const PauliProduct p(3, 0, brute::vector_at(xi, 2, 3), brute::vector_at(zi, 2, 3));
      EXPECT_EQ(is_in_normalizer_by_syndrome(p, spec), is_in_normalizer_by_submodules(p, spec));
      EXPECT_TRUE(is_in_normalizer(p, spec)); // every face and vertex operator is trivial
    }
}

TEST(Normalizer, StabilizerElementsAreNotLogical) {
  const auto spec = stabilizer_spec(chain_complex(torus_grid(2, 2), 3));
  for (const auto &g : spec.generators()) {
    EXPECT_TRUE(is_in_normalizer(g, spec));
    EXPECT_FALSE(is_logical(g, spec));
  }
}
