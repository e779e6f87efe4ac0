/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
// Parameters of the qudit toric code on a 3x3 grid for a few moduli.

#include "qudit/qudit.hpp"

#include <iostream>

int main() {
  const qudit::TwoComplex grid = qudit::torus_grid(3, 3);
  for (qudit::Modulus d : {2, 3, 4, 6}) {
    const auto chain = qudit::chain_complex(grid, d);
    const auto spec = qudit::stabilizer_spec(chain);
    const auto report = qudit::distance_css(spec);
    std::cout << "D=" << d << "  n=" << spec.qudits()
              << "  |S|=" << qudit::stabilizer_size(spec)
              << "  K=" << qudit::code_dimension(spec)
              << "  d=" << (report.distance ? std::to_string(*report.distance) : "-")
              << '\n';
  }
}
