/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "app.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return qudit::cli::run(argc, argv, std::cout, std::cerr);
}
