/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qudit/complex2.hpp"
#include "qudit/distance.hpp"
#include "qudit/hypermap.hpp"
#include "qudit/io.hpp"
#include "qudit/oracle.hpp"
#include "qudit/pauli.hpp"
#include "qudit/zmod_linalg.hpp"
