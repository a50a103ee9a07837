// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "gapmor/gapmor.hpp"
