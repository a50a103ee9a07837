// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gapmor/errors.hpp"
#include "gapmor/linalg/eig.hpp"
#include "gapmor/linalg/lyapunov.hpp"
#include "gapmor/linalg/riccati.hpp"
#include "gapmor/linalg/schur.hpp"
#include "gapmor/lti/coprime.hpp"
#include "gapmor/lti/state_space.hpp"
#include "gapmor/matrix.hpp"
#include "gapmor/models/convdiff.hpp"
#include "gapmor/models/io.hpp"
#include "gapmor/models/random.hpp"
#include "gapmor/norms/gap.hpp"
#include "gapmor/norms/h2.hpp"
#include "gapmor/norms/linf.hpp"
#include "gapmor/reduce/interpolation.hpp"
#include "gapmor/reduce/irka.hpp"
#include "gapmor/reduce/lqgbt.hpp"
