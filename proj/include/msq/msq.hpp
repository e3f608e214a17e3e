// Copyright 2026 The msq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Umbrella header for the whole library.

#include "msq/analysis.hpp"
#include "msq/circuit.hpp"
#include "msq/counts.hpp"
#include "msq/gates.hpp"
#include "msq/hull.hpp"
#include "msq/io.hpp"
#include "msq/line_circuits.hpp"
#include "msq/magic_square.hpp"
#include "msq/matrix.hpp"
#include "msq/noise.hpp"
#include "msq/pauli.hpp"
#include "msq/qnd.hpp"
#include "msq/rng.hpp"
#include "msq/simulate.hpp"
#include "msq/state.hpp"
#include "msq/vectors.hpp"
#include "msq/verify.hpp"
