// Copyright 2026 The qwcgroup Authors
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

// Umbrella header for the qubit-wise commuting grouping library.

#include "qwc/bitset.hpp"
#include "qwc/clique.hpp"
#include "qwc/coloring.hpp"
#include "qwc/cover.hpp"
#include "qwc/errors.hpp"
#include "qwc/graph.hpp"
#include "qwc/hamiltonian_io.hpp"
#include "qwc/oracle.hpp"
#include "qwc/pauli.hpp"
#include "qwc/report.hpp"
#include "qwc/solve.hpp"
#include "qwc/stats.hpp"
