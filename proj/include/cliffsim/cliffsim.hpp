// Copyright 2026 The cliffsim authors
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

#include "cliffsim/bitstring.hpp"
#include "cliffsim/circuit.hpp"
#include "cliffsim/circuit_text.hpp"
#include "cliffsim/classify.hpp"
#include "cliffsim/dense_oracle.hpp"
#include "cliffsim/errors.hpp"
#include "cliffsim/gates.hpp"
#include "cliffsim/gf2.hpp"
#include "cliffsim/pauli.hpp"
#include "cliffsim/random_circuit.hpp"
#include "cliffsim/reductions.hpp"
#include "cliffsim/rewrites.hpp"
#include "cliffsim/strong_sim.hpp"
#include "cliffsim/weak_sim.hpp"
