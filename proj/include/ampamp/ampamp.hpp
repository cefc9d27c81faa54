// Copyright 2026 The ampamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "ampamp/bitstring.hpp"
#include "ampamp/circuit.hpp"
#include "ampamp/circuit_compiler.hpp"
#include "ampamp/collective_sim.hpp"
#include "ampamp/cost_spectrum.hpp"
#include "ampamp/dense.hpp"
#include "ampamp/errors.hpp"
#include "ampamp/fidelity.hpp"
#include "ampamp/grover_closed_form.hpp"
#include "ampamp/param_engine.hpp"
#include "ampamp/phase.hpp"
#include "ampamp/rational.hpp"
#include "ampamp/statevector_reference.hpp"
#include "ampamp/weight_set.hpp"
