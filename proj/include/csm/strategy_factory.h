// Copyright 2026 The csm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "csm/framework.h"
#include "csm/seeded_strategy.h"

namespace csm {

/**
 * Strategy by short name:
 *   im, gf, sj, dyn, tf, sym   the six algorithms
 *   o-gf, o-tf, o-dyn          DAG index paired with another method's order
 * Throws std::invalid_argument for unknown names.
 */
std::unique_ptr<Strategy> make_strategy(const std::string& name, StrategyOptions options = {});

/** Names accepted by make_strategy. */
const std::vector<std::string>& strategy_names();

}  // namespace csm
