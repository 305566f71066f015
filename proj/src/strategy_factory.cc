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

#include "csm/strategy_factory.h"

#include <stdexcept>

#include "csm/analysis.h"
#include "csm/iedyn.h"
#include "csm/incisomatch.h"
#include "csm/sjtree.h"

namespace csm {

std::unique_ptr<Strategy> make_strategy(const std::string& name, StrategyOptions options) {
  if (name == "im") return std::make_unique<IncIsoMatchStrategy>();
  if (name == "gf") return make_graphflow(options);
  if (name == "sj") return std::make_unique<SjTreeStrategy>(options);
  if (name == "dyn") return std::make_unique<IeDynStrategy>(options);
  if (name == "tf") return make_turboflux(options);
  if (name == "sym") return make_symbi(options);
  if (name == "o-gf") return compose_index_swap("gf", "sym", options);
  if (name == "o-tf") return compose_index_swap("tf", "sym", options);
  if (name == "o-dyn") return compose_index_swap("dyn", "sym", options);
  throw std::invalid_argument("unknown algorithm: " + name);
}

const std::vector<std::string>& strategy_names() {
  static const std::vector<std::string> names{"im", "gf", "sj", "dyn", "tf", "sym", "o-gf", "o-tf", "o-dyn"};
  return names;
}

}  // namespace csm
