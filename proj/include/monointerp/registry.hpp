/*
   Copyright 2026 The monointerp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MONOINTERP_REGISTRY_HPP
#define MONOINTERP_REGISTRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "monointerp/nodes.hpp"

namespace monointerp {

struct RegisteredFunction {
  std::string name;
  std::string formula;
  ComplexFunction f;
  bool interval_only = false;  // defined through Re(z); not analytic
};

/// Built-in test functions. `cheb_T<n>` (for example cheb_T20) is resolved on
/// demand and is not part of this list.
const std::vector<RegisteredFunction>& function_registry();

/// Lookup by name, including cheb_T<n> for 0 <= n <= 1000.
std::optional<RegisteredFunction> find_function(const std::string& name);

/// Human-readable list of functions and arc descriptors.
std::string registry_listing();

/// Parses an arc descriptor: `unit` ([-1, 1]), `zero-one` ([0, 1]), `a,b`,
/// `parabola:<alpha>` (t + i alpha (t^2 - 1), with rho_* 2.56 for alpha = 0.2
/// and 2.6 for 0.4 and 0.6) or `parabola:<alpha>:<rho_star>`. Throws
/// std::invalid_argument on anything else.
Arc arc_from_name(const std::string& descriptor);

/// g(t) = t + i alpha (t^2 - 1).
Arc parabola_arc(double alpha, std::optional<double> rho_star = std::nullopt);

}  // namespace monointerp

#endif  // MONOINTERP_REGISTRY_HPP
