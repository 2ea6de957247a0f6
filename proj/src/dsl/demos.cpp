// Copyright 2026 The duoc Authors
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


#include "duoc/dsl/demos.hpp"

#include <map>

#include "duoc/errors.hpp"

namespace duoc::dsl {

namespace {

const std::map<std::string, std::string>& demos() {
  static const std::map<std::string, std::string> table{
      {"chsh", R"(# Two copies of a bit/anti-bit pair, measured across (D1,A2) | (D2,A1).
run chsh { alice=[0, pi/4], bob=[pi/8, -pi/8] } as C
assert C.F == 2*sqrt(2)
run chsh { alice=[0, 0], bob=[0, 0] } as Z
assert Z.F == 2
)"},
      {"activation", R"(run activation { alphas=[sqrt(0.5), sqrt(0.5)], parity=0 } as A
assert A.F_closed == 1 + sqrt(2)
assert A.F_simulated == A.F_closed

run activation { alphas=[sqrt(0.9), sqrt(0.1)], parity=1 } as B
assert B.F_simulated == B.F_closed
assert B.F_simulated > 2

system P = composite(d=3, bits=1, antibits=1)
state Psi = pair(alphas=[sqrt(0.1), sqrt(0.6), sqrt(0.3)], parity=2) on P
run activation { state=Psi } as C
assert C.F_simulated > 2
)"},
      {"witness", R"(system S = composite(d=2, bits=1, antibits=1)

run witness { p=0.3, grid=0.01 } as W
assert W.min_p_no >= W.bound
assert W.min_p_no == W.oracle_min_p_no
assert W.p_no_target <= 0 tol 1e-12

state Psi = entpair(p=0.3) on S
measure M = witness(p=0.3) on S
run born { state=Psi, measure=M } as B
assert B.p0 == 1

state Sep = separable(gamma=[0.25, 0.25, 0.25, 0.25]) on S
run born { state=Sep, measure=M } as N
assert N.p1 >= 0.3
)"},
      {"purify", R"(system C = composite(d=3, bits=1, antibits=0)
system S = composite(d=3, bits=1, antibits=2)
system A = composite(d=3, bits=0, antibits=2)

state Rho = classical(probs=[0.5, 0.3, 0.2]) on C
state Pur = purify(state=Rho, parity=[1], tail=[2]) on S
measure U = unit() on A

# Discarding the anti-dits returns the classical state.
run conditional { state=Pur, measure=U, on=[1, 2], compare=Rho } as M
assert M.probability == 1
assert M.valid == 1
assert M.distance <= 0 tol 1e-12
)"},
      {"consistency", R"(# Conditional states of valid states under valid effects stay valid.
run conditional { trials=1000 } as C
assert C.failures == 0
assert C.max_reconstruction_error <= 0 tol 1e-9

# Unstructured effects break validity.
run conditional { trials=120, corrupt=1 } as N
assert N.failures > 0
)"},
      {"span", R"(system S = composite(d=2, bits=1, antibits=1)
run span { system=S } as P
assert P.product_span_dim == 4
assert P.state_span_dim == 8

system T = composite(d=2, bits=2, antibits=0)
run span { system=T } as Q
assert Q.product_span_dim == Q.state_span_dim
)"},
  };
  return table;
}

}  // namespace

std::vector<std::string> demo_names() {
  return {"chsh", "activation", "witness", "purify", "consistency", "span"};
}

const std::string& demo_source(const std::string& name) {
  const auto it = demos().find(name);
  if (it == demos().end()) throw DomainError("unknown demo '" + name + "'");
  return it->second;
}

}  // namespace duoc::dsl
