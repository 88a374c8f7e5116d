/*
   Copyright 2026 The bggpoly Authors

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

// Killing 2-tensors of flat 3-space from the Cartan component of
// S^2(Lambda^2 R^4*), checked against the symmetrized-derivative operator.

#include <iostream>

#include "bggpoly/bggsolve/catalog.hpp"
#include "bggpoly/flatverify.hpp"

int main() {
    using namespace bggpoly;
    const GeometryKind kind = GeometryKind::projective(3);
    const Representation rep = build_representation(build_model(kind), "cartanS2L2");
    const auto basis = solution_basis(rep);
    std::cout << "dim " << rep.dim() << ", depth " << rep.depth << ", span " << span_dimension(basis) << "\n";

    const OperatorSpec killing{OperatorKind::Killing};
    std::size_t passing = 0;
    for (const auto& s : basis) passing += verify_system(s, killing).passed ? 1 : 0;
    std::cout << passing << " of " << basis.size() << " systems are Killing tensors\n";

    const auto fixtures = catalog(kind, "cartanS2L2").adjudicated();
    std::cout << "closed-form list spans the same space: " << (same_span(basis, fixtures) ? "yes" : "no") << "\n";
    for (const auto& slot : basis.back().slots)
        if (!slot.poly.is_zero()) std::cout << "  " << slot.label << ": " << slot.poly.str() << "\n";
    return 0;
}
