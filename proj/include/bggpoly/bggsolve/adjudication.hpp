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

#ifndef BGGPOLY_BGGSOLVE_ADJUDICATION_HPP
#define BGGPOLY_BGGSOLVE_ADJUDICATION_HPP

// Cross-check of the printed conformal closed forms against the exact
// exponential and the flat conformal Killing operator.

#include <cstddef>
#include <string>
#include <vector>

#include "bggpoly/bggsolve/catalog.hpp"
#include "bggpoly/flatverify.hpp"

namespace bggpoly {

struct EntryMismatch {
    std::size_t row = 0;
    std::size_t col = 0;
    MultiPoly printed;
    MultiPoly oracle;
};

/// One place where a printed sign was replaced.
struct SignSite {
    std::string site;
    std::string printed;
    std::string adjudicated;
    std::string oracle;
    bool printed_passes = false;
    bool adjudicated_passes = false;
};

struct AdjudicationReport {
    GeometryKind geometry;
    std::size_t entries_checked = 0;
    std::vector<EntryMismatch> exponential_mismatches;
    std::vector<SignSite> sites;
};

namespace detail {

// <v, v> for a polynomial vector under a constant Gram matrix.
inline MultiPoly polynomial_norm(const RatMatrix& g, const std::vector<MultiPoly>& v, std::size_t n) {
    MultiPoly out(n);
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = 0; b < v.size(); ++b)
            if (!g(a, b).is_zero()) out += v[a] * v[b] * g(a, b);
    return out;
}

}  // namespace detail

inline AdjudicationReport sign_adjudication_report(const GeometryKind& kind) {
    if (!kind.is_conformal()) throw std::invalid_argument("sign_adjudication_report: needs a conformal geometry");
    const std::size_t n = kind.dimension();
    const GradedLieModel model = build_model(kind);
    const Representation std_rep = standard_rep(model);
    const PolyMatrix oracle = exp_neg_action(std_rep);
    const PolyMatrix printed = printed_conformal_exponential(kind);

    AdjudicationReport report{kind, oracle.rows() * oracle.cols(), {}, {}};
    for (std::size_t r = 0; r < oracle.rows(); ++r)
        for (std::size_t c = 0; c < oracle.cols(); ++c)
            if (!(oracle(r, c) == printed(r, c))) report.exponential_mismatches.push_back({r, c, printed(r, c), oracle(r, c)});

    const MultiPoly half_q = detail::printed_last_coordinate(kind);
    const RatMatrix& gram = *std_rep.form;

    {
        const bool p = printed(n + 1, 0) == oracle(n + 1, 0);
        report.sites.push_back({"exponential bottom-left entry", half_q.str(), (-half_q).str(),
                                "truncated exponential series", p, true});
    }
    {
        // s~_0 as a column: (1, -x_1, ..., -x_n, c) must be null.
        std::vector<MultiPoly> col;
        for (std::size_t r = 0; r < n + 2; ++r) col.push_back(oracle(r, 0));
        std::vector<MultiPoly> col_printed = col;
        col_printed.back() = half_q;
        const bool p = detail::polynomial_norm(gram, col_printed, n).is_zero();
        const bool a = detail::polynomial_norm(gram, col, n).is_zero();
        report.sites.push_back({"s~_0 coefficient of s_{n+1}", half_q.str(), (-half_q).str(), "null-cone norm", p, a});
    }
    {
        HomogCoords h = homog_coords(kind);
        const bool a = quadric_residual(h).is_zero();
        h.coords.back() = half_q;
        const bool p = quadric_residual(h).is_zero();
        report.sites.push_back({"homogeneous coordinate X^{n+1}", half_q.str(), (-half_q).str(), "quadric identity", p, a});
    }
    if (n >= 2) {
        const Catalog cat = catalog(kind, "ext(2,std)");
        const OperatorSpec ckv{OperatorKind::ConformalKillingVector};
        bool p = true, a = true;
        for (const auto& f : cat.fixtures) {
            if (f.status != FixtureStatus::SignAdjudicated) continue;
            p = p && verify_system(f.printed, ckv).passed;
            a = a && verify_system(f.adjudicated, ckv).passed;
        }
        report.sites.push_back({"special conformal fields, relative sign", "+", "-", "flat conformal Killing operator", p, a});
    }
    return report;
}

}  // namespace bggpoly

#endif
