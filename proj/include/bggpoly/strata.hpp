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

#ifndef BGGPOLY_STRATA_HPP
#define BGGPOLY_STRATA_HPP

// Pointwise P-type classification of solution systems on sample grids.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bggpoly/bggsolve/solve.hpp"

namespace bggpoly {

using Point = std::vector<Rational>;

/// Either a tensor grid of per_axis evenly spaced values in [-bound, bound]
/// (the single value 0 when per_axis is 1), or an explicit point list.
struct SampleSpec {
    std::size_t per_axis = 1;
    Rational bound;
    std::vector<Point> explicit_points;

    static SampleSpec grid(std::size_t per_axis, Rational bound) {
        if (per_axis < 1) throw std::invalid_argument("grid: need at least one point per axis");
        if (bound.sign() < 0) throw std::invalid_argument("grid: bound must be nonnegative");
        return {per_axis, std::move(bound), {}};
    }

    static SampleSpec points(std::vector<Point> pts) { return {0, Rational(0), std::move(pts)}; }

    /// "perAxis,bound", e.g. "5,2" or "3,1/2".
    static SampleSpec parse_grid(const std::string& text) {
        const auto comma = text.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("grid: expected <perAxis>,<bound>");
        const std::string count = text.substr(0, comma);
        if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("grid: perAxis must be a positive integer");
        return grid(std::stoul(count), Rational::parse(text.substr(comma + 1)));
    }

    [[nodiscard]] bool is_grid() const noexcept { return per_axis >= 1; }

    [[nodiscard]] std::vector<Rational> axis_values() const {
        if (per_axis == 1) return {Rational(0)};
        std::vector<Rational> v;
        const Rational step = bound * Rational(2) / Rational(static_cast<long>(per_axis - 1));
        for (std::size_t k = 0; k < per_axis; ++k) v.push_back(-bound + step * Rational(static_cast<long>(k)));
        return v;
    }

    /// All points, lexicographic in the axis order (x1 slowest).
    [[nodiscard]] std::vector<Point> enumerate(std::size_t n) const {
        if (!is_grid()) {
            for (const auto& p : explicit_points)
                if (p.size() != n) throw std::invalid_argument("sample point has the wrong dimension");
            return explicit_points;
        }
        const auto axis = axis_values();
        std::vector<Point> out{Point{}};
        for (std::size_t d = 0; d < n; ++d) {
            std::vector<Point> next;
            for (const auto& p : out)
                for (const auto& v : axis) {
                    Point q = p;
                    q.push_back(v);
                    next.push_back(std::move(q));
                }
            out = std::move(next);
        }
        return out;
    }
};

struct PointRecord {
    Point coords;
    std::vector<Rational> values;
    std::string tag;
};

struct PTypeReport {
    std::string scheme;
    std::vector<PointRecord> points;
    std::map<std::string, std::size_t> counts;

    [[nodiscard]] std::size_t total() const noexcept { return points.size(); }
};

/// Built-in schemes: "zero-nonzero" (tags "zero", "nonzero": whether every
/// slot vanishes) and "density-sign" (conformal single-slot systems; tags
/// "sigma>0", "sigma=0", "sigma<0").
inline PTypeReport classify_points(const SolutionSystem& sys, const SampleSpec& spec, const std::string& scheme) {
    const bool zero_nonzero = scheme == "zero-nonzero";
    const bool density_sign = scheme == "density-sign";
    if (!zero_nonzero && !density_sign) throw std::invalid_argument("unknown strata scheme '" + scheme + "'");
    if (density_sign && (!sys.geometry.is_conformal() || sys.slots.size() != 1))
        throw std::invalid_argument("density-sign needs a conformal density system");

    PTypeReport report{scheme, {}, {}};
    if (zero_nonzero) report.counts = {{"nonzero", 0}, {"zero", 0}};
    else report.counts = {{"sigma<0", 0}, {"sigma=0", 0}, {"sigma>0", 0}};
    for (auto& p : spec.enumerate(sys.variable_count())) {
        PointRecord rec{std::move(p), {}, {}};
        for (const auto& s : sys.slots) rec.values.push_back(s.poly.evaluate(rec.coords));
        if (zero_nonzero) {
            bool all_zero = true;
            for (const auto& v : rec.values) all_zero = all_zero && v.is_zero();
            rec.tag = all_zero ? "zero" : "nonzero";
        } else {
            const int s = rec.values.front().sign();
            rec.tag = s > 0 ? "sigma>0" : s == 0 ? "sigma=0" : "sigma<0";
        }
        ++report.counts[rec.tag];
        report.points.push_back(std::move(rec));
    }
    return report;
}

/// The tractor norm of exp(-rho(X)) v0 equals <v0, v0> at every sample point.
inline bool gtype_consistency(const Representation& rep, const TractorVector& v0, const SampleSpec& spec) {
    const MultiPoly norm = tractor_norm(rep, v0);
    const RatMatrix& g = *rep.form;
    Rational expected;
    for (std::size_t a = 0; a < rep.dim(); ++a)
        for (std::size_t b = 0; b < rep.dim(); ++b) expected += v0.coords[a] * g(a, b) * v0.coords[b];
    for (const auto& p : spec.enumerate(rep.variable_count()))
        if (!(norm.evaluate(p) == expected)) return false;
    return true;
}

}  // namespace bggpoly

#endif
