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

#include <gtest/gtest.h>

#include <random>

#include "bggpoly/descriptor.hpp"
#include "bggpoly/strata.hpp"
#include "support.hpp"

using namespace bggpoly;

namespace {

Representation rep_of(const GeometryKind& kind, const std::string& descriptor) {
    return build_representation(build_model(kind), descriptor);
}

}  // namespace

TEST(SampleSpec, GridValues) {
    const auto axis = SampleSpec::parse_grid("5,2").axis_values();
    ASSERT_EQ(axis.size(), 5u);
    for (int k = 0; k < 5; ++k) EXPECT_EQ(axis[k], Rational(k - 2));
    EXPECT_EQ(SampleSpec::parse_grid("3,1/2").axis_values().front(), Rational(-1, 2));
    EXPECT_EQ(SampleSpec::parse_grid("1,7").axis_values(), std::vector<Rational>{Rational(0)});
    EXPECT_EQ(SampleSpec::parse_grid("4,1").enumerate(3).size(), 64u);
    const auto pts = SampleSpec::parse_grid("2,1").enumerate(2);
    EXPECT_EQ(pts.front(), (Point{Rational(-1), Rational(-1)}));
    EXPECT_EQ(pts[1], (Point{Rational(-1), Rational(1)}));
    for (const auto& bad : {"5", "x,2", "0,2", "5,-1", ",2", "5,1/0"})
        EXPECT_THROW(SampleSpec::parse_grid(bad), std::invalid_argument) << bad;
    EXPECT_THROW(SampleSpec::points({{Rational(1)}}).enumerate(2), std::invalid_argument);
}

// sigma = 1 - (x1^2 + x2^2)/2 on the 5x5 grid over [-2, 2].
TEST(ClassifyPoints, DensitySignExample) {
    const Representation rep = rep_of(GeometryKind::conformal(2, 0), "std");
    const SolutionSystem s = solution_from_tractor(rep, TractorVector{{Rational(1), Rational(0), Rational(0), Rational(1)}});
    ASSERT_EQ(s.slots.front().poly.str(), "-1/2*x1^2 - 1/2*x2^2 + 1");
    const PTypeReport r = classify_points(s, SampleSpec::parse_grid("5,2"), "density-sign");

    std::map<std::string, std::size_t> oracle{{"sigma<0", 0}, {"sigma=0", 0}, {"sigma>0", 0}};
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            const int twice = 2 - a * a - b * b;
            ++oracle[twice > 0 ? "sigma>0" : twice == 0 ? "sigma=0" : "sigma<0"];
        }
    EXPECT_EQ(r.counts, oracle);
    EXPECT_EQ(r.counts.at("sigma=0"), 4u);
    EXPECT_EQ(r.total(), 25u);
    const auto zero = classify_points(s, SampleSpec::parse_grid("5,2"), "zero-nonzero");
    EXPECT_EQ(zero.counts.at("zero"), 4u);
}

TEST(ClassifyPoints, ZeroTractorAndConstantField) {
    const Representation rep = rep_of(GeometryKind::conformal(2, 1), "ext(2,std)");
    const SolutionSystem zero = solution_from_tractor(rep, TractorVector{std::vector<Rational>(rep.dim())});
    const PTypeReport all = classify_points(zero, SampleSpec::parse_grid("3,1"), "zero-nonzero");
    EXPECT_EQ(all.counts.at("zero"), 27u);
    EXPECT_EQ(all.counts.at("nonzero"), 0u);

    // the translation field xi = e_1 never vanishes
    const auto basis = solution_basis(rep);
    bool found = false;
    for (const auto& s : basis) {
        if (s.max_degree() != 0) continue;
        found = true;
        EXPECT_EQ(classify_points(s, SampleSpec::parse_grid("3,1"), "zero-nonzero").counts.at("zero"), 0u);
    }
    EXPECT_TRUE(found);
}

TEST(ClassifyPoints, ProjectiveConstantVectorFieldHasNoZeros) {
    const Representation rep = rep_of(GeometryKind::projective(2), "std");
    const SolutionSystem xi1 = solution_from_tractor(rep, TractorVector::basis(3, 1));
    const PTypeReport r = classify_points(xi1, SampleSpec::parse_grid("5,2"), "zero-nonzero");
    EXPECT_EQ(r.counts.at("zero"), 0u);
    EXPECT_EQ(r.counts.at("nonzero"), 25u);
}

TEST(ClassifyPoints, ConstantDensityHasEmptyZeroStratum) {
    const Representation rep = rep_of(GeometryKind::conformal(3, 0), "std");
    const SolutionSystem one = solution_from_tractor(rep, TractorVector::basis(rep.dim(), rep.dim() - 1));
    ASSERT_EQ(one.slots.front().poly.str(), "1");
    const PTypeReport r = classify_points(one, SampleSpec::parse_grid("5,2"), "density-sign");
    EXPECT_EQ(r.counts.at("sigma=0"), 0u);
    EXPECT_EQ(r.counts.at("sigma>0"), 125u);
}

TEST(ClassifyPoints, ExplicitPointsAndErrors) {
    const Representation rep = rep_of(GeometryKind::conformal(2, 0), "std");
    const SolutionSystem s = solution_from_tractor(rep, TractorVector::basis(4, 0));
    const PTypeReport r = classify_points(s, SampleSpec::points({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}), "density-sign");
    ASSERT_EQ(r.points.size(), 2u);
    EXPECT_EQ(r.points[0].tag, "sigma=0");
    EXPECT_EQ(r.points[1].tag, "sigma<0");
    EXPECT_EQ(r.points[1].values.front(), Rational(-1, 2));
    EXPECT_THROW(classify_points(s, SampleSpec::parse_grid("3,1"), "sign"), std::invalid_argument);
    const SolutionSystem proj = solution_from_tractor(rep_of(GeometryKind::projective(2), "dual(std)"), TractorVector::basis(3, 0));
    EXPECT_THROW(classify_points(proj, SampleSpec::parse_grid("3,1"), "density-sign"), std::invalid_argument);
    const SolutionSystem vec = solution_basis(rep_of(GeometryKind::conformal(2, 0), "ext(2,std)")).front();
    EXPECT_THROW(classify_points(vec, SampleSpec::parse_grid("3,1"), "density-sign"), std::invalid_argument);
}

TEST(GTypeConsistency, RandomTractors) {
    std::mt19937 rng(47);
    for (const auto& kind : {GeometryKind::conformal(2, 0), GeometryKind::conformal(2, 1)})
        for (const auto& d : {"std", "ext(2,std)"}) {
            const Representation rep = rep_of(kind, d);
            for (int trial = 0; trial < 4; ++trial) {
                TractorVector v;
                for (std::size_t i = 0; i < rep.dim(); ++i) v.coords.push_back(bggpoly::testing::random_rational(rng));
                EXPECT_TRUE(gtype_consistency(rep, v, SampleSpec::parse_grid("3,2")));
            }
        }
}

TEST(ClassifyPointsProperty, TagsAgreeWithValues) {
    std::mt19937 rng(53);
    const Representation rep = rep_of(GeometryKind::conformal(2, 1), "std");
    for (int trial = 0; trial < 5; ++trial) {
        TractorVector v;
        for (std::size_t i = 0; i < rep.dim(); ++i) v.coords.push_back(bggpoly::testing::random_rational(rng));
        const SolutionSystem s = solution_from_tractor(rep, v);
        const PTypeReport r = classify_points(s, SampleSpec::parse_grid("3,1"), "density-sign");
        std::size_t sum = 0;
        for (const auto& [tag, k] : r.counts) sum += k;
        EXPECT_EQ(sum, r.total());
        for (const auto& p : r.points) {
            EXPECT_EQ(p.values.front(), s.slots.front().poly.evaluate(p.coords));
            const int sign = p.values.front().sign();
            EXPECT_EQ(p.tag, sign > 0 ? "sigma>0" : sign == 0 ? "sigma=0" : "sigma<0");
        }
    }
}
