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

#include "bggpoly/bggsolve/catalog.hpp"
#include "bggpoly/flatverify.hpp"

using namespace bggpoly;

namespace {

Representation rep_of(const GeometryKind& kind, const std::string& descriptor) {
    return build_representation(build_model(kind), descriptor);
}

MultiPoly x(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i - 1); }
MultiPoly c(std::size_t n, long v) { return MultiPoly::constant(n, Rational(v)); }

PolyTensorField vector_field(const std::vector<MultiPoly>& comps) {
    PolyTensorField f(FieldKind::Vector, comps.size(), 1);
    for (std::size_t i = 0; i < comps.size(); ++i) f.set({i}, comps[i]);
    return f;
}

// p(sub_1, ..., sub_n)
MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& sub) {
    const std::size_t n = sub.front().variable_count();
    MultiPoly out(n);
    for (const auto& [e, coeff] : p.terms()) {
        MultiPoly t = MultiPoly::constant(n, coeff);
        for (std::size_t v = 0; v < e.size(); ++v)
            for (unsigned k = 0; k < e[v]; ++k) t = t * sub[v];
        out += t;
    }
    return out;
}

std::vector<PolyTensorField> fields_of(const Representation& rep, FieldKind kind) {
    std::vector<PolyTensorField> out;
    for (const auto& s : solution_basis(rep)) out.push_back(field_from_solution(s, kind));
    return out;
}

}  // namespace

TEST(PolyTensorField, AlternatingSignsAndSymmetricOrder) {
    PolyTensorField a(FieldKind::Alternating, 3, 2);
    a.set({1, 0}, x(3, 1));
    EXPECT_EQ(a.component({0, 1}), -x(3, 1));
    EXPECT_TRUE(a.component({1, 1}).is_zero());
    EXPECT_THROW(a.set({2, 2}, x(3, 1)), std::invalid_argument);
    PolyTensorField s(FieldKind::Symmetric, 3, 2);
    s.set({2, 0}, x(3, 2));
    EXPECT_EQ(s.component({0, 2}), x(3, 2));
    EXPECT_EQ(s.shape().size(), 6u);
    EXPECT_EQ(a.shape().size(), 3u);
    EXPECT_THROW(s.set({0, 5}, x(3, 1)), std::out_of_range);
}

TEST(KillingCheck, Examples) {
    // rotation covector x2 dx1 - x1 dx2 is Killing, x1 dx1 is not
    PolyTensorField rot(FieldKind::Symmetric, 2, 1);
    rot.set({0}, x(2, 2));
    rot.set({1}, -x(2, 1));
    EXPECT_TRUE(killing_check(rot));
    PolyTensorField radial(FieldKind::Symmetric, 2, 1);
    radial.set({0}, x(2, 1));
    const auto res = killing_residuals(radial);
    ASSERT_EQ(res.size(), 1u);
    EXPECT_EQ(res[0].index, (MultiIndex{0, 0}));
    // symmetric product of two Killing covectors is a Killing tensor
    PolyTensorField t(FieldKind::Symmetric, 2, 2);
    t.set({0, 0}, x(2, 2) * x(2, 2));
    t.set({0, 1}, -x(2, 1) * x(2, 2));
    t.set({1, 1}, x(2, 1) * x(2, 1));
    EXPECT_TRUE(killing_check(t));
    EXPECT_THROW(killing_check(vector_field({x(2, 1), x(2, 2)})), std::invalid_argument);
}

TEST(ConformalKillingVectorCheck, Examples) {
    const FlatMetric e3 = FlatMetric::euclidean(3);
    EXPECT_TRUE(conformal_killing_vector_check(vector_field({x(3, 1), x(3, 2), x(3, 3)}), e3));
    EXPECT_TRUE(conformal_killing_vector_check(vector_field({-x(3, 2), x(3, 1), c(3, 0)}), e3));
    EXPECT_FALSE(conformal_killing_vector_check(vector_field({x(3, 1), c(3, 0), c(3, 0)}), e3));
    // z^2 is conformal in two dimensions but x1^2 d1 alone is not
    const FlatMetric e2 = FlatMetric::euclidean(2);
    EXPECT_TRUE(conformal_killing_vector_check(vector_field({x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2), x(2, 1) * x(2, 2) * Rational(2)}), e2));
    EXPECT_FALSE(conformal_killing_vector_check(vector_field({x(2, 1) * x(2, 1), c(2, 0)}), e2));
    // boosts are Killing in signature (1,1), rotations are not
    const FlatMetric lorentz{{1, -1}};
    EXPECT_TRUE(conformal_killing_vector_check(vector_field({x(2, 2), x(2, 1)}), lorentz));
    EXPECT_FALSE(conformal_killing_vector_check(vector_field({x(2, 2), -x(2, 1)}), lorentz));
}

// xi = (1/2) Q d_i - eps_i x_i sum_j x_j d_j is conformal; flipping the
// relative sign is not.
TEST(ConformalKillingVectorCheck, SpecialConformalSign) {
    for (const auto& g : {FlatMetric::euclidean(3), FlatMetric{{1, 1, -1}}, FlatMetric{{1, -1, -1, 1}}}) {
        const std::size_t n = g.dimension();
        MultiPoly q(n);
        for (std::size_t j = 1; j <= n; ++j) q += x(n, j) * x(n, j) * Rational(g.eps[j - 1]);
        for (std::size_t i = 1; i <= n; ++i) {
            std::vector<MultiPoly> good, bad;
            for (std::size_t j = 1; j <= n; ++j) {
                const MultiPoly radial = x(n, i) * x(n, j) * Rational(g.eps[i - 1]);
                const MultiPoly half = j == i ? q * Rational(1, 2) : c(n, 0);
                good.push_back(half - radial);
                bad.push_back(half + radial);
            }
            EXPECT_TRUE(conformal_killing_vector_check(vector_field(good), g)) << "i=" << i;
            EXPECT_FALSE(conformal_killing_vector_check(vector_field(bad), g)) << "i=" << i;
        }
    }
}

TEST(TracefreeHessianCheck, Examples) {
    const FlatMetric g = FlatMetric::euclidean(2);
    EXPECT_TRUE(tracefree_hessian_check(x(2, 1) * x(2, 1) + x(2, 2) * x(2, 2), g));
    EXPECT_TRUE(tracefree_hessian_check(x(2, 1) + c(2, 3), g));
    EXPECT_FALSE(tracefree_hessian_check(x(2, 1) * x(2, 2), g));
    EXPECT_FALSE(tracefree_hessian_check(x(2, 1) * x(2, 1) + x(2, 2) * x(2, 2), FlatMetric{{1, -1}}));
    EXPECT_TRUE(tracefree_hessian_check(x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2), FlatMetric{{1, -1}}));
}

TEST(HigherDensityCheck, Examples) {
    const MultiPoly cubic = x(2, 1) * x(2, 1) * x(2, 2);
    EXPECT_TRUE(higher_density_check(cubic, 4));
    EXPECT_FALSE(higher_density_check(cubic, 3));
    const auto res = higher_density_residuals(cubic, 3);
    ASSERT_EQ(res.size(), 1u);
    EXPECT_EQ(res[0].index, (MultiIndex{0, 0, 1}));
    EXPECT_EQ(res[0].value.str(), "2");
    EXPECT_THROW(higher_density_check(cubic, 0), std::invalid_argument);
}

TEST(ConformalKillingFormCheck, Examples) {
    // constant forms and duals of rotations are conformal Killing
    const FlatMetric g = FlatMetric::euclidean(3);
    PolyTensorField dx12(FieldKind::Alternating, 3, 2);
    dx12.set({0, 1}, c(3, 1));
    EXPECT_TRUE(conformal_killing_form_check(dx12, g));
    PolyTensorField rot(FieldKind::Alternating, 3, 1);
    rot.set({0}, -x(3, 2));
    rot.set({1}, x(3, 1));
    EXPECT_TRUE(conformal_killing_form_check(rot, g));
    PolyTensorField bad(FieldKind::Alternating, 3, 2);
    bad.set({0, 1}, x(3, 1));
    EXPECT_FALSE(conformal_killing_form_check(bad, g));
    PolyTensorField top(FieldKind::Alternating, 3, 3);
    EXPECT_THROW(conformal_killing_form_check(top, g), std::invalid_argument);
}

TEST(CoordinateIndices, Labels) {
    EXPECT_EQ(coordinate_indices("e1^e4", 3), (MultiIndex{0}));
    EXPECT_EQ(coordinate_indices("e0*^e2*", 3), (MultiIndex{1}));
    EXPECT_EQ(coordinate_indices("(e0*^e1*).(e0*^e3*)", 3), (MultiIndex{0, 2}));
    EXPECT_EQ(coordinate_indices("e10^e11", 10), (MultiIndex{9}));
}

TEST(OperatorSpec, ParseAndPrint) {
    for (const auto& name : {"killing", "conformal-killing-vector", "conformal-killing-form", "tracefree-hessian", "higher-density:3"})
        EXPECT_EQ(OperatorSpec::parse(name).str(), name);
    EXPECT_THROW(OperatorSpec::parse("higher-density:"), std::invalid_argument);
    EXPECT_THROW(OperatorSpec::parse("higher-density:0"), std::invalid_argument);
    EXPECT_THROW(OperatorSpec::parse("laplace"), std::invalid_argument);
}

TEST(VerifySystem, GeneratedSolutionsPass) {
    for (const auto& kind : {GeometryKind::conformal(3, 0), GeometryKind::conformal(2, 1), GeometryKind::conformal(2, 2)}) {
        for (const auto& s : solution_basis(rep_of(kind, "std")))
            EXPECT_TRUE(verify_system(s, OperatorSpec::parse("tracefree-hessian")).passed) << kind.str();
        for (const auto& s : solution_basis(rep_of(kind, "ext(2,std)")))
            EXPECT_TRUE(verify_system(s, OperatorSpec::parse("conformal-killing-vector")).passed) << kind.str();
        for (std::size_t r = 3; r <= kind.dimension(); ++r)
            for (const auto& s : solution_basis(rep_of(kind, "ext(" + std::to_string(r) + ",std)")))
                EXPECT_TRUE(verify_system(s, OperatorSpec::parse("conformal-killing-form")).passed) << kind.str() << " r=" << r;
    }
    for (std::size_t n = 2; n <= 3; ++n) {
        const GeometryKind kind = GeometryKind::projective(n);
        for (const auto& s : solution_basis(rep_of(kind, "ext(2,dual(std))")))
            EXPECT_TRUE(verify_system(s, OperatorSpec::parse("killing")).passed);
        for (const auto& s : solution_basis(rep_of(kind, "cartanS2L2")))
            EXPECT_TRUE(verify_system(s, OperatorSpec::parse("killing")).passed);
        for (std::size_t k = 1; k <= 3; ++k) {
            const std::string d = k == 1 ? "dual(std)" : "sym(" + std::to_string(k) + ",dual(std))";
            for (const auto& s : solution_basis(rep_of(kind, d))) {
                EXPECT_TRUE(verify_system(s, OperatorSpec{OperatorKind::HigherDensity, k + 1}).passed) << d;
                EXPECT_LE(s.max_degree(), static_cast<int>(k));
            }
        }
    }
}

TEST(VerifySystem, WrongOperatorReportsResiduals) {
    const auto basis = solution_basis(rep_of(GeometryKind::conformal(2, 1), "std"));
    const VerifyReport r = verify_system(basis.front(), OperatorSpec{OperatorKind::HigherDensity, 2});
    EXPECT_FALSE(r.passed);
    EXPECT_FALSE(r.residuals.empty());
    EXPECT_THROW(verify_system(basis.front(), OperatorSpec::parse("conformal-killing-vector")), std::invalid_argument);
}

TEST(VerifySystem, SpecialConformalPrintedVersusAdjudicated) {
    for (const auto& kind : {GeometryKind::conformal(3, 0), GeometryKind::conformal(2, 1)}) {
        const OperatorSpec ckv{OperatorKind::ConformalKillingVector};
        for (const auto& f : catalog(kind, "ext(2,std)").fixtures) {
            EXPECT_TRUE(verify_system(f.adjudicated, ckv).passed) << f.name;
            if (f.status == FixtureStatus::SignAdjudicated) {
                EXPECT_FALSE(verify_system(f.printed, ckv).passed) << f.name;
            }
        }
    }
}

// The conformal Killing equations only see the conformal class, so flipping
// the overall sign of the metric keeps every solution a solution.
TEST(FlatOperatorProperty, SignatureFlip) {
    for (const auto& kind : {GeometryKind::conformal(3, 0), GeometryKind::conformal(2, 1), GeometryKind::conformal(3, 1)}) {
        FlatMetric flipped = FlatMetric::of(kind);
        for (auto& e : flipped.eps) e = -e;
        for (const auto& f : fields_of(rep_of(kind, "ext(2,std)"), FieldKind::Vector))
            EXPECT_TRUE(conformal_killing_vector_check(f, flipped)) << kind.str();
        for (const auto& f : fields_of(rep_of(kind, "ext(3,std)"), FieldKind::Alternating))
            EXPECT_TRUE(conformal_killing_form_check(f, flipped)) << kind.str();
        for (const auto& s : solution_basis(rep_of(kind, "std")))
            EXPECT_TRUE(tracefree_hessian_check(s.slots.front().poly, flipped)) << kind.str();
    }
}

// Reflecting x1 -> -x1 maps solutions to solutions once the field components
// carrying index 1 pick up the same sign.
TEST(FlatOperatorProperty, Reflection) {
    const GeometryKind kind = GeometryKind::conformal(2, 1);
    const std::size_t n = 3;
    const FlatMetric g = FlatMetric::of(kind);
    std::vector<MultiPoly> sub;
    for (std::size_t i = 1; i <= n; ++i) sub.push_back(i == 1 ? -x(n, 1) : x(n, i));
    for (const auto& f : fields_of(rep_of(kind, "ext(2,std)"), FieldKind::Vector)) {
        PolyTensorField r(FieldKind::Vector, n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            MultiPoly v = compose(f.component({i}), sub);
            r.set({i}, i == 0 ? -v : v);
        }
        EXPECT_TRUE(conformal_killing_vector_check(r, g));
    }
}

TEST(OperatorKernel, KillingCovectorsAndTensors) {
    for (std::size_t n = 2; n <= 3; ++n) {
        const OperatorSpec killing{OperatorKind::Killing};
        const Representation covectors = rep_of(GeometryKind::projective(n), "ext(2,dual(std))");
        const auto k1 = operator_kernel(killing, PolyTensorField(FieldKind::Symmetric, n, 1), FlatMetric::euclidean(n),
                                        static_cast<unsigned>(covectors.depth));
        EXPECT_EQ(k1.basis.size(), covectors.dim());
        EXPECT_TRUE(spans_kernel(k1, fields_of(covectors, FieldKind::Symmetric)));

        const Representation tensors = rep_of(GeometryKind::projective(n), "cartanS2L2");
        const auto k2 = operator_kernel(killing, PolyTensorField(FieldKind::Symmetric, n, 2), FlatMetric::euclidean(n),
                                        static_cast<unsigned>(tensors.depth));
        EXPECT_EQ(k2.basis.size(), tensors.dim());
        EXPECT_TRUE(spans_kernel(k2, fields_of(tensors, FieldKind::Symmetric)));
    }
    EXPECT_EQ(rep_of(GeometryKind::projective(3), "cartanS2L2").dim(), 20u);
}

TEST(OperatorKernel, ConformalKillingVectors) {
    for (const auto& kind : {GeometryKind::conformal(3, 0), GeometryKind::conformal(2, 1)}) {
        const Representation rep = rep_of(kind, "ext(2,std)");
        const auto k = operator_kernel(OperatorSpec{OperatorKind::ConformalKillingVector}, PolyTensorField(FieldKind::Vector, 3, 1),
                                       FlatMetric::of(kind), static_cast<unsigned>(rep.depth));
        EXPECT_EQ(k.basis.size(), 10u);
        EXPECT_TRUE(spans_kernel(k, fields_of(rep, FieldKind::Vector)));
    }
}

TEST(OperatorKernel, ConformalKillingForms) {
    for (const auto& kind : {GeometryKind::conformal(3, 0), GeometryKind::conformal(2, 1), GeometryKind::conformal(4, 0),
                             GeometryKind::conformal(2, 2)}) {
        const std::size_t n = kind.dimension();
        for (std::size_t r = 2; r + 1 <= n; ++r) {
            const Representation rep = rep_of(kind, "ext(" + std::to_string(r + 1) + ",std)");
            const auto k = operator_kernel(OperatorSpec{OperatorKind::ConformalKillingForm}, PolyTensorField(FieldKind::Alternating, n, r),
                                           FlatMetric::of(kind), static_cast<unsigned>(rep.depth));
            EXPECT_EQ(k.basis.size(), binomial(n + 2, r + 1)) << kind.str() << " r=" << r;
            EXPECT_TRUE(spans_kernel(k, fields_of(rep, FieldKind::Alternating))) << kind.str() << " r=" << r;
        }
    }
}

TEST(OperatorKernel, TracefreeHessianAndHigherDensity) {
    const GeometryKind kind = GeometryKind::conformal(2, 1);
    const Representation rep = rep_of(kind, "std");
    const auto k = operator_kernel(OperatorSpec{OperatorKind::TracefreeHessian}, PolyTensorField(FieldKind::Scalar, 3, 0),
                                   FlatMetric::of(kind), static_cast<unsigned>(rep.depth));
    EXPECT_EQ(k.basis.size(), 5u);
    EXPECT_TRUE(spans_kernel(k, fields_of(rep, FieldKind::Scalar)));

    const Representation dens = rep_of(GeometryKind::projective(3), "sym(3,dual(std))");
    const auto kd = operator_kernel(OperatorSpec{OperatorKind::HigherDensity, 4}, PolyTensorField(FieldKind::Scalar, 3, 0),
                                    FlatMetric::euclidean(3), static_cast<unsigned>(dens.depth));
    EXPECT_EQ(kd.basis.size(), 20u);
    EXPECT_TRUE(spans_kernel(kd, fields_of(dens, FieldKind::Scalar)));
}
