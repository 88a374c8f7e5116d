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

// Runs every acceptance criterion, printing one PASS/FAIL line each.
//   acceptance [path/to/bggpoly]
// Without the CLI path the determinism criterion runs in-process only.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "bggpoly/cli/command.hpp"

using namespace bggpoly;

namespace {

struct Case {
    GeometryKind kind;
    std::string rep;
};

// Collects failure reasons for one criterion.
struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::string label(const GeometryKind& kind, const std::string& rep) { return kind.str() + " " + rep; }

Representation rep_of(const GeometryKind& kind, const std::string& descriptor) {
    return build_representation(build_model(kind), descriptor);
}

std::vector<GeometryKind> conformal_kinds(std::size_t lo, std::size_t hi) {
    std::vector<GeometryKind> out;
    for (std::size_t n = lo; n <= hi; ++n)
        for (std::size_t p = 0; p <= n; ++p) out.push_back(GeometryKind::conformal(p, n - p));
    return out;
}

std::vector<Case> degree_cases() {
    std::vector<Case> out;
    for (std::size_t n = 2; n <= 4; ++n) {
        const GeometryKind kind = GeometryKind::projective(n);
        out.push_back({kind, "std"});
        out.push_back({kind, "dual(std)"});
        for (std::size_t r = 2; r <= std::min<std::size_t>(3, n); ++r) out.push_back({kind, "ext(" + std::to_string(r) + ",std)"});
        for (std::size_t k = 2; k <= 3; ++k) out.push_back({kind, "sym(" + std::to_string(k) + ",dual(std))"});
    }
    for (const auto& kind : conformal_kinds(2, 4)) {
        out.push_back({kind, "std"});
        for (std::size_t r = 2; r <= 3; ++r) out.push_back({kind, "ext(" + std::to_string(r) + ",std)"});
    }
    return out;
}

std::vector<PolyTensorField> fields_of(const std::vector<SolutionSystem>& systems, FieldKind kind) {
    std::vector<PolyTensorField> out;
    for (const auto& s : systems) out.push_back(field_from_solution(s, kind));
    return out;
}

Check degree_bound() {
    Check c;
    for (const auto& [kind, d] : degree_cases()) {
        const Representation rep = rep_of(kind, d);
        const auto basis = solution_basis(rep);
        for (const auto& s : basis) c.expect(s.max_degree() <= static_cast<int>(rep.depth), label(kind, d) + ": degree above N");
        c.expect(degree_bound_attained(rep, basis), label(kind, d) + ": degree N not attained");
    }
    return c;
}

Check nilpotency() {
    Check c;
    for (const auto& [kind, d] : degree_cases()) {
        const Representation rep = rep_of(kind, d);
        c.expect(nilpotency_check(rep), label(kind, d) + ": rho^(N+1) != 0");
        c.expect(!mat_mul_pow(rho_symbolic(rep), rep.depth).is_zero(), label(kind, d) + ": rho^N == 0");
    }
    return c;
}

Check dimensions() {
    Check c;
    const auto expect_dim = [&](const GeometryKind& kind, const std::string& d, std::size_t expected) {
        const Representation rep = rep_of(kind, d);
        const std::size_t got = span_dimension(solution_basis(rep));
        c.expect(got == rep.dim() && got == expected,
                 label(kind, d) + ": span " + std::to_string(got) + ", expected " + std::to_string(expected));
    };
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t r = 1; r <= n + 1; ++r)
            expect_dim(GeometryKind::projective(n), r == 1 ? "std" : "ext(" + std::to_string(r) + ",std)", binomial(n + 1, r));
    for (const auto& kind : conformal_kinds(2, 4))
        for (std::size_t r = 0; r <= std::min<std::size_t>(3, kind.dimension()); ++r)
            expect_dim(kind, r == 0 ? "std" : "ext(" + std::to_string(r + 1) + ",std)", binomial(kind.dimension() + 2, r + 1));
    expect_dim(GeometryKind::conformal(3, 0), "ext(2,std)", 10);
    expect_dim(GeometryKind::conformal(2, 1), "ext(2,std)", 10);
    expect_dim(GeometryKind::projective(3), "cartanS2L2", 20);
    return c;
}

std::vector<Case> catalog_cases() {
    const GeometryKind p3 = GeometryKind::projective(3);
    std::vector<Case> out = {{p3, "std"}, {p3, "ext(2,std)"}, {p3, "ext(2,dual(std))"}, {p3, "cartanS2L2"}};
    for (const auto& kind : {GeometryKind::conformal(3, 0), GeometryKind::conformal(2, 1)})
        for (const auto& d : {"std", "ext(2,std)", "ext(3,std)"}) out.push_back({kind, d});
    return out;
}

Check catalog_spans() {
    Check c;
    for (const auto& [kind, d] : catalog_cases()) {
        const Catalog cat = catalog(kind, d);
        c.expect(same_span(solution_basis(rep_of(kind, d)), cat.adjudicated()), label(kind, d) + ": catalog span differs");
    }
    return c;
}

Check oracle_verification() {
    Check c;
    const auto all_pass = [&](const std::vector<SolutionSystem>& systems, const OperatorSpec& op, const std::string& what) {
        for (const auto& s : systems) c.expect(verify_system(s, op).passed, what + ": " + op.str() + " fails");
    };
    const OperatorSpec killing{OperatorKind::Killing};
    for (std::size_t n = 2; n <= 4; ++n) {
        const GeometryKind kind = GeometryKind::projective(n);
        for (const auto& d : {"ext(2,dual(std))", "cartanS2L2"}) {
            all_pass(solution_basis(rep_of(kind, d)), killing, label(kind, d));
            if (n == 3) all_pass(catalog(kind, d).adjudicated(), killing, label(kind, d) + " catalog");
        }
        for (std::size_t k = 1; k <= 3; ++k) {
            const std::string d = k == 1 ? "dual(std)" : "sym(" + std::to_string(k) + ",dual(std))";
            all_pass(solution_basis(rep_of(kind, d)), OperatorSpec{OperatorKind::HigherDensity, k + 1}, label(kind, d));
        }
    }
    for (const auto& kind : conformal_kinds(2, 4)) {
        const auto densities = solution_basis(rep_of(kind, "std"));
        c.expect(densities.size() == kind.dimension() + 2, label(kind, "std") + ": wrong density count");
        all_pass(densities, OperatorSpec{OperatorKind::TracefreeHessian}, label(kind, "std"));
        all_pass(solution_basis(rep_of(kind, "ext(2,std)")), OperatorSpec{OperatorKind::ConformalKillingVector}, label(kind, "ext(2,std)"));
        for (std::size_t r = 3; r <= kind.dimension(); ++r) {
            const std::string d = "ext(" + std::to_string(r) + ",std)";
            all_pass(solution_basis(rep_of(kind, d)), OperatorSpec{OperatorKind::ConformalKillingForm}, label(kind, d));
        }
    }
    for (const auto& kind : {GeometryKind::conformal(3, 0), GeometryKind::conformal(2, 1)}) {
        all_pass(catalog(kind, "std").adjudicated(), OperatorSpec{OperatorKind::TracefreeHessian}, label(kind, "std catalog"));
        all_pass(catalog(kind, "ext(2,std)").adjudicated(), OperatorSpec{OperatorKind::ConformalKillingVector}, label(kind, "ext(2,std) catalog"));
        all_pass(catalog(kind, "ext(3,std)").adjudicated(), OperatorSpec{OperatorKind::ConformalKillingForm}, label(kind, "ext(3,std) catalog"));
    }
    return c;
}

Check kernel_completeness() {
    Check c;
    const auto check = [&](const OperatorSpec& op, const PolyTensorField& prototype, const FlatMetric& g, const GeometryKind& kind,
                           const std::string& d, FieldKind fk) {
        const Representation rep = rep_of(kind, d);
        const OperatorKernel k = operator_kernel(op, prototype, g, static_cast<unsigned>(rep.depth));
        c.expect(k.basis.size() == rep.dim(), label(kind, d) + ": kernel dimension " + std::to_string(k.basis.size()) +
                                                   ", expected " + std::to_string(rep.dim()));
        c.expect(spans_kernel(k, fields_of(solution_basis(rep), fk)), label(kind, d) + ": generated span is not the kernel");
    };
    const OperatorSpec killing{OperatorKind::Killing};
    for (std::size_t n = 2; n <= 3; ++n) {
        const GeometryKind kind = GeometryKind::projective(n);
        check(killing, PolyTensorField(FieldKind::Symmetric, n, 1), FlatMetric::euclidean(n), kind, "ext(2,dual(std))", FieldKind::Symmetric);
        check(killing, PolyTensorField(FieldKind::Symmetric, n, 2), FlatMetric::euclidean(n), kind, "cartanS2L2", FieldKind::Symmetric);
    }
    c.expect(rep_of(GeometryKind::projective(3), "cartanS2L2").dim() == 20, "projective:3 cartanS2L2: dimension is not 20");
    for (const auto& kind : conformal_kinds(3, 3))
        check(OperatorSpec{OperatorKind::ConformalKillingVector}, PolyTensorField(FieldKind::Vector, 3, 1), FlatMetric::of(kind), kind,
              "ext(2,std)", FieldKind::Vector);
    return c;
}

Check homogeneous_coordinates() {
    Check c;
    for (std::size_t n = 2; n <= 4; ++n) {
        const GeometryKind kind = GeometryKind::projective(n);
        const HomogCoords h = homog_coords(kind);
        const Representation dual = rep_of(kind, "dual(std)");
        for (std::size_t i = 0; i <= n; ++i) {
            if (i > 0)
                c.expect(h.coords[i] == MultiPoly::variable(n, i - 1) * h.coords[0], kind.str() + ": X^i != x_i X^0");
            const SolutionSystem s = solution_from_tractor(dual, TractorVector::basis(n + 1, i));
            c.expect(s.slots.front().poly == h.coords[i], kind.str() + ": X^" + std::to_string(i) + " is not the projected coframe");
        }
    }
    for (const auto& kind : conformal_kinds(2, 4)) {
        const HomogCoords h = homog_coords(kind);
        c.expect(quadric_residual(h).is_zero(), kind.str() + ": quadric identity fails");
        const Representation rep = rep_of(kind, "std");
        // X^i is the projection of the parallel frame vector paired with s_i by J
        for (std::size_t i = 0; i < rep.dim(); ++i) {
            const std::size_t partner = i == 0 ? rep.dim() - 1 : i == rep.dim() - 1 ? 0 : i;
            const SolutionSystem s = solution_from_tractor(rep, TractorVector::basis(rep.dim(), partner));
            c.expect(s.slots.front().poly == h.coords[i], kind.str() + ": X^" + std::to_string(i) + " is not the projected frame");
        }
    }
    return c;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Check sign_adjudication() {
    Check c;
    for (const auto& [kind, file] : {std::pair{GeometryKind::conformal(3, 0), "sign_adjudication_3_0.json"},
                                     std::pair{GeometryKind::conformal(2, 1), "sign_adjudication_2_1.json"}}) {
        const AdjudicationReport report = sign_adjudication_report(kind);
        const std::size_t n = kind.dimension();
        c.expect(report.entries_checked == (n + 2) * (n + 2), kind.str() + ": not every exponential entry checked");
        c.expect(report.exponential_mismatches.size() == 1, kind.str() + ": expected exactly one mismatching entry");
        if (report.exponential_mismatches.size() == 1) {
            const auto& m = report.exponential_mismatches.front();
            MultiPoly minus_half_q(n);
            const auto eps = kind.signature();
            for (std::size_t i = 0; i < n; ++i)
                minus_half_q -= MultiPoly::variable(n, i) * MultiPoly::variable(n, i) * Rational(eps[i], 2);
            c.expect(m.row == n + 1 && m.col == 0, kind.str() + ": mismatch is not the bottom-left entry");
            c.expect(m.oracle == minus_half_q, kind.str() + ": oracle bottom-left is not -Q/2");
        }
        for (const auto& s : report.sites) {
            c.expect(s.adjudicated_passes, kind.str() + ": adjudicated form fails at " + s.site);
            c.expect(!s.printed_passes, kind.str() + ": printed form passes at " + s.site);
        }
        const OperatorSpec ckv{OperatorKind::ConformalKillingVector};
        for (const auto& f : catalog(kind, "ext(2,std)").fixtures)
            if (f.family == "special conformal")
                c.expect(!verify_system(f.printed, ckv).passed, kind.str() + ": printed " + f.name + " passes");
        const std::string frozen = read_file(std::filesystem::path(BGGPOLY_FIXTURE_DIR) / file);
        c.expect(!frozen.empty() && frozen == io::dump(io::to_json(report)), kind.str() + ": report differs from frozen " + file);
    }
    return c;
}

std::vector<std::vector<std::string>> determinism_commands() {
    return {
        {"model", "--geometry", "conformal:3,1"},
        {"model", "--geometry", "projective:3", "--format", "text"},
        {"basis", "--geometry", "projective:3", "--rep", "cartanS2L2"},
        {"basis", "--geometry", "conformal:2,1", "--rep", "ext(3,std)", "--format", "text"},
        {"solution", "--geometry", "conformal:2,1", "--rep", "ext(2,std)", "--tractor", "1,-2,3/4,0,5,0,0,1,0,2"},
        {"verify", "--geometry", "conformal:3,0", "--rep", "ext(2,std)", "--tractor", "0,0,0,0,0,0,0,0,0,1", "--operator",
         "conformal-killing-vector"},
        {"verify", "--geometry", "projective:2", "--rep", "sym(2,dual(std))", "--tractor", "0,0,0,1,0,0", "--operator", "higher-density:2"},
        {"catalog", "--geometry", "conformal:2,1", "--rep", "ext(2,std)"},
        {"catalog", "--geometry", "projective:3", "--rep", "cartanS2L2", "--format", "text"},
        {"strata", "--geometry", "conformal:2,0", "--rep", "std", "--tractor", "1,0,0,1", "--scheme", "density-sign"},
        {"strata", "--geometry", "conformal:2,1", "--rep", "ext(2,std)", "--tractor", "1,0,0,0,0,0,0,0,0,1", "--grid", "3,1"},
    };
}

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    return out + "'";
}

Check determinism(const std::string& cli_path) {
    Check c;
    const auto dir = std::filesystem::temp_directory_path() / ("bggpoly_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::size_t k = 0;
    for (const auto& args : determinism_commands()) {
        if (cli_path.empty()) break;
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            const auto out = dir / ("out" + std::to_string(k) + "_" + std::to_string(run));
            std::string cmd = quote(cli_path);
            for (const auto& a : args) cmd += " " + quote(a);
            cmd += " > " + quote(out.string()) + " 2>&1";
            const int status = std::system(cmd.c_str());
            c.expect(status != -1, "could not run " + cmd);
            outputs[run] = read_file(out);
        }
        c.expect(!outputs[0].empty() && outputs[0] == outputs[1], "output differs between runs: " + args.front() + " #" + std::to_string(k));
        ++k;
    }
    std::filesystem::remove_all(dir);

    cli::CommandSpec spec;
    spec.subcommand = "basis";
    spec.geometry = "conformal:2,2";
    spec.rep = "ext(3,std)";
    c.expect(cli::run(spec).output == cli::run(spec).output, "in-process basis output differs between runs");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";
    struct Criterion {
        const char* name;
        double limit_seconds;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {"degree bound", 60, degree_bound},
        {"nilpotency", 60, nilpotency},
        {"solution-space dimensions", 60, dimensions},
        {"catalog span equality", 120, catalog_spans},
        {"oracle verification", 120, oracle_verification},
        {"kernel completeness", 120, kernel_completeness},
        {"homogeneous-coordinate identities", 10, homogeneous_coordinates},
        {"sign adjudication record", 60, sign_adjudication},
        {"determinism", 60, [&] { return determinism(cli_path); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = criteria[i].run();
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > criteria[i].limit_seconds) c.failures.push_back("took " + std::to_string(secs) + " s");
        const bool ok = c.failures.empty();
        if (!ok) ++failed;
        std::printf("%s criterion %zu (%s) %.2fs\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs);
        for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    }
    if (cli_path.empty()) std::printf("note: no CLI path given, determinism checked in-process only\n");
    return failed == 0 ? 0 : 1;
}
