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

#ifndef BGGPOLY_CLI_COMMAND_HPP
#define BGGPOLY_CLI_COMMAND_HPP

// Subcommand dispatch, independent of argument parsing so it can be driven
// from tests.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bggpoly/io/json.hpp"

namespace bggpoly::cli {

enum class Format { Json, Text };

struct CommandSpec {
    std::string subcommand;
    std::optional<std::string> geometry;
    std::optional<std::string> rep;
    std::optional<std::string> tractor;
    std::optional<std::string> op;
    std::optional<std::string> grid;
    std::optional<std::string> scheme;
    std::optional<std::string> system_path;
    Format format = Format::Json;
    std::optional<std::string> out;
};

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

inline constexpr int kUsageError = 1;
inline constexpr int kVerificationFailed = 2;

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline std::vector<Rational> parse_tractor(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
    if (out.empty()) throw UsageError("--tractor: expected comma-separated rationals");
    return out;
}

namespace detail {

inline const std::string& need(const std::optional<std::string>& v, const char* flag, const std::string& sub) {
    if (!v) throw UsageError(sub + ": missing required flag " + flag);
    return *v;
}

inline std::string text_system(const SolutionSystem& s) {
    std::string out = s.geometry.str() + " " + s.rep + " N=" + std::to_string(s.degree_bound);
    if (!s.source.coords.empty()) {
        out += " tractor=";
        for (std::size_t i = 0; i < s.source.coords.size(); ++i) out += (i ? "," : "") + s.source.coords[i].str();
    }
    out += "\n";
    for (const auto& slot : s.slots) out += "  " + slot.label + ": " + slot.poly.str() + "\n";
    return out;
}

inline std::string text_matrix(const RatMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += "   ";
        for (std::size_t c = 0; c < m.cols(); ++c) out += " " + m(r, c).str();
        out += "\n";
    }
    return out;
}

inline CommandResult run_model(const CommandSpec& spec) {
    const GradedLieModel m = build_model(GeometryKind::parse(need(spec.geometry, "--geometry", "model")));
    if (spec.format == Format::Json) return {0, io::dump(io::to_json(m))};
    std::string out = m.kind.str() + " ambient_dim=" + std::to_string(m.ambient_dim) + "\n";
    for (std::size_t i = 0; i < m.generators.size(); ++i) out += "  B" + std::to_string(i + 1) + ":\n" + text_matrix(m.generators[i]);
    out += "  E:\n" + text_matrix(m.grading_element);
    if (m.form) out += "  J:\n" + text_matrix(*m.form);
    return {0, out};
}

inline Representation representation(const CommandSpec& spec, const std::string& sub) {
    const GradedLieModel m = build_model(GeometryKind::parse(need(spec.geometry, "--geometry", sub)));
    return build_representation(m, need(spec.rep, "--rep", sub));
}

inline SolutionSystem solution(const CommandSpec& spec, const std::string& sub) {
    const Representation rep = representation(spec, sub);
    TractorVector v{parse_tractor(need(spec.tractor, "--tractor", sub))};
    if (v.coords.size() != rep.dim())
        throw UsageError(sub + ": --tractor has " + std::to_string(v.coords.size()) + " entries, " + rep.descriptor +
                         " has dimension " + std::to_string(rep.dim()));
    return solution_from_tractor(rep, v);
}

inline CommandResult run_basis(const CommandSpec& spec) {
    const Representation rep = representation(spec, "basis");
    const auto systems = solution_basis(rep);
    if (spec.format == Format::Json) return {0, io::dump(io::basis_to_json(rep, systems))};
    std::string out = rep.kind.str() + " " + rep.descriptor + " dim=" + std::to_string(rep.dim()) +
                      " N=" + std::to_string(rep.depth) + "\n";
    for (const auto& s : systems) out += text_system(s);
    return {0, out};
}

inline CommandResult run_solution(const CommandSpec& spec) {
    const SolutionSystem s = solution(spec, "solution");
    return {0, spec.format == Format::Json ? io::dump(io::to_json(s)) : text_system(s)};
}

inline CommandResult run_verify(const CommandSpec& spec) {
    const OperatorSpec op = OperatorSpec::parse(need(spec.op, "--operator", "verify"));
    SolutionSystem sys = [&] {
        if (spec.system_path) {
            std::ifstream in(*spec.system_path);
            if (!in) throw UsageError("verify: cannot read " + *spec.system_path);
            io::Json j;
            try {
                j = io::Json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw UsageError("verify: " + *spec.system_path + " is not valid JSON: " + e.what());
            }
            return io::solution_from_json(j);
        }
        return solution(spec, "verify");
    }();
    const VerifyReport report = verify_system(sys, op);
    const int code = report.passed ? 0 : kVerificationFailed;
    if (spec.format == Format::Json) return {code, io::dump(io::to_json(report))};
    std::string out = report.op + (report.passed ? ": identity holds\n" : ": identity fails\n");
    for (const auto& r : report.residuals) {
        out += "  [";
        for (std::size_t k = 0; k < r.index.size(); ++k) out += (k ? "," : "") + std::to_string(r.index[k] + 1);
        out += "] " + r.value.str() + "\n";
    }
    return {code, out};
}

inline CommandResult run_catalog(const CommandSpec& spec) {
    const Catalog c = catalog(GeometryKind::parse(need(spec.geometry, "--geometry", "catalog")), need(spec.rep, "--rep", "catalog"));
    if (spec.format == Format::Json) return {0, io::dump(io::to_json(c))};
    std::string out = c.family_set + " (" + std::to_string(c.fixtures.size()) + " fixtures)\n";
    for (const auto& f : c.fixtures) {
        out += "- " + f.name + " [" + f.family + ", " + to_string(f.status) + "]\n";
        for (const auto& slot : f.adjudicated.slots)
            if (!slot.poly.is_zero()) out += "    " + slot.label + ": " + slot.poly.str() + "\n";
    }
    return {0, out};
}

inline CommandResult run_strata(const CommandSpec& spec) {
    const SolutionSystem s = solution(spec, "strata");
    const SampleSpec sample = SampleSpec::parse_grid(spec.grid.value_or("5,2"));
    const PTypeReport r = classify_points(s, sample, spec.scheme.value_or("zero-nonzero"));
    if (spec.format == Format::Json) return {0, io::dump(io::to_json(r))};
    std::string out = r.scheme + " total=" + std::to_string(r.total()) + "\n";
    for (const auto& [tag, k] : r.counts) out += "  " + tag + ": " + std::to_string(k) + "\n";
    return {0, out};
}

}  // namespace detail

inline CommandResult run(const CommandSpec& spec) {
    try {
        if (spec.subcommand == "model") return detail::run_model(spec);
        if (spec.subcommand == "basis") return detail::run_basis(spec);
        if (spec.subcommand == "solution") return detail::run_solution(spec);
        if (spec.subcommand == "verify") return detail::run_verify(spec);
        if (spec.subcommand == "catalog") return detail::run_catalog(spec);
        if (spec.subcommand == "strata") return detail::run_strata(spec);
        throw UsageError("unknown subcommand '" + spec.subcommand + "'");
    } catch (const std::invalid_argument& e) {
        return {kUsageError, io::dump(io::error_json("usage", e.what()))};
    } catch (const std::out_of_range& e) {
        return {kUsageError, io::dump(io::error_json("usage", e.what()))};
    }
}

}  // namespace bggpoly::cli

#endif
