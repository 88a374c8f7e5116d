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

#ifndef BGGPOLY_IO_JSON_HPP
#define BGGPOLY_IO_JSON_HPP

// JSON forms of the library objects. Key order is fixed (ordered_json), all
// rationals and polynomials are strings in canonical text form.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bggpoly/bggsolve/adjudication.hpp"
#include "bggpoly/bggsolve/catalog.hpp"
#include "bggpoly/strata.hpp"

namespace bggpoly::io {

using Json = nlohmann::ordered_json;

inline Json rationals(std::span<const Rational> v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

inline std::vector<Rational> parse_rationals(const Json& j) {
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(Rational::parse(e.get<std::string>()));
    return out;
}

inline Json matrix(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const SolutionSystem& s) {
    Json j;
    j["geometry"] = s.geometry.str();
    j["rep"] = s.rep;
    j["variables"] = s.variables();
    j["degree_bound"] = s.degree_bound;
    Json slots = Json::array();
    for (const auto& slot : s.slots) slots.push_back(Json{{"label", slot.label}, {"poly", slot.poly.str()}});
    j["slots"] = std::move(slots);
    j["source_tractor"] = rationals(s.source.coords);
    return j;
}

inline SolutionSystem solution_from_json(const Json& j) {
    try {
        SolutionSystem s{GeometryKind::parse(j.at("geometry").get<std::string>()), j.at("rep").get<std::string>(),
                         j.at("degree_bound").get<std::size_t>(), {}, {}};
        const std::size_t n = s.variable_count();
        if (j.contains("variables") && j.at("variables").get<std::vector<std::string>>() != s.variables())
            throw std::invalid_argument("variables do not match the geometry");
        for (const auto& slot : j.at("slots"))
            s.slots.push_back({slot.at("label").get<std::string>(), MultiPoly::parse(slot.at("poly").get<std::string>(), n)});
        if (j.contains("source_tractor")) s.source.coords = parse_rationals(j.at("source_tractor"));
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("solution system JSON: ") + e.what());
    }
}

inline Json to_json(const GradedLieModel& m) {
    Json j;
    j["geometry"] = m.kind.str();
    j["ambient_dim"] = m.ambient_dim;
    Json gens = Json::array();
    for (const auto& g : m.generators) gens.push_back(matrix(g));
    j["generators"] = std::move(gens);
    j["grading_element"] = matrix(m.grading_element);
    j["form"] = m.form ? matrix(*m.form) : Json(nullptr);
    j["signature"] = m.kind.is_conformal() ? Json(m.kind.signature()) : Json(nullptr);
    return j;
}

inline Json to_json(const Representation& rep) {
    Json j;
    j["geometry"] = rep.kind.str();
    j["rep"] = rep.descriptor;
    j["dimension"] = rep.dim();
    j["depth"] = rep.depth;
    Json basis = Json::array();
    for (std::size_t i = 0; i < rep.dim(); ++i)
        basis.push_back(Json{{"label", rep.labels[i].text()}, {"grading_index", rep.grading_index[i]}});
    j["basis"] = std::move(basis);
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

inline Json basis_to_json(const Representation& rep, std::span<const SolutionSystem> systems) {
    Json j = to_json(rep);
    Json arr = Json::array();
    for (const auto& s : systems) arr.push_back(to_json(s));
    j["systems"] = std::move(arr);
    return j;
}

inline Json to_json(const Catalog& c) {
    Json j;
    if (!c.fixtures.empty()) {
        j["geometry"] = c.fixtures.front().printed.geometry.str();
        j["rep"] = c.fixtures.front().printed.rep;
    }
    j["family_set"] = c.family_set;
    j["count"] = c.fixtures.size();
    Json arr = Json::array();
    for (const auto& f : c.fixtures) {
        Json e;
        e["name"] = f.name;
        e["family"] = f.family;
        e["status"] = to_string(f.status);
        e["system"] = to_json(f.adjudicated);
        if (f.status == FixtureStatus::SignAdjudicated) e["printed"] = to_json(f.printed);
        arr.push_back(std::move(e));
    }
    j["fixtures"] = std::move(arr);
    return j;
}

inline Json to_json(const PTypeReport& r) {
    Json j;
    j["scheme"] = r.scheme;
    j["total"] = r.total();
    Json counts = Json::object();
    for (const auto& [tag, k] : r.counts) counts[tag] = k;
    j["counts"] = std::move(counts);
    Json pts = Json::array();
    for (const auto& p : r.points)
        pts.push_back(Json{{"coords", rationals(p.coords)}, {"values", rationals(p.values)}, {"tag", p.tag}});
    j["points"] = std::move(pts);
    return j;
}

inline Json index_json(const MultiIndex& idx) {
    Json a = Json::array();
    for (auto i : idx) a.push_back(i + 1);
    return a;
}

inline Json to_json(const VerifyReport& r) {
    Json j;
    j["operator"] = r.op;
    j["passed"] = r.passed;
    Json res = Json::array();
    for (const auto& x : r.residuals) res.push_back(Json{{"index", index_json(x.index)}, {"residual", x.value.str()}});
    j["residuals"] = std::move(res);
    return j;
}

inline Json to_json(const AdjudicationReport& r) {
    Json j;
    j["geometry"] = r.geometry.str();
    j["entries_checked"] = r.entries_checked;
    Json mm = Json::array();
    for (const auto& m : r.exponential_mismatches)
        mm.push_back(Json{{"row", m.row}, {"col", m.col}, {"printed", m.printed.str()}, {"oracle", m.oracle.str()}});
    j["exponential_mismatches"] = std::move(mm);
    Json sites = Json::array();
    for (const auto& s : r.sites)
        sites.push_back(Json{{"site", s.site},
                             {"printed", s.printed},
                             {"adjudicated", s.adjudicated},
                             {"oracle", s.oracle},
                             {"printed_passes", s.printed_passes},
                             {"adjudicated_passes", s.adjudicated_passes}});
    j["sites"] = std::move(sites);
    return j;
}

inline Json error_json(const std::string& kind, const std::string& message) {
    return Json{{"error", kind}, {"message", message}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace bggpoly::io

#endif
