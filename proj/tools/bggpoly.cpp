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

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bggpoly/cli/command.hpp"

namespace {

void add_common(CLI::App* sub, std::string& format, std::string& out) {
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out, "write output to this file instead of stdout");
}

template <class T>
void opt(CLI::App* sub, const char* name, std::optional<T>& target, const char* help) {
    sub->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
    using bggpoly::cli::CommandSpec;
    CLI::App app{"Normal BGG solutions on projective and conformal homogeneous models"};
    app.require_subcommand(1);

    CommandSpec spec;
    std::string format = "json";
    std::string out;

    const std::map<std::string, std::string> help = {
        {"model", "dump the graded matrix model"},
        {"basis", "solution systems for every standard basis tractor"},
        {"solution", "solution system for one tractor"},
        {"verify", "check a system against a flat differential operator"},
        {"catalog", "transcribed closed-form solution lists"},
        {"strata", "classify sample points by vanishing or sign"},
    };
    for (const auto& [name, text] : help) {
        CLI::App* sub = app.add_subcommand(name, text);
        add_common(sub, format, out);
        opt(sub, "--geometry", spec.geometry, "projective:N or conformal:P,Q");
        if (name != "model") opt(sub, "--rep", spec.rep, "representation descriptor, e.g. ext(2,std)");
        if (name == "solution" || name == "verify" || name == "strata")
            opt(sub, "--tractor", spec.tractor, "comma-separated rationals");
        if (name == "verify") {
            opt(sub, "--operator", spec.op, "killing | conformal-killing-vector | conformal-killing-form | tracefree-hessian | higher-density:K");
            opt(sub, "--system", spec.system_path, "solution system JSON file");
        }
        if (name == "strata") {
            opt(sub, "--grid", spec.grid, "<perAxis>,<bound>");
            opt(sub, "--scheme", spec.scheme, "zero-nonzero | density-sign");
        }
        sub->callback([&spec, name] { spec.subcommand = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : bggpoly::cli::kUsageError;
    }
    spec.format = format == "text" ? bggpoly::cli::Format::Text : bggpoly::cli::Format::Json;
    if (!out.empty()) spec.out = out;

    const bggpoly::cli::CommandResult result = bggpoly::cli::run(spec);
    if (result.exit_code == bggpoly::cli::kUsageError) {
        std::cerr << result.output;
        return result.exit_code;
    }
    if (spec.out) {
        std::ofstream file(*spec.out, std::ios::binary);
        if (!file) {
            std::cerr << "cannot write " << *spec.out << "\n";
            return bggpoly::cli::kUsageError;
        }
        file << result.output;
    } else {
        std::cout << result.output;
    }
    return result.exit_code;
}
