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

// Prints the sign cross-check of the printed conformal closed forms as JSON.
//   sign_report conformal:3,0

#include <iostream>

#include "bggpoly/io/json.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: sign_report conformal:P,Q\n";
        return 1;
    }
    try {
        const auto report = bggpoly::sign_adjudication_report(bggpoly::GeometryKind::parse(argv[1]));
        std::cout << bggpoly::io::dump(bggpoly::io::to_json(report));
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
