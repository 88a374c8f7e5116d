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

#ifndef BGGPOLY_DESCRIPTOR_HPP
#define BGGPOLY_DESCRIPTOR_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bggpoly/repforge.hpp"

namespace bggpoly {

// Grammar:
//   R := std | triv | cartanS2L2 | dual(R) | ext(k,R) | sym(k,R) | tensor(R,R)
class DescriptorParser {
   public:
    DescriptorParser(const GradedLieModel& model, std::string_view text) : model_(model), text_(text) {}

    Representation parse() {
        Representation rep = parse_rep();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
        return rep;
    }

   private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("rep descriptor '" + std::string(text_) + "': " + why);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string word() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t number() {
        const std::string w = word();
        if (w.find_first_not_of("0123456789") != std::string::npos) fail("expected an integer, got '" + w + "'");
        return static_cast<std::size_t>(std::stoul(w));
    }

    Representation parse_rep() {
        const std::string head = word();
        if (head == "std") return standard_rep(model_);
        if (head == "triv") return trivial_rep(model_);
        if (head == "cartanS2L2") return cartan_kernel_S2Lambda2(model_);
        if (head == "dual") {
            expect('(');
            Representation inner = parse_rep();
            expect(')');
            return dual_rep(inner);
        }
        if (head == "ext" || head == "sym") {
            expect('(');
            const std::size_t k = number();
            expect(',');
            Representation inner = parse_rep();
            expect(')');
            return head == "ext" ? exterior_power(inner, k) : symmetric_power(inner, k);
        }
        if (head == "tensor") {
            expect('(');
            Representation a = parse_rep();
            expect(',');
            Representation b = parse_rep();
            expect(')');
            return tensor_product(a, b);
        }
        fail("unknown constructor '" + head + "'");
    }

    const GradedLieModel& model_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline Representation build_representation(const GradedLieModel& model, std::string_view descriptor) {
    return DescriptorParser(model, descriptor).parse();
}

}  // namespace bggpoly

#endif
