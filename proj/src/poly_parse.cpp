/*
 * Copyright 2026 The hyperdet authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hyperdet/poly_parse.hpp"

#include <cctype>
#include <string>

namespace hyperdet {

namespace {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := '-' factor | base ('^' nat)?
// base   := nat | 'x' nat | '(' expr ')'
class Parser {
public:
    Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) {
            throw parse_error("unexpected character '" + std::string(1, text_[pos_]) +
                              "' at position " + std::to_string(pos_));
        }
        return p;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Integer natural() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error("expected a number at position " + std::to_string(start));
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    Polynomial factor() {
        if (eat('-')) return -factor();
        Polynomial b = base();
        if (eat('^')) {
            const Integer e = natural();
            if (e > 64) throw parse_error("exponent too large");
            Polynomial p = Polynomial::constant(nvars_, 1);
            for (Integer i = 0; i < e; ++i) p *= b;
            return p;
        }
        return b;
    }

    Polynomial base() {
        const char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = expr();
            if (!eat(')')) throw parse_error("missing ')'");
            return p;
        }
        if (c == 'x') {
            ++pos_;
            const Integer index = natural();
            if (index >= nvars_) {
                throw parse_error("variable x" + index.get_str() + " out of range (have " +
                                  std::to_string(nvars_) + " variables)");
            }
            return Polynomial::variable(nvars_, static_cast<int>(index.get_si()));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Polynomial::constant(nvars_, Rational(natural()));
        }
        throw parse_error(std::string("unexpected input at position ") + std::to_string(pos_));
    }

    std::string_view text_;
    int nvars_;
    size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars) {
    if (nvars < 0) throw domain_error("negative variable count");
    return Parser(text, nvars).run();
}

}  // namespace hyperdet
