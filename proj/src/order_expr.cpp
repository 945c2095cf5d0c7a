/*
   Copyright 2026 The cyclaut Authors

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

#include "cyclaut/order_expr.hpp"

#include <stdexcept>
#include <string>

namespace cyclaut {

namespace {

constexpr unsigned kMaxSmallArgument = 100000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    BigInt parse() {
        BigInt value = product();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("order expression '" + std::string(text_) + "': " + what +
                                    " at offset " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    unsigned small(const BigInt& value) {
        if (value > kMaxSmallArgument) fail("argument too large");
        return value.convert_to<unsigned>();
    }

    BigInt product() {
        BigInt value = power();
        while (accept('*')) value *= power();
        return value;
    }

    BigInt power() {
        BigInt base = factorial();
        if (!accept('^')) return base;
        return boost::multiprecision::pow(base, small(factorial()));
    }

    BigInt factorial() {
        BigInt value = atom();
        while (accept('!')) {
            const unsigned n = small(value);
            value = 1;
            for (unsigned i = 2; i <= n; ++i) value *= i;
        }
        return value;
    }

    BigInt atom() {
        if (accept('(')) {
            BigInt value = product();
            if (!accept(')')) fail("missing ')'");
            return value;
        }
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (start == pos_) fail(pos_ < text_.size() ? "expected a number" : "unexpected end");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BigInt evaluate_order_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace cyclaut
