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

#include "cyclaut/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <map>
#include <random>
#include <stdexcept>

#include "cyclaut/kernels.hpp"

namespace cyclaut {

namespace {

constexpr std::size_t kMaxParsedExponent = std::size_t{1} << 24;

std::size_t words_for_bits(std::size_t bits) { return (bits + 63) / 64; }

// Index of the highest set bit at or below word `from_word`, or -1.
long top_bit(const std::vector<std::uint64_t>& bits, std::size_t from_word) {
    for (std::size_t w = std::min(from_word + 1, bits.size()); w-- > 0;) {
        if (bits[w] != 0)
            return static_cast<long>(w * 64 + 63 - std::countl_zero(bits[w]));
    }
    return -1;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::size_t parse_decimal(std::string_view digits, std::string_view context) {
    std::size_t value = 0;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (digits.empty() || ec != std::errc{} || ptr != last)
        throw std::invalid_argument("bad integer '" + std::string(digits) + "' in '" +
                                    std::string(context) + "'");
    return value;
}

}  // namespace

// --- Gf2Poly -----------------------------------------------------------------

Gf2Poly Gf2Poly::monomial(std::size_t exponent) {
    Gf2Poly p;
    p.words_.assign(exponent / 64 + 1, 0);
    p.words_.back() = std::uint64_t{1} << (exponent % 64);
    p.normalize();
    return p;
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<std::size_t> exponents) {
    Gf2Poly p;
    for (std::size_t e : exponents) p += monomial(e);
    return p;
}

Gf2Poly Gf2Poly::from_words(std::vector<std::uint64_t> words) {
    Gf2Poly p;
    p.words_ = std::move(words);
    p.normalize();
    return p;
}

Gf2Poly Gf2Poly::xn_plus_one(std::size_t n) {
    Gf2Poly p = monomial(n);
    p.words_[0] ^= 1;
    p.normalize();
    return p;
}

Gf2Poly Gf2Poly::parse(std::string_view text) {
    const std::string_view body = trim(text);
    if (body.empty()) throw std::invalid_argument("empty polynomial");
    if (body == "0") return {};

    Gf2Poly result;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const std::size_t plus = body.find('+', pos);
        const std::string_view term =
            trim(body.substr(pos, plus == std::string_view::npos ? body.npos : plus - pos));
        std::size_t exponent = 0;
        if (term == "1") {
            exponent = 0;
        } else if (term == "x") {
            exponent = 1;
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            exponent = parse_decimal(trim(term.substr(2)), text);
        } else {
            throw std::invalid_argument("bad term '" + std::string(term) + "' in polynomial '" +
                                        std::string(text) + "'");
        }
        if (exponent > kMaxParsedExponent)
            throw std::invalid_argument("exponent too large in '" + std::string(text) + "'");
        result += monomial(exponent);
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    return result;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = degree_; e >= 0; --e) {
        if (!coefficient(static_cast<std::size_t>(e))) continue;
        if (!out.empty()) out += '+';
        if (e == 0)
            out += '1';
        else if (e == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(e);
    }
    return out;
}

bool Gf2Poly::coefficient(std::size_t exponent) const noexcept {
    const std::size_t w = exponent / 64;
    return w < words_.size() && ((words_[w] >> (exponent % 64)) & 1) != 0;
}

std::size_t Gf2Poly::term_count() const noexcept {
    std::size_t count = 0;
    for (std::uint64_t w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

Gf2Poly Gf2Poly::substitute_power(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("substitute_power needs k >= 1");
    if (is_zero()) return {};
    std::vector<std::uint64_t> out(words_for_bits(static_cast<std::size_t>(degree_) * k + 1), 0);
    for (std::size_t e = 0; e <= static_cast<std::size_t>(degree_); ++e) {
        if (!coefficient(e)) continue;
        const std::size_t t = e * k;
        out[t / 64] |= std::uint64_t{1} << (t % 64);
    }
    return from_words(std::move(out));
}

Gf2Poly Gf2Poly::pow(unsigned exponent) const {
    Gf2Poly result = one();
    Gf2Poly base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent != 0) base = base * base;
    }
    return result;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& rhs) {
    if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
    kernels::active().xor_words(words_.data(), rhs.words_.data(), rhs.words_.size());
    normalize();
    return *this;
}

Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<std::uint64_t> out(lhs.words_.size() + rhs.words_.size());
    kernels::active().clmul_words(lhs.words_.data(), lhs.words_.size(), rhs.words_.data(),
                                  rhs.words_.size(), out.data());
    return Gf2Poly::from_words(std::move(out));
}

std::strong_ordering operator<=>(const Gf2Poly& lhs, const Gf2Poly& rhs) {
    if (auto c = lhs.degree_ <=> rhs.degree_; c != 0) return c;
    for (std::size_t w = lhs.words_.size(); w-- > 0;) {
        if (auto c = lhs.words_[w] <=> rhs.words_[w]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

void Gf2Poly::normalize() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
    degree_ = words_.empty()
                  ? kZeroDegree
                  : static_cast<int>((words_.size() - 1) * 64 + 63 -
                                     static_cast<std::size_t>(std::countl_zero(words_.back())));
}

// --- Gf2Reducer ----------------------------------------------------------------

Gf2Reducer::Gf2Reducer(Gf2Poly modulus) : modulus_(std::move(modulus)) {
    if (modulus_.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto d = static_cast<std::size_t>(modulus_.degree());
    const auto src = modulus_.words();
    shifted_.resize(64);
    for (std::size_t b = 0; b < 64; ++b) {
        std::vector<std::uint64_t> s(words_for_bits(d + 1 + b), 0);
        for (std::size_t w = 0; w < src.size(); ++w) {
            s[w] |= src[w] << b;
            if (b != 0 && w + 1 < s.size()) s[w + 1] |= src[w] >> (64 - b);
        }
        shifted_[b] = std::move(s);
    }
}

void Gf2Reducer::reduce(std::vector<std::uint64_t>& bits,
                        std::vector<std::uint64_t>* quotient) const {
    const long d = modulus_.degree();
    long top = top_bit(bits, bits.size());
    if (quotient != nullptr) quotient->assign(top >= d ? words_for_bits(top - d + 1) : 0, 0);
    const auto& xor_words = kernels::active().xor_words;
    while (top >= d) {
        const auto shift = static_cast<std::size_t>(top - d);
        const auto& s = shifted_[shift % 64];
        xor_words(bits.data() + shift / 64, s.data(), s.size());
        if (quotient != nullptr) (*quotient)[shift / 64] |= std::uint64_t{1} << (shift % 64);
        top = top_bit(bits, static_cast<std::size_t>(top) / 64);
    }
}

bool Gf2Reducer::divides(std::span<const std::uint64_t> bits) const {
    thread_local std::vector<std::uint64_t> scratch;
    scratch.assign(bits.begin(), bits.end());
    reduce(scratch);
    return kernels::active().all_zero(scratch.data(), scratch.size());
}

Gf2Poly Gf2Reducer::remainder(const Gf2Poly& p) const {
    std::vector<std::uint64_t> bits(p.words().begin(), p.words().end());
    reduce(bits);
    return Gf2Poly::from_words(std::move(bits));
}

Gf2Poly Gf2Reducer::mul_mod(const Gf2Poly& a, const Gf2Poly& b) const {
    return remainder(a * b);
}

// --- division, gcd -------------------------------------------------------------

DivMod divmod(const Gf2Poly& dividend, const Gf2Poly& divisor) {
    const Gf2Reducer reducer(divisor);
    std::vector<std::uint64_t> bits(dividend.words().begin(), dividend.words().end());
    std::vector<std::uint64_t> quotient;
    reducer.reduce(bits, &quotient);
    return {Gf2Poly::from_words(std::move(quotient)), Gf2Poly::from_words(std::move(bits))};
}

Gf2Poly operator%(const Gf2Poly& dividend, const Gf2Poly& divisor) {
    return Gf2Reducer(divisor).remainder(dividend);
}

Gf2Poly gcd(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    Gf2Poly x = a;
    Gf2Poly y = b;
    while (!y.is_zero()) {
        Gf2Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;  // nonzero GF(2) polynomials are monic
}

bool is_irreducible(const Gf2Poly& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("irreducibility is undefined for constant " + p.to_string());
    if (p.degree() == 1) return true;
    const Gf2Reducer reducer(p);
    const Gf2Poly x = Gf2Poly::monomial(1);
    Gf2Poly frob = x;  // x^(2^i) mod p
    for (int i = 1; i <= p.degree() / 2; ++i) {
        frob = reducer.mul_mod(frob, frob);
        if (!gcd(p, frob + x).is_one()) return false;
    }
    return true;
}

// --- factorization of x^n - 1 ------------------------------------------------------

std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::size_t m) {
    if (m == 0 || m % 2 == 0) throw std::invalid_argument("cyclotomic cosets need odd m");
    std::vector<bool> seen(m, false);
    std::vector<std::vector<std::size_t>> cosets;
    for (std::size_t s = 0; s < m; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> coset;
        for (std::size_t t = s; !seen[t]; t = (2 * t) % m) {
            seen[t] = true;
            coset.push_back(t);
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

namespace {

// Splits a product of `count` distinct irreducibles of degree `d` using the
// trace map T(a) = a + a^2 + ... + a^(2^(d-1)) mod P. The monomials x^j with
// j < deg P span GF(2)[x]/P and T is linear and onto GF(2) on every CRT
// component, so some x^j in that range separates any two factors.
void equal_degree_split(const Gf2Poly& product, std::size_t d, std::size_t count,
                        std::vector<Gf2Poly>& out) {
    if (count == 1) {
        out.push_back(product);
        return;
    }
    const Gf2Reducer reducer(product);
    for (int j = 1; j < product.degree(); ++j) {
        const Gf2Poly a = reducer.remainder(Gf2Poly::monomial(static_cast<std::size_t>(j)));
        Gf2Poly trace = a;
        Gf2Poly term = a;
        for (std::size_t t = 1; t < d; ++t) {
            term = reducer.mul_mod(term, term);
            trace += term;
        }
        const Gf2Poly h = gcd(product, trace);
        if (h.degree() > 0 && h.degree() < product.degree()) {
            const std::size_t left = static_cast<std::size_t>(h.degree()) / d;
            equal_degree_split(h, d, left, out);
            equal_degree_split(divmod(product, h).quotient, d, count - left, out);
            return;
        }
    }
    throw std::logic_error("trace sweep failed to split " + product.to_string());
}

}  // namespace

std::vector<Gf2Factor> factor_xn_minus_1(std::size_t n) {
    if (n == 0) throw std::invalid_argument("x^n - 1 needs n >= 1");
    const auto power_of_two = static_cast<unsigned>(std::countr_zero(n));
    const std::size_t odd = n >> power_of_two;
    const unsigned multiplicity = 1U << power_of_two;

    std::map<std::size_t, std::size_t> factors_by_degree;
    for (const auto& coset : cyclotomic_cosets(odd)) ++factors_by_degree[coset.size()];

    const Gf2Poly full = Gf2Poly::xn_plus_one(odd);
    const Gf2Reducer reducer(full);
    const Gf2Poly x = Gf2Poly::monomial(1);

    std::vector<Gf2Poly> irreducibles;
    Gf2Poly remaining = full;
    Gf2Poly frob = reducer.remainder(x);
    std::size_t done = 0;
    for (const auto& [d, count] : factors_by_degree) {
        for (; done < d; ++done) frob = reducer.mul_mod(frob, frob);
        const Gf2Poly product = gcd(remaining, frob + x);
        if (static_cast<std::size_t>(product.degree()) != d * count)
            throw std::logic_error("degree-" + std::to_string(d) + " part of x^" +
                                   std::to_string(odd) + "+1 disagrees with its cosets");
        equal_degree_split(product, d, count, irreducibles);
        remaining = divmod(remaining, product).quotient;
    }
    if (!remaining.is_one()) throw std::logic_error("unfactored remainder " + remaining.to_string());

    std::sort(irreducibles.begin(), irreducibles.end());
    std::vector<Gf2Factor> result;
    result.reserve(irreducibles.size());
    for (auto& f : irreducibles) result.push_back({std::move(f), multiplicity});
    return result;
}

Gf2Poly parse_generator_expression(std::string_view text) {
    const std::string_view body = trim(text);
    if (body.empty() || body.front() != '(') return Gf2Poly::parse(body);

    Gf2Poly result = Gf2Poly::one();
    std::size_t pos = 0;
    while (pos < body.size()) {
        if (std::isspace(static_cast<unsigned char>(body[pos])) || body[pos] == '*') {
            ++pos;
            continue;
        }
        if (body[pos] != '(')
            throw std::invalid_argument("expected '(' at offset " + std::to_string(pos) + " in '" +
                                        std::string(text) + "'");
        const std::size_t close = body.find(')', pos);
        if (close == std::string_view::npos)
            throw std::invalid_argument("unbalanced '(' in '" + std::string(text) + "'");
        Gf2Poly factor = Gf2Poly::parse(body.substr(pos + 1, close - pos - 1));
        pos = close + 1;
        while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
        unsigned power = 1;
        if (pos < body.size() && body[pos] == '^') {
            std::size_t end = pos + 1;
            while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
            const std::size_t value = parse_decimal(body.substr(pos + 1, end - pos - 1), text);
            if (value > 4096)
                throw std::invalid_argument("power too large in '" + std::string(text) + "'");
            power = static_cast<unsigned>(value);
            pos = end;
        }
        result = result * factor.pow(power);
    }
    return result;
}

}  // namespace cyclaut
