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

#ifndef CYCLAUT_GF2POLY_HPP
#define CYCLAUT_GF2POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclaut {

/*
   Polynomial over GF(2), bit-packed in 64-bit words with bit e of the
   array holding the coefficient of x^e. The word vector never carries
   zero words above the leading term, so equal polynomials have equal
   representations. The zero polynomial has no words and degree
   kZeroDegree.

   Text form: terms "1", "x", "x^K" joined by '+', in any order
   (repeated terms cancel). "0" is the zero polynomial. to_string()
   emits descending exponents, e.g. "x^3+x+1".
*/
class Gf2Poly {
public:
    static constexpr int kZeroDegree = -1;

    Gf2Poly() = default;

    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly monomial(std::size_t exponent);
    static Gf2Poly from_exponents(std::initializer_list<std::size_t> exponents);
    static Gf2Poly from_words(std::vector<std::uint64_t> words);
    /// x^n + 1, which equals x^n - 1 over GF(2).
    static Gf2Poly xn_plus_one(std::size_t n);
    static Gf2Poly parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] bool is_zero() const noexcept { return degree_ == kZeroDegree; }
    [[nodiscard]] bool is_one() const noexcept { return degree_ == 0; }
    [[nodiscard]] bool coefficient(std::size_t exponent) const noexcept;
    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
    [[nodiscard]] std::size_t term_count() const noexcept;

    /// f(x) -> f(x^k).
    [[nodiscard]] Gf2Poly substitute_power(std::size_t k) const;
    [[nodiscard]] Gf2Poly pow(unsigned exponent) const;

    Gf2Poly& operator+=(const Gf2Poly& rhs);
    friend Gf2Poly operator+(Gf2Poly lhs, const Gf2Poly& rhs) { return lhs += rhs; }
    friend Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs);

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;
    /// Orders by degree, then by the coefficient word read from the top
    /// exponent down (the polynomial's value at x = 2).
    friend std::strong_ordering operator<=>(const Gf2Poly& lhs, const Gf2Poly& rhs);

private:
    void normalize();

    std::vector<std::uint64_t> words_;
    int degree_ = kZeroDegree;
};

struct DivMod {
    Gf2Poly quotient;
    Gf2Poly remainder;
};

/// Throws std::domain_error when the divisor is zero.
DivMod divmod(const Gf2Poly& dividend, const Gf2Poly& divisor);
Gf2Poly operator%(const Gf2Poly& dividend, const Gf2Poly& divisor);

/// Monic gcd; throws std::domain_error when both inputs are zero.
Gf2Poly gcd(const Gf2Poly& a, const Gf2Poly& b);

/*
   Division by a fixed modulus. The 64 bit-shifted copies of the modulus
   are built once so each elimination step is a word-aligned XOR through
   the active kernel table. Used for code membership, where the same
   generator polynomial divides millions of words.
*/
class Gf2Reducer {
public:
    explicit Gf2Reducer(Gf2Poly modulus);

    [[nodiscard]] const Gf2Poly& modulus() const noexcept { return modulus_; }

    /// Replaces `bits` with its remainder modulo the modulus. When `quotient`
    /// is given it receives the quotient bits (resized as needed).
    void reduce(std::vector<std::uint64_t>& bits,
                std::vector<std::uint64_t>* quotient = nullptr) const;

    [[nodiscard]] bool divides(std::span<const std::uint64_t> bits) const;
    [[nodiscard]] Gf2Poly remainder(const Gf2Poly& p) const;
    [[nodiscard]] Gf2Poly mul_mod(const Gf2Poly& a, const Gf2Poly& b) const;

private:
    Gf2Poly modulus_;
    std::vector<std::vector<std::uint64_t>> shifted_;
};

/// Distinct-degree test. Throws std::invalid_argument for constants.
bool is_irreducible(const Gf2Poly& p);

struct Gf2Factor {
    Gf2Poly factor;
    unsigned multiplicity = 0;

    friend bool operator==(const Gf2Factor&, const Gf2Factor&) = default;
};

/// Cyclotomic cosets of 2 modulo an odd m, each sorted, ordered by smallest
/// element.
std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::size_t m);

/*
   Complete factorization of x^n - 1 into irreducibles. For n = 2^a * m
   with m odd, x^n - 1 = (x^m - 1)^(2^a) and x^m - 1 is squarefree; the
   cyclotomic cosets of m predict how many factors of each degree exist,
   distinct-degree gcds group them and a trace-map split separates each
   group. Factors come back sorted by operator<=>.
*/
std::vector<Gf2Factor> factor_xn_minus_1(std::size_t n);

/// Accepts either a plain polynomial or a product "(f1)(f2)^k..." and
/// returns the expanded polynomial.
Gf2Poly parse_generator_expression(std::string_view text);

}  // namespace cyclaut

#endif  // CYCLAUT_GF2POLY_HPP
