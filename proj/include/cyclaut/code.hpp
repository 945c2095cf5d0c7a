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

#ifndef CYCLAUT_CODE_HPP
#define CYCLAUT_CODE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclaut/gf2poly.hpp"

namespace cyclaut {

/*
   Fixed-length binary word. Internally coordinate i (0-based) is bit i
   and the coefficient of x^i. The text form lists coordinate 1 first:
   "1101000" is 1 + x + x^3.
*/
class Codeword {
public:
    Codeword() = default;
    explicit Codeword(std::size_t length);

    static Codeword parse(std::string_view bits);
    /// Throws std::invalid_argument when deg(p) >= length.
    static Codeword from_poly(const Gf2Poly& p, std::size_t length);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] Gf2Poly to_poly() const;

    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] bool operator[](std::size_t i) const noexcept {
        return ((words_[i / 64] >> (i % 64)) & 1) != 0;
    }
    void set(std::size_t i, bool value) noexcept;
    [[nodiscard]] std::size_t weight() const noexcept;
    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Right cyclic shift by `steps`: (c_{n-1}, c_0, ..., c_{n-2}) for one step.
    [[nodiscard]] Codeword cyclic_shift(std::size_t steps = 1) const;

    Codeword& operator^=(const Codeword& rhs);
    friend Codeword operator^(Codeword lhs, const Codeword& rhs) { return lhs ^= rhs; }

    friend bool operator==(const Codeword&, const Codeword&) = default;
    friend std::strong_ordering operator<=>(const Codeword& lhs, const Codeword& rhs);

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Guard for exhaustive enumeration: 2^20 codewords.
inline constexpr std::size_t kDefaultMaxEnumerationDimension = 20;

/*
   Binary cyclic code of length n generated by g | x^n - 1. Membership is
   divisibility of the word polynomial by g (words already have degree
   < n, so no reduction modulo x^n - 1 is needed). The degenerate
   generators g = 1 (full space) and g = x^n + 1 (zero code) are legal.
*/
class CyclicCode {
public:
    /// Throws std::invalid_argument for n < 1, g = 0, or g not dividing
    /// x^n - 1 (the message names the remainder).
    CyclicCode(std::size_t length, Gf2Poly generator);

    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return rows_.size(); }
    [[nodiscard]] const Gf2Poly& generator() const noexcept { return reducer_.modulus(); }
    /// h with g * h = x^n + 1.
    [[nodiscard]] const Gf2Poly& check() const noexcept { return check_; }
    /// "[n,k]".
    [[nodiscard]] std::string parameters() const;

    /// Throws std::invalid_argument on length mismatch.
    [[nodiscard]] bool contains(const Codeword& word) const;
    /// Unchecked fast path over packed bits of length n.
    [[nodiscard]] bool contains_bits(std::span<const std::uint64_t> bits) const {
        return reducer_.divides(bits);
    }

    /// The k cyclic shifts of g's coefficient word by 0..k-1 positions.
    [[nodiscard]] const std::vector<Codeword>& generator_rows() const noexcept { return rows_; }

private:
    std::size_t length_;
    Gf2Reducer reducer_;
    Gf2Poly check_;
    std::vector<Codeword> rows_;
};

/*
   Single-consumer stream over all 2^k codewords in Gray-code order, so
   each step costs one row XOR. Throws std::invalid_argument at
   construction when the dimension exceeds max_dim.
*/
class CodewordEnumerator {
public:
    explicit CodewordEnumerator(const CyclicCode& code,
                                std::size_t max_dim = kDefaultMaxEnumerationDimension);

    std::optional<Codeword> next();

private:
    const CyclicCode* code_;
    Codeword current_;
    std::uint64_t index_ = 0;
    std::uint64_t total_;
};

void for_each_codeword(const CyclicCode& code, const std::function<void(const Codeword&)>& visit,
                       std::size_t max_dim = kDefaultMaxEnumerationDimension);

std::vector<Codeword> enumerate_codewords(const CyclicCode& code,
                                          std::size_t max_dim = kDefaultMaxEnumerationDimension);

std::map<std::size_t, std::uint64_t> weight_distribution(
    const CyclicCode& code, std::size_t max_dim = kDefaultMaxEnumerationDimension);

/*
   Rearrangement of a flat word into a rows x cols bit matrix.

   BlockRows: consecutive length-cols blocks form the rows, so coordinate
   j (1-based) sits at row ceil(j/cols), column ((j-1) mod cols) + 1.

   ResidueRows: entry (a, b) (1-based) holds coordinate a + (b-1)*rows,
   i.e. row a collects the coordinates congruent to a modulo rows. With
   rows = 2 this is the odd/even interleaving.
*/
class MatrixLayout {
public:
    enum class Kind { BlockRows, ResidueRows };

    static MatrixLayout block_rows(std::size_t rows, std::size_t cols);
    static MatrixLayout residue_rows(std::size_t rows, std::size_t cols);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t size() const noexcept { return rows_ * cols_; }

    /// 0-based coordinate -> 0-based (row, col).
    [[nodiscard]] std::pair<std::size_t, std::size_t> cell_of(std::size_t coordinate) const;
    /// 0-based (row, col) -> 0-based coordinate.
    [[nodiscard]] std::size_t coordinate_of(std::size_t row, std::size_t col) const;

private:
    MatrixLayout(Kind kind, std::size_t rows, std::size_t cols);

    Kind kind_;
    std::size_t rows_;
    std::size_t cols_;
};

/// One Codeword of length cols per row.
using BitMatrix = std::vector<Codeword>;

BitMatrix to_matrix(const Codeword& word, const MatrixLayout& layout);
Codeword from_matrix(const BitMatrix& matrix, const MatrixLayout& layout);

}  // namespace cyclaut

#endif  // CYCLAUT_CODE_HPP
