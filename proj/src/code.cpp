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

#include "cyclaut/code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cyclaut/kernels.hpp"

namespace cyclaut {

// --- Codeword ------------------------------------------------------------------

Codeword::Codeword(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

Codeword Codeword::parse(std::string_view bits) {
    Codeword w(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            w.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("bad codeword character '" + std::string(1, bits[i]) +
                                        "' in '" + std::string(bits) + "'");
    }
    return w;
}

Codeword Codeword::from_poly(const Gf2Poly& p, std::size_t length) {
    if (p.degree() >= static_cast<long>(length))
        throw std::invalid_argument("polynomial " + p.to_string() + " does not fit in length " +
                                    std::to_string(length));
    Codeword w(length);
    const auto src = p.words();
    std::copy(src.begin(), src.end(), w.words_.begin());
    return w;
}

std::string Codeword::to_string() const {
    std::string out(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if ((*this)[i]) out[i] = '1';
    return out;
}

Gf2Poly Codeword::to_poly() const { return Gf2Poly::from_words(words_); }

void Codeword::set(std::size_t i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
        words_[i / 64] |= mask;
    else
        words_[i / 64] &= ~mask;
}

std::size_t Codeword::weight() const noexcept {
    std::size_t count = 0;
    for (std::uint64_t w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

Codeword Codeword::cyclic_shift(std::size_t steps) const {
    Codeword out(length_);
    if (length_ == 0) return out;
    steps %= length_;
    for (std::size_t i = 0; i < length_; ++i)
        if ((*this)[i]) out.set((i + steps) % length_, true);
    return out;
}

Codeword& Codeword::operator^=(const Codeword& rhs) {
    if (rhs.length_ != length_)
        throw std::invalid_argument("codeword length mismatch: " + std::to_string(length_) +
                                    " vs " + std::to_string(rhs.length_));
    kernels::active().xor_words(words_.data(), rhs.words_.data(), words_.size());
    return *this;
}

std::strong_ordering operator<=>(const Codeword& lhs, const Codeword& rhs) {
    if (auto c = lhs.length_ <=> rhs.length_; c != 0) return c;
    // Text order: coordinate 1 is the most significant character.
    for (std::size_t i = 0; i < lhs.length_; ++i)
        if (lhs[i] != rhs[i]) return lhs[i] ? std::strong_ordering::greater
                                            : std::strong_ordering::less;
    return std::strong_ordering::equal;
}

// --- CyclicCode ------------------------------------------------------------------

namespace {

Gf2Reducer checked_reducer(std::size_t length, Gf2Poly generator) {
    if (length < 1) throw std::invalid_argument("code length must be >= 1");
    if (generator.is_zero()) throw std::invalid_argument("generator polynomial must be nonzero");
    Gf2Reducer reducer(std::move(generator));
    const Gf2Poly rem = reducer.remainder(Gf2Poly::xn_plus_one(length));
    if (!rem.is_zero())
        throw std::invalid_argument(reducer.modulus().to_string() + " does not divide x^" +
                                    std::to_string(length) + "+1 (remainder " + rem.to_string() +
                                    ")");
    return reducer;
}

}  // namespace

CyclicCode::CyclicCode(std::size_t length, Gf2Poly generator)
    : length_(length), reducer_(checked_reducer(length, std::move(generator))) {
    check_ = divmod(Gf2Poly::xn_plus_one(length_), reducer_.modulus()).quotient;
    const auto k = length_ - static_cast<std::size_t>(reducer_.modulus().degree());
    if (k == 0) return;
    const Codeword base = Codeword::from_poly(reducer_.modulus(), length_);
    rows_.reserve(k);
    for (std::size_t s = 0; s < k; ++s) rows_.push_back(base.cyclic_shift(s));
}

std::string CyclicCode::parameters() const {
    return "[" + std::to_string(length_) + "," + std::to_string(dimension()) + "]";
}

bool CyclicCode::contains(const Codeword& word) const {
    if (word.length() != length_)
        throw std::invalid_argument("word of length " + std::to_string(word.length()) +
                                    " checked against a length-" + std::to_string(length_) +
                                    " code");
    return contains_bits(word.words());
}

// --- enumeration ---------------------------------------------------------------------

CodewordEnumerator::CodewordEnumerator(const CyclicCode& code, std::size_t max_dim)
    : code_(&code), current_(code.length()) {
    if (code.dimension() > max_dim || code.dimension() >= 64)
        throw std::invalid_argument("dimension " + std::to_string(code.dimension()) +
                                    " exceeds the enumeration limit " + std::to_string(max_dim));
    total_ = std::uint64_t{1} << code.dimension();
}

std::optional<Codeword> CodewordEnumerator::next() {
    if (index_ == total_) return std::nullopt;
    if (index_ != 0) current_ ^= code_->generator_rows()[std::countr_zero(index_)];
    ++index_;
    return current_;
}

void for_each_codeword(const CyclicCode& code, const std::function<void(const Codeword&)>& visit,
                       std::size_t max_dim) {
    CodewordEnumerator stream(code, max_dim);
    while (auto w = stream.next()) visit(*w);
}

std::vector<Codeword> enumerate_codewords(const CyclicCode& code, std::size_t max_dim) {
    std::vector<Codeword> out;
    for_each_codeword(code, [&](const Codeword& w) { out.push_back(w); }, max_dim);
    return out;
}

std::map<std::size_t, std::uint64_t> weight_distribution(const CyclicCode& code,
                                                         std::size_t max_dim) {
    std::map<std::size_t, std::uint64_t> histogram;
    for_each_codeword(code, [&](const Codeword& w) { ++histogram[w.weight()]; }, max_dim);
    return histogram;
}

// --- matrix layouts ------------------------------------------------------------------

MatrixLayout::MatrixLayout(Kind kind, std::size_t rows, std::size_t cols)
    : kind_(kind), rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix layout needs rows, cols >= 1");
}

MatrixLayout MatrixLayout::block_rows(std::size_t rows, std::size_t cols) {
    return {Kind::BlockRows, rows, cols};
}

MatrixLayout MatrixLayout::residue_rows(std::size_t rows, std::size_t cols) {
    return {Kind::ResidueRows, rows, cols};
}

std::pair<std::size_t, std::size_t> MatrixLayout::cell_of(std::size_t coordinate) const {
    if (kind_ == Kind::BlockRows) return {coordinate / cols_, coordinate % cols_};
    return {coordinate % rows_, coordinate / rows_};
}

std::size_t MatrixLayout::coordinate_of(std::size_t row, std::size_t col) const {
    return kind_ == Kind::BlockRows ? row * cols_ + col : row + col * rows_;
}

BitMatrix to_matrix(const Codeword& word, const MatrixLayout& layout) {
    if (word.length() != layout.size())
        throw std::invalid_argument("word of length " + std::to_string(word.length()) +
                                    " does not fit a " + std::to_string(layout.rows()) + "x" +
                                    std::to_string(layout.cols()) + " layout");
    BitMatrix matrix(layout.rows(), Codeword(layout.cols()));
    for (std::size_t j = 0; j < word.length(); ++j) {
        if (!word[j]) continue;
        const auto [r, c] = layout.cell_of(j);
        matrix[r].set(c, true);
    }
    return matrix;
}

Codeword from_matrix(const BitMatrix& matrix, const MatrixLayout& layout) {
    if (matrix.size() != layout.rows())
        throw std::invalid_argument("matrix has " + std::to_string(matrix.size()) +
                                    " rows, layout expects " + std::to_string(layout.rows()));
    Codeword word(layout.size());
    for (std::size_t r = 0; r < matrix.size(); ++r) {
        if (matrix[r].length() != layout.cols())
            throw std::invalid_argument("matrix row " + std::to_string(r + 1) + " has length " +
                                        std::to_string(matrix[r].length()));
        for (std::size_t c = 0; c < layout.cols(); ++c)
            if (matrix[r][c]) word.set(layout.coordinate_of(r, c), true);
    }
    return word;
}

}  // namespace cyclaut
