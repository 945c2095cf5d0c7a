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

#ifndef CYCLAUT_PERM_HPP
#define CYCLAUT_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclaut/code.hpp"

namespace cyclaut {

/*
   Permutation of {0, ..., N-1} stored as its image array. All I/O is
   1-based cycle notation: "(1,2,3)(4,5)". Fixed points are omitted and
   the identity prints as "()".

   Conventions (fixed, asserted in tests):
     compose(a, b)(i) = a(b(i))      -- b acts first
     apply_to_word(p, w)[p(i)] = w[i] -- the bit at i moves to p(i)
   With these, the full cycle (1,2,...,n) is the right cyclic shift.
*/
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t degree);
    /// 0-based images; throws std::invalid_argument if not a bijection.
    static Permutation from_images(std::vector<std::uint32_t> images);
    /// 1-based cycles; throws on repeated or out-of-range points.
    static Permutation from_cycles(std::size_t degree,
                                   const std::vector<std::vector<std::size_t>>& cycles);
    static Permutation parse_cycles(std::string_view text, std::size_t degree);

    [[nodiscard]] std::string format_cycles() const;
    /// 0-based disjoint cycles of length >= 2, sorted by smallest point.
    [[nodiscard]] std::vector<std::vector<std::size_t>> cycles() const;

    [[nodiscard]] std::size_t degree() const noexcept { return images_.size(); }
    [[nodiscard]] std::uint32_t operator()(std::size_t point) const noexcept {
        return images_[point];
    }
    [[nodiscard]] std::span<const std::uint32_t> images() const noexcept { return images_; }

    [[nodiscard]] bool is_identity() const noexcept;
    /// Smallest moved point, or degree() for the identity.
    [[nodiscard]] std::size_t first_moved() const noexcept;
    [[nodiscard]] Permutation inverse() const;
    [[nodiscard]] Permutation pow(long long exponent) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    /// Lexicographic on the one-line form.
    friend auto operator<=>(const Permutation& lhs, const Permutation& rhs) {
        return lhs.images_ <=> rhs.images_;
    }

private:
    friend Permutation compose(const Permutation& a, const Permutation& b);

    std::vector<std::uint32_t> images_;
};

/// a∘b, i.e. i -> a(b(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// Throws std::invalid_argument when degree != word length.
Codeword apply_to_word(const Permutation& p, const Codeword& word);

}  // namespace cyclaut

#endif  // CYCLAUT_PERM_HPP
