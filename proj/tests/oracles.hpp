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

// Deliberately naive reference implementations used only by the tests.
// They share no code with the library beyond the value types.

#ifndef CYCLAUT_TESTS_ORACLES_HPP
#define CYCLAUT_TESTS_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "cyclaut/code.hpp"
#include "cyclaut/gf2poly.hpp"
#include "cyclaut/group.hpp"
#include "cyclaut/perm.hpp"

namespace oracle {

using Coeffs = std::vector<int>;  // index = exponent, entries 0/1, no trailing zeros

inline Coeffs coeffs(const cyclaut::Gf2Poly& p) {
    Coeffs out;
    for (int e = 0; e <= p.degree(); ++e) out.push_back(p.coefficient(static_cast<std::size_t>(e)) ? 1 : 0);
    return out;
}

inline void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= a[i] & b[j];
    trim(out);
    return out;
}

// Remainder by schoolbook long division.
inline Coeffs mod(Coeffs a, const Coeffs& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] ^= b[j];
        trim(a);
    }
    return a;
}

// Trial division by every polynomial of degree 1..deg/2.
inline bool is_irreducible(const Coeffs& p) {
    const std::size_t degree = p.size() - 1;
    for (std::size_t d = 1; d <= degree / 2; ++d)
        for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low) {
            Coeffs q(d + 1, 0);
            q[d] = 1;
            for (std::size_t i = 0; i < d; ++i) q[i] = static_cast<int>((low >> i) & 1);
            if (mod(p, q).empty()) return false;
        }
    return true;
}

// Words of a code as subsets of generator rows (no Gray code).
inline std::set<std::vector<bool>> codewords(const cyclaut::CyclicCode& code) {
    const auto& rows = code.generator_rows();
    std::set<std::vector<bool>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rows.size()); ++mask) {
        std::vector<bool> word(code.length(), false);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if ((mask >> r) & 1)
                for (std::size_t i = 0; i < code.length(); ++i) word[i] = word[i] != rows[r][i];
        out.insert(word);
    }
    return out;
}

// Automorphism test over the whole codeword set.
inline bool is_automorphism(const std::set<std::vector<bool>>& words, const cyclaut::Permutation& p) {
    for (const auto& w : words) {
        std::vector<bool> image(w.size(), false);
        for (std::size_t i = 0; i < w.size(); ++i) image[p(i)] = w[i];
        if (!words.contains(image)) return false;
    }
    return true;
}

// Every element of the group generated by gens, by breadth-first closure.
inline std::set<std::vector<std::uint32_t>> closure(std::size_t degree,
                                                    const std::vector<cyclaut::Permutation>& gens) {
    std::vector<std::uint32_t> id(degree);
    for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
    std::set<std::vector<std::uint32_t>> seen{id};
    std::deque<std::vector<std::uint32_t>> queue{id};
    while (!queue.empty()) {
        const auto current = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            std::vector<std::uint32_t> next(degree);
            for (std::size_t i = 0; i < degree; ++i) next[i] = g(current[i]);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen;
}

inline cyclaut::BigInt factorial(unsigned n) {
    cyclaut::BigInt out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

inline cyclaut::BigInt power(const cyclaut::BigInt& base, unsigned exponent) {
    cyclaut::BigInt out = 1;
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

}  // namespace oracle

#endif  // CYCLAUT_TESTS_ORACLES_HPP
