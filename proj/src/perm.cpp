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

#include "cyclaut/perm.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "cyclaut/kernels.hpp"

namespace cyclaut {

Permutation Permutation::identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), 0U);
    return p;
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
    std::vector<bool> hit(images.size(), false);
    for (std::uint32_t v : images) {
        if (v >= images.size() || hit[v])
            throw std::invalid_argument("image array is not a permutation of degree " +
                                        std::to_string(images.size()));
        hit[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
    Permutation p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
        for (std::size_t point : cycle) {
            if (point < 1 || point > degree)
                throw std::invalid_argument("point " + std::to_string(point) +
                                            " outside 1.." + std::to_string(degree));
            if (used[point - 1])
                throw std::invalid_argument("point " + std::to_string(point) +
                                            " repeated in cycle notation");
            used[point - 1] = true;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            p.images_[cycle[i] - 1] = static_cast<std::uint32_t>(cycle[(i + 1) % cycle.size()] - 1);
    }
    return p;
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument(why + " at offset " + std::to_string(pos) + " in '" +
                                    std::string(text) + "'");
    };
    skip_space();
    if (pos == text.size()) fail("empty cycle notation");
    while (pos < text.size()) {
        if (text[pos] != '(') fail("expected '('");
        ++pos;
        std::vector<std::size_t> cycle;
        skip_space();
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
        } else {
            while (true) {
                skip_space();
                std::size_t value = 0;
                const auto [ptr, ec] =
                    std::from_chars(text.data() + pos, text.data() + text.size(), value);
                if (ec != std::errc{}) fail("expected a point");
                pos = static_cast<std::size_t>(ptr - text.data());
                cycle.push_back(value);
                skip_space();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < text.size() && text[pos] == ')') {
                    ++pos;
                    break;
                }
                fail("expected ',' or ')'");
            }
        }
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
        skip_space();
    }
    return from_cycles(degree, cycles);
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == start) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t i = start; !seen[i]; i = images_[i]) {
            seen[i] = true;
            cycle.push_back(i);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::format_cycles() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& cycle : cs) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i != 0) out += ',';
            out += std::to_string(cycle[i] + 1);
        }
        out += ')';
    }
    return out;
}

bool Permutation::is_identity() const noexcept { return first_moved() == images_.size(); }

std::size_t Permutation::first_moved() const noexcept {
    return kernels::active().first_moved(images_.data(), images_.size());
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv.images_[images_[i]] = static_cast<std::uint32_t>(i);
    return inv;
}

Permutation Permutation::pow(long long exponent) const {
    Permutation base = exponent < 0 ? inverse() : *this;
    auto e = static_cast<unsigned long long>(exponent < 0 ? -exponent : exponent);
    Permutation result = identity(images_.size());
    while (e != 0) {
        if (e & 1U) result = compose(result, base);
        e >>= 1U;
        if (e != 0) base = compose(base, base);
    }
    return result;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("cannot compose permutations of degree " +
                                    std::to_string(a.degree()) + " and " +
                                    std::to_string(b.degree()));
    std::vector<std::uint32_t> out(a.degree());
    kernels::active().gather_u32(a.images().data(), b.images().data(), out.data(), out.size());
    // A composite of bijections is a bijection; skip the validating factory.
    Permutation result;
    result.images_ = std::move(out);
    return result;
}

Codeword apply_to_word(const Permutation& p, const Codeword& word) {
    if (p.degree() != word.length())
        throw std::invalid_argument("permutation of degree " + std::to_string(p.degree()) +
                                    " applied to a word of length " +
                                    std::to_string(word.length()));
    Codeword out(word.length());
    const auto words = word.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits != 0) {
            const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            out.set(p(i), true);
            bits &= bits - 1;
        }
    }
    return out;
}

}  // namespace cyclaut
