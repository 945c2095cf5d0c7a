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

#include "cyclaut/construct.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "cyclaut/verify.hpp"

namespace cyclaut {

namespace {

using Images = std::vector<std::uint32_t>;

Images identity_images(std::size_t degree) {
    Images images(degree);
    std::iota(images.begin(), images.end(), 0U);
    return images;
}

std::size_t checked_power(std::size_t base, std::size_t exponent) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (result > (std::size_t{1} << 32) / base)
            throw std::invalid_argument("prime power too large");
        result *= base;
    }
    return result;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::size_t whole_quotient(std::size_t length, std::size_t part, std::string_view what) {
    require(part >= 1 && length % part == 0,
            std::string(what) + " " + std::to_string(part) + " does not divide length " +
                std::to_string(length));
    return length / part;
}

}  // namespace

Permutation shift(std::size_t n) {
    require(n >= 1, "shift needs n >= 1");
    Images images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>((i + 1) % n);
    return Permutation::from_images(std::move(images));
}

std::vector<Permutation> block_row_generators(std::size_t k, std::size_t n) {
    require(k >= 2, "block_row_generators needs k >= 2, got " + std::to_string(k));
    require(n >= 1, "block_row_generators needs n >= 1");
    const std::size_t degree = k * n;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Images cycle = identity_images(degree);
        for (std::size_t r = 0; r < k; ++r)
            cycle[r * n + i] = static_cast<std::uint32_t>(((r + 1) % k) * n + i);
        gens.push_back(Permutation::from_images(std::move(cycle)));
        if (k == 2) continue;
        Images swap = identity_images(degree);
        swap[i] = static_cast<std::uint32_t>(n + i);
        swap[n + i] = static_cast<std::uint32_t>(i);
        gens.push_back(Permutation::from_images(std::move(swap)));
    }
    return gens;
}

Permutation lifted_column_perm(const Permutation& tau, std::size_t k) {
    require(k >= 1, "lifted_column_perm needs k >= 1");
    const std::size_t n = tau.degree();
    Images images(k * n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < n; ++j)
            images[r * n + j] = static_cast<std::uint32_t>(r * n + tau(j));
    return Permutation::from_images(std::move(images));
}

Permutation interleaved_lift(const Permutation& sigma, unsigned row) {
    require(row == 1 || row == 2, "interleaved_lift row must be 1 or 2, got " +
                                      std::to_string(row));
    return residue_lift(sigma, row, 2);
}

Permutation pair_swap(std::size_t p) {
    require(p >= 1, "pair_swap needs p >= 1");
    Images images(2 * p);
    for (std::size_t j = 0; j < p; ++j) {
        images[2 * j] = static_cast<std::uint32_t>(2 * j + 1);
        images[2 * j + 1] = static_cast<std::uint32_t>(2 * j);
    }
    return Permutation::from_images(std::move(images));
}

Permutation residue_lift(const Permutation& alpha, std::size_t row, std::size_t rows) {
    require(rows >= 1, "residue layout needs at least one row");
    require(row >= 1 && row <= rows,
            "row " + std::to_string(row) + " outside 1.." + std::to_string(rows));
    const std::size_t cols = alpha.degree();
    const std::size_t a = row - 1;
    Images images = identity_images(rows * cols);
    for (std::size_t b = 0; b < cols; ++b)
        images[a + b * rows] = static_cast<std::uint32_t>(a + alpha(b) * rows);
    return Permutation::from_images(std::move(images));
}

Permutation residue_lift(const Permutation& alpha, std::size_t row, std::size_t prime,
                         std::size_t exponent, std::size_t row_exponent) {
    require(prime >= 2, "prime must be >= 2");
    require(row_exponent < exponent, "residue layout needs 0 <= m < n");
    const std::size_t rows = checked_power(prime, row_exponent);
    const std::size_t cols = checked_power(prime, exponent - row_exponent);
    require(alpha.degree() == cols, "inner permutation has degree " +
                                        std::to_string(alpha.degree()) + ", expected " +
                                        std::to_string(cols));
    return residue_lift(alpha, row, rows);
}

Permutation row_permutation(const Permutation& beta, std::size_t cols) {
    require(cols >= 1, "residue layout needs at least one column");
    const std::size_t rows = beta.degree();
    Images images(rows * cols);
    for (std::size_t b = 0; b < cols; ++b)
        for (std::size_t a = 0; a < rows; ++a)
            images[a + b * rows] = static_cast<std::uint32_t>(beta(a) + b * rows);
    return Permutation::from_images(std::move(images));
}

Permutation row_permutation(const Permutation& beta, std::size_t prime, std::size_t exponent,
                            std::size_t row_exponent) {
    require(prime >= 2, "prime must be >= 2");
    require(row_exponent < exponent, "residue layout needs 0 <= m < n");
    const std::size_t rows = checked_power(prime, row_exponent);
    require(beta.degree() == rows, "row permutation has degree " +
                                       std::to_string(beta.degree()) + ", expected " +
                                       std::to_string(rows));
    return row_permutation(beta, checked_power(prime, exponent - row_exponent));
}

Permutation multiplier(std::size_t a, std::size_t n) {
    require(n >= 1, "multiplier needs n >= 1");
    require(std::gcd(a % n, n) == 1,
            "multiplier " + std::to_string(a) + " is not a unit modulo " + std::to_string(n));
    Images images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>((a * i) % n);
    return Permutation::from_images(std::move(images));
}

std::vector<std::size_t> multiplier_subgroup(const CyclicCode& code) {
    const std::size_t n = code.length();
    if (n == 1) return {1};
    std::vector<std::size_t> units;
    for (std::size_t a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1 && is_automorphism(code, multiplier(a, n))) units.push_back(a);
    return units;
}

std::vector<Permutation> shift_multiplier_generators(const CyclicCode& code) {
    std::vector<Permutation> gens{shift(code.length())};
    for (std::size_t a : multiplier_subgroup(code))
        if (a != 1) gens.push_back(multiplier(a, code.length()));
    return gens;
}

std::vector<Permutation> symmetric_generators(std::size_t degree) {
    if (degree < 2) return {};
    std::vector<Permutation> gens;
    gens.push_back(Permutation::from_cycles(degree, {{1, 2}}));
    if (degree > 2) gens.push_back(shift(degree));
    return gens;
}

// --- ConstructionSpec ----------------------------------------------------------------

namespace {

constexpr std::array<std::pair<ConstructionKind, std::string_view>, 8> kKindNames{{
    {ConstructionKind::BlockRows, "BlockRows"},
    {ConstructionKind::LiftedColumn, "LiftedColumn"},
    {ConstructionKind::InterleavedLift, "InterleavedLift"},
    {ConstructionKind::PairSwap, "PairSwap"},
    {ConstructionKind::ResidueLift, "ResidueLift"},
    {ConstructionKind::RowPermutation, "RowPermutation"},
    {ConstructionKind::Multiplier, "Multiplier"},
    {ConstructionKind::Shift, "Shift"},
}};

constexpr std::array<std::pair<InnerGroupSource::Kind, std::string_view>, 4> kSourceNames{{
    {InnerGroupSource::Kind::Symmetric, "symmetric"},
    {InnerGroupSource::Kind::Brute, "brute"},
    {InnerGroupSource::Kind::Multiplier, "multiplier"},
    {InnerGroupSource::Kind::Construct, "construct"},
}};

}  // namespace

std::string_view to_string(ConstructionKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "?";
}

ConstructionKind construction_kind_from_string(std::string_view tag) {
    for (const auto& [k, name] : kKindNames)
        if (name == tag) return k;
    throw std::invalid_argument("unknown construction kind '" + std::string(tag) + "'");
}

std::string_view to_string(InnerGroupSource::Kind kind) {
    for (const auto& [k, name] : kSourceNames)
        if (k == kind) return name;
    return "?";
}

InnerGroupSource::Kind inner_source_kind_from_string(std::string_view tag) {
    for (const auto& [k, name] : kSourceNames)
        if (name == tag) return k;
    throw std::invalid_argument("unknown inner group source '" + std::string(tag) + "'");
}

std::size_t inner_degree(const ConstructionSpec& spec, std::size_t length) {
    switch (spec.kind) {
        case ConstructionKind::LiftedColumn:
            return whole_quotient(length, spec.k, "block count k");
        case ConstructionKind::InterleavedLift:
            return whole_quotient(length, 2, "interleaving");
        case ConstructionKind::ResidueLift:
            return whole_quotient(length, spec.rows, "residue row count");
        case ConstructionKind::RowPermutation:
            whole_quotient(length, spec.rows, "residue row count");
            return spec.rows;
        default:
            return 0;
    }
}

std::vector<Permutation> instantiate(const ConstructionSpec& spec, const CyclicCode& code,
                                     const std::vector<Permutation>& inner) {
    const std::size_t n = code.length();
    const std::size_t want = inner_degree(spec, n);
    for (const auto& p : inner)
        require(p.degree() == want, std::string(to_string(spec.kind)) +
                                        ": inner permutation of degree " +
                                        std::to_string(p.degree()) + ", expected " +
                                        std::to_string(want));

    std::vector<Permutation> out;
    switch (spec.kind) {
        case ConstructionKind::Shift:
            out.push_back(shift(n));
            break;
        case ConstructionKind::BlockRows:
            require(spec.k * spec.columns == n,
                    "BlockRows " + std::to_string(spec.k) + "x" + std::to_string(spec.columns) +
                        " does not match length " + std::to_string(n));
            out = block_row_generators(spec.k, spec.columns);
            break;
        case ConstructionKind::LiftedColumn:
            for (const auto& tau : inner) out.push_back(lifted_column_perm(tau, spec.k));
            break;
        case ConstructionKind::InterleavedLift:
            for (unsigned row = 1; row <= 2; ++row) {
                if (spec.row != 0 && spec.row != row) continue;
                for (const auto& sigma : inner) out.push_back(interleaved_lift(sigma, row));
            }
            break;
        case ConstructionKind::PairSwap: {
            const std::size_t half = spec.half != 0 ? spec.half : n / 2;
            require(2 * half == n, "PairSwap p=" + std::to_string(half) +
                                       " does not match length " + std::to_string(n));
            out.push_back(pair_swap(half));
            break;
        }
        case ConstructionKind::ResidueLift:
            for (std::size_t row = 1; row <= spec.rows; ++row) {
                if (spec.row != 0 && spec.row != row) continue;
                for (const auto& alpha : inner) out.push_back(residue_lift(alpha, row, spec.rows));
            }
            break;
        case ConstructionKind::RowPermutation:
            for (const auto& beta : inner) out.push_back(row_permutation(beta, n / spec.rows));
            break;
        case ConstructionKind::Multiplier:
            if (spec.unit != 0) {
                out.push_back(multiplier(spec.unit, n));
            } else {
                for (std::size_t a : multiplier_subgroup(code))
                    if (a != 1) out.push_back(multiplier(a, n));
            }
            break;
    }
    return out;
}

}  // namespace cyclaut
