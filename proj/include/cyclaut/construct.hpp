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

#ifndef CYCLAUT_CONSTRUCT_HPP
#define CYCLAUT_CONSTRUCT_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cyclaut/code.hpp"
#include "cyclaut/perm.hpp"

namespace cyclaut {

/*
   Explicit automorphism generators for long cyclic codes built from
   shorter ones. Two coordinate arrangements are in play and a single
   construction never mixes them:

     block rows    (k x n, row r = coordinates r*n+1 .. (r+1)*n)
                   codes of length kn whose generator divides x^n - 1;
     residue rows  (R x C, entry (a, b) = coordinate a + (b-1)*R)
                   codes whose generator is a polynomial in x^R; R = 2 is
                   the odd/even interleaving.

   All arguments and results use 0-based points internally; row indices
   in the API are 1-based like the matrix pictures they describe.
*/

/// The n-cycle (1,2,...,n): the right cyclic shift.
Permutation shift(std::size_t n);

/// For each column i of a k x n block-row matrix, the k-cycle
/// (i, n+i, ..., (k-1)n+i) and the transposition (i, n+i). For k = 2 the
/// two coincide and only one is emitted. Throws for k < 2 or n < 1.
std::vector<Permutation> block_row_generators(std::size_t k, std::size_t n);

/// tau acting on every block: j + r*n -> tau(j) + r*n.
Permutation lifted_column_perm(const Permutation& tau, std::size_t k);

/// sigma on one parity class of 2p points: row 1 maps 2j-1 -> 2sigma(j)-1,
/// row 2 maps 2j -> 2sigma(j). Throws unless row is 1 or 2.
Permutation interleaved_lift(const Permutation& sigma, unsigned row);

/// (1,2)(3,4)...(2p-1,2p).
Permutation pair_swap(std::size_t p);

/// alpha acting along residue row `row` (1-based) of an R x C layout with
/// C = alpha.degree(): coordinate a + (b-1)R -> a + (alpha(b)-1)R.
Permutation residue_lift(const Permutation& alpha, std::size_t row, std::size_t rows);
/// Prime-power form: R = p^m, C = p^(n-m), degree p^n, 0 <= m < n.
Permutation residue_lift(const Permutation& alpha, std::size_t row, std::size_t prime,
                         std::size_t exponent, std::size_t row_exponent);

/// beta permuting the rows of an R x C residue layout with R = beta.degree():
/// coordinate a + (b-1)R -> beta(a) + (b-1)R.
Permutation row_permutation(const Permutation& beta, std::size_t cols);
Permutation row_permutation(const Permutation& beta, std::size_t prime, std::size_t exponent,
                            std::size_t row_exponent);

/// Residue i-1 -> a(i-1) mod n on coordinates 1..n. Throws unless gcd(a, n) = 1.
Permutation multiplier(std::size_t a, std::size_t n);

/// Units a of Z/nZ whose multiplier is an automorphism of the code, ascending.
std::vector<std::size_t> multiplier_subgroup(const CyclicCode& code);

/// Generators of <shift, multipliers> for the code: shift(n) followed by
/// multiplier(a, n) for every nontrivial unit in multiplier_subgroup.
std::vector<Permutation> shift_multiplier_generators(const CyclicCode& code);

/// {(1,2), (1,2,...,d)}; empty for d < 2.
std::vector<Permutation> symmetric_generators(std::size_t degree);

enum class ConstructionKind {
    BlockRows,
    LiftedColumn,
    InterleavedLift,
    PairSwap,
    ResidueLift,
    RowPermutation,
    Multiplier,
    Shift,
};

std::string_view to_string(ConstructionKind kind);
/// Throws std::invalid_argument for an unknown tag.
ConstructionKind construction_kind_from_string(std::string_view tag);

struct ConstructionSpec;

/*
   Where a construction's inner permutations come from when they are not
   listed explicitly: a generating set of (a subgroup of) the automorphism
   group of a shorter code.
*/
struct InnerGroupSource {
    enum class Kind {
        Symmetric,   // generators of S_length
        Brute,       // exhaustive Aut, reduced to a generating set
        Multiplier,  // shift plus multiplier automorphisms
        Construct,   // nested constructions on the inner code
    };
    Kind kind = Kind::Symmetric;
    std::size_t length = 0;
    std::string generator;  // polynomial text; unused for Symmetric
    std::vector<ConstructionSpec> construction;
};

std::string_view to_string(InnerGroupSource::Kind kind);
InnerGroupSource::Kind inner_source_kind_from_string(std::string_view tag);

/*
   One family of generators. Parameters that a kind does not use stay 0.

     BlockRows        k, columns
     LiftedColumn     k; inner perms of degree n/k
     InterleavedLift  row (1|2, 0 = both); inner perms of degree n/2
     PairSwap         half (p, with 2p = n)
     ResidueLift      rows; row (1-based, 0 = every row); inner perms of
                      degree n/rows
     RowPermutation   rows; inner perms of degree rows
     Multiplier       unit (0 = every unit of multiplier_subgroup)
     Shift            -
*/
struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::Shift;
    std::size_t k = 0;
    std::size_t columns = 0;
    std::size_t rows = 0;
    std::size_t row = 0;
    std::size_t half = 0;
    std::size_t unit = 0;
    std::vector<std::string> cycles;  // explicit inner permutations
    std::shared_ptr<const InnerGroupSource> inner;
};

/// Degree the inner permutations of `spec` must have when instantiated for
/// a code of length `length`, or 0 when the kind takes none. Throws
/// std::invalid_argument when the parameters do not fit the length.
std::size_t inner_degree(const ConstructionSpec& spec, std::size_t length);

/// Instantiates `spec` for `code` given its resolved inner permutations.
std::vector<Permutation> instantiate(const ConstructionSpec& spec, const CyclicCode& code,
                                     const std::vector<Permutation>& inner);

}  // namespace cyclaut

#endif  // CYCLAUT_CONSTRUCT_HPP
