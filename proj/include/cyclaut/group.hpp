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

#ifndef CYCLAUT_GROUP_HPP
#define CYCLAUT_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclaut/perm.hpp"

namespace cyclaut {

using BigInt = boost::multiprecision::cpp_int;

/// Decimal rendering, never scientific notation.
std::string to_decimal(const BigInt& value);

/// Uniform integer in [0, bound) by rejection; identical across standard
/// libraries, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Fisher-Yates shuffle of the identity.
Permutation random_permutation(std::mt19937_64& rng, std::size_t degree);

/*
   Permutation group with a base and strong generating set built by the
   deterministic Schreier-Sims algorithm.

   Level i holds base point b_i, the strong generators fixing b_0..b_{i-1},
   the orbit of b_i under them and an explicit transversal: for every orbit
   point x a stored permutation u_x with u_x(b_i) = x (plus its inverse).
   Every Schreier generator u_{s(x)}^-1 s u_x is sifted through the levels
   below exactly once; a nontrivial residue becomes a new strong generator.
   A new level takes the smallest point moved by the generator that forced
   it. |G| is the product of the orbit lengths.

   A built group is immutable and safe to query from several threads.
*/
class PermGroup {
public:
    /// Throws std::invalid_argument when a generator's degree differs from
    /// `degree`.
    static PermGroup build(std::size_t degree, std::span<const Permutation> generators);

    [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
    [[nodiscard]] const std::vector<Permutation>& generators() const noexcept {
        return generators_;
    }

    [[nodiscard]] BigInt order() const;
    /// Throws std::invalid_argument on degree mismatch.
    [[nodiscard]] bool contains(const Permutation& p) const;
    /// Uniform element, deterministic in the seed.
    [[nodiscard]] Permutation random_element(std::uint64_t seed) const;

    /// 0-based base points.
    [[nodiscard]] std::vector<std::size_t> base() const;
    [[nodiscard]] std::vector<std::size_t> orbit_lengths() const;
    [[nodiscard]] std::size_t strong_generator_count() const;

private:
    struct Level {
        std::uint32_t base_point = 0;
        std::vector<Permutation> gens;
        std::vector<std::uint32_t> orbit;
        std::vector<std::int32_t> slot;  // point -> index into orbit, -1 outside
        std::vector<Permutation> reps;
        std::vector<Permutation> rep_inverses;
        // Transversal tree edge that discovered orbit[j]: (orbit index, gen index).
        std::vector<std::pair<std::size_t, std::size_t>> parent;
        // Schreier pairs (orbit[j], gens[g]) with g < tested[j] are done.
        std::vector<std::size_t> tested;
    };

    PermGroup() = default;

    void add_level(std::uint32_t base_point);
    void extend_orbit(Level& level, std::size_t first_new_gen);
    // Returns the residue and the level where sifting stopped (levels_.size()
    // when it passed every level).
    std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from_level) const;
    void schreier_sims();

    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Level> levels_;
    std::size_t added_generators_ = 0;
};

/// Greedy subset of `elements` generating the same group: an element is
/// kept only when it is not in the group generated by those kept before it.
std::vector<Permutation> reduce_generators(std::size_t degree,
                                           std::span<const Permutation> elements);

}  // namespace cyclaut

#endif  // CYCLAUT_GROUP_HPP
