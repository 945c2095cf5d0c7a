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

#include "cyclaut/group.hpp"

#include <limits>
#include <stdexcept>

namespace cyclaut {

std::string to_decimal(const BigInt& value) { return value.str(); }

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    while (true) {
        const std::uint64_t draw = rng();
        if (draw < limit) return draw % bound;
    }
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t degree) {
    std::vector<std::uint32_t> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = degree; i > 1; --i) std::swap(images[i - 1], images[uniform_below(rng, i)]);
    return Permutation::from_images(std::move(images));
}

PermGroup PermGroup::build(std::size_t degree, std::span<const Permutation> generators) {
    PermGroup group;
    group.degree_ = degree;
    for (const auto& g : generators) {
        if (g.degree() != degree)
            throw std::invalid_argument("generator of degree " + std::to_string(g.degree()) +
                                        " in a group of degree " + std::to_string(degree));
        if (!g.is_identity()) group.generators_.push_back(g);
    }

    // Initial base: walk the generators, opening a level whenever one fixes
    // every base point chosen so far.
    for (const auto& g : group.generators_) {
        bool fixes_base = true;
        for (const auto& level : group.levels_)
            if (g(level.base_point) != level.base_point) {
                fixes_base = false;
                break;
            }
        if (fixes_base) group.add_level(static_cast<std::uint32_t>(g.first_moved()));
    }
    for (auto& level : group.levels_) {
        const std::size_t depth = static_cast<std::size_t>(&level - group.levels_.data());
        for (const auto& g : group.generators_) {
            bool fixes_prefix = true;
            for (std::size_t j = 0; j < depth; ++j)
                if (g(group.levels_[j].base_point) != group.levels_[j].base_point) {
                    fixes_prefix = false;
                    break;
                }
            if (fixes_prefix) level.gens.push_back(g);
        }
        group.extend_orbit(level, 0);
    }
    group.schreier_sims();
    return group;
}

void PermGroup::add_level(std::uint32_t base_point) {
    Level level;
    level.base_point = base_point;
    level.slot.assign(degree_, -1);
    level.slot[base_point] = 0;
    level.orbit.push_back(base_point);
    level.reps.push_back(Permutation::identity(degree_));
    level.rep_inverses.push_back(Permutation::identity(degree_));
    level.parent.emplace_back(std::numeric_limits<std::size_t>::max(), 0);
    level.tested.push_back(0);
    levels_.push_back(std::move(level));
}

void PermGroup::extend_orbit(Level& level, std::size_t first_new_gen) {
    const std::size_t old_size = level.orbit.size();
    for (std::size_t j = 0; j < level.orbit.size(); ++j) {
        const std::size_t from_gen = j < old_size ? first_new_gen : 0;
        for (std::size_t g = from_gen; g < level.gens.size(); ++g) {
            const std::uint32_t image = level.gens[g](level.orbit[j]);
            if (level.slot[image] >= 0) continue;
            level.slot[image] = static_cast<std::int32_t>(level.orbit.size());
            level.orbit.push_back(image);
            Permutation rep = compose(level.gens[g], level.reps[j]);
            level.rep_inverses.push_back(rep.inverse());
            level.reps.push_back(std::move(rep));
            level.parent.emplace_back(j, g);
            level.tested.push_back(0);
        }
    }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t from_level) const {
    for (std::size_t i = from_level; i < levels_.size(); ++i) {
        const Level& level = levels_[i];
        const std::int32_t j = level.slot[p(level.base_point)];
        if (j < 0) return {std::move(p), i};
        if (j != 0) p = compose(level.rep_inverses[static_cast<std::size_t>(j)], p);
    }
    return {std::move(p), levels_.size()};
}

void PermGroup::schreier_sims() {
    std::size_t i = levels_.size();
    while (i-- > 0) {
        bool descended = false;
        Level* level = &levels_[i];
        for (std::size_t j = 0; j < level->orbit.size() && !descended; ++j) {
            for (std::size_t g = level->tested[j]; g < level->gens.size(); ++g) {
                level->tested[j] = g + 1;
                const std::uint32_t image = level->gens[g](level->orbit[j]);
                const auto target = static_cast<std::size_t>(level->slot[image]);
                if (level->parent[target] == std::pair{j, g}) continue;  // tree edge: trivial

                Permutation schreier =
                    compose(level->rep_inverses[target], compose(level->gens[g], level->reps[j]));
                auto [residue, stop] = sift(std::move(schreier), i + 1);
                if (stop == levels_.size() && residue.is_identity()) continue;

                ++added_generators_;
                if (stop == levels_.size())
                    add_level(static_cast<std::uint32_t>(residue.first_moved()));
                for (std::size_t l = i + 1; l <= stop; ++l) {
                    Level& lower = levels_[l];
                    lower.gens.push_back(residue);
                    extend_orbit(lower, lower.gens.size() - 1);
                }
                // Resume at the deepest touched level; this one is revisited
                // once everything below it is complete again.
                i = stop + 1;
                descended = true;
                break;
            }
        }
    }
}

BigInt PermGroup::order() const {
    BigInt result = 1;
    for (const auto& level : levels_) result *= level.orbit.size();
    return result;
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_)
        throw std::invalid_argument("membership test for degree " + std::to_string(p.degree()) +
                                    " in a group of degree " + std::to_string(degree_));
    auto [residue, stop] = sift(p, 0);
    return stop == levels_.size() && residue.is_identity();
}

Permutation PermGroup::random_element(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    Permutation result = Permutation::identity(degree_);
    for (const auto& level : levels_)
        result = compose(result, level.reps[uniform_below(rng, level.orbit.size())]);
    return result;
}

std::vector<std::size_t> PermGroup::base() const {
    std::vector<std::size_t> out;
    for (const auto& level : levels_) out.push_back(level.base_point);
    return out;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& level : levels_) out.push_back(level.orbit.size());
    return out;
}

std::size_t PermGroup::strong_generator_count() const {
    return generators_.size() + added_generators_;
}

std::vector<Permutation> reduce_generators(std::size_t degree,
                                           std::span<const Permutation> elements) {
    std::vector<Permutation> kept;
    PermGroup group = PermGroup::build(degree, kept);
    for (const auto& e : elements) {
        if (group.contains(e)) continue;
        kept.push_back(e);
        group = PermGroup::build(degree, kept);
    }
    return kept;
}

}  // namespace cyclaut
