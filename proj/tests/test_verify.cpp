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

#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cyclaut/construct.hpp"
#include "cyclaut/group.hpp"
#include "cyclaut/manifest.hpp"
#include "cyclaut/verify.hpp"
#include "oracles.hpp"

using cyclaut::ClaimKind;
using cyclaut::Codeword;
using cyclaut::CyclicCode;
using cyclaut::Gf2Poly;
using cyclaut::PermGroup;
using cyclaut::Permutation;

namespace {

CyclicCode code(std::size_t n, const char* g) {
    return CyclicCode(n, cyclaut::parse_generator_expression(g));
}

Permutation C(const char* text, std::size_t degree) { return Permutation::parse_cycles(text, degree); }

std::vector<cyclaut::ConstructionSpec> specs(const char* json, std::size_t n) {
    return cyclaut::parse_constructions_text(json, n);
}

constexpr const char* kInterleaved14 =
    R"J([{"kind": "InterleavedLift", "inner": {"source": "brute", "n": 7, "generator": "x^3+x+1"}},
        {"kind": "PairSwap"}])J";

constexpr const char* kProduct14 =
    R"J([{"kind": "BlockRows", "k": 2, "n": 7},
        {"kind": "LiftedColumn", "k": 2,
         "inner": {"source": "brute", "n": 7, "generator": "(x^3+x+1)(x^3+x^2+1)"}}])J";

// Every divisor of x^n - 1.
std::vector<Gf2Poly> all_divisors(std::size_t n) {
    std::vector<Gf2Poly> out{Gf2Poly::one()};
    for (const auto& f : cyclaut::factor_xn_minus_1(n)) {
        std::vector<Gf2Poly> next;
        for (const auto& d : out) {
            Gf2Poly power = Gf2Poly::one();
            for (unsigned e = 0; e <= f.multiplicity; ++e) {
                next.push_back(d * power);
                power = power * f.factor;
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("is_automorphism examples") {
    const CyclicCode hamming = code(7, "x^3+x+1");
    CHECK(cyclaut::is_automorphism(hamming, cyclaut::shift(7)));
    CHECK_FALSE(cyclaut::is_automorphism(hamming, C("(1,2)", 7)));
    CHECK(cyclaut::is_automorphism(code(14, "(x^3+x+1)^2"), cyclaut::pair_swap(7)));
    CHECK_THROWS_AS(cyclaut::is_automorphism(hamming, cyclaut::shift(8)), std::invalid_argument);
}

TEST_CASE("is_automorphism agrees with the full codeword set") {
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const auto& g : all_divisors(n)) {
            const CyclicCode c(n, g);
            const auto words = oracle::codewords(c);
            CHECK(cyclaut::is_automorphism(c, cyclaut::shift(n)));
            for (int t = 0; t < 30; ++t) {
                const Permutation p = cyclaut::random_permutation(rng, n);
                CAPTURE(n);
                CAPTURE(g.to_string());
                CHECK(cyclaut::is_automorphism(c, p) == oracle::is_automorphism(words, p));
            }
        }
    }
}

TEST_CASE("brute force examples") {
    CHECK(cyclaut::brute_force_aut(code(7, "x^3+x+1")).size() == 168);
    CHECK(cyclaut::brute_force_aut(code(7, "(x^3+x+1)(x^3+x^2+1)")).size() == 5040);
    CHECK(cyclaut::brute_force_aut(CyclicCode(5, Gf2Poly::xn_plus_one(5))).size() == 120);
    CHECK(cyclaut::brute_force_aut(code(5, "1")).size() == 120);

    const auto err = [] { (void)cyclaut::brute_force_aut(code(14, "(x^3+x+1)^2")); };
    CHECK_THROWS_AS(err(), cyclaut::LimitExceeded);
    CHECK_THROWS_WITH(err(), doctest::Contains("construct"));
    cyclaut::BruteForceOptions low;
    low.max_n = 6;
    CHECK_THROWS_AS((void)cyclaut::brute_force_aut(code(7, "x^3+x+1"), low), cyclaut::LimitExceeded);
}

TEST_CASE("brute force output is lexicographic and independent of the worker count") {
    const CyclicCode hamming = code(7, "x^3+x+1");
    cyclaut::BruteForceOptions one;
    one.jobs = 1;
    cyclaut::BruteForceOptions many;
    many.jobs = 5;
    const auto a = cyclaut::brute_force_aut(hamming, one);
    const auto b = cyclaut::brute_force_aut(hamming, many);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i) {
        const std::vector<std::uint32_t> x(a[i - 1].images().begin(), a[i - 1].images().end());
        const std::vector<std::uint32_t> y(a[i].images().begin(), a[i].images().end());
        CHECK(x < y);
    }
    CHECK(a.front().is_identity());
    const auto result = cyclaut::brute_force_aut_group(hamming);
    CHECK(PermGroup::build(7, result.generators).order() == 168);
    CHECK(result.generators.size() <= 7);
}

TEST_CASE("brute force properties for every code with n <= 8") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto& g : all_divisors(n)) {
            const CyclicCode c(n, g);
            CAPTURE(n);
            CAPTURE(g.to_string());
            const auto all = cyclaut::brute_force_aut(c);
            const std::set<Permutation> members(all.begin(), all.end());
            CHECK(members.size() == all.size());
            CHECK(members.contains(cyclaut::shift(n)));
            // Closed under composition and inverse.
            for (const auto& a : all) {
                CHECK(members.contains(a.inverse()));
                if (all.size() <= 200)
                    for (const auto& b : all) CHECK(members.contains(a * b));
            }
            // Schreier-Sims order equals the element count.
            CHECK(PermGroup::build(n, all).order() == all.size());
            // Every automorphism preserves the weight distribution of the image multiset.
            const auto words = cyclaut::enumerate_codewords(c);
            const auto expected = cyclaut::weight_distribution(c);
            for (std::size_t i = 0; i < all.size(); i += 1 + all.size() / 64) {
                std::map<std::size_t, std::uint64_t> image;
                for (const auto& w : words) {
                    const Codeword moved = cyclaut::apply_to_word(all[i], w);
                    CHECK(c.contains(moved));
                    ++image[moved.weight()];
                }
                CHECK(image == expected);
            }
        }
    }
}

TEST_CASE("sampling outside a group") {
    const CyclicCode c14 = code(14, "(x^3+x+1)^2");
    std::vector<Permutation> gens;
    for (const auto& g : cyclaut::build_generators(c14, specs(kInterleaved14, 14)))
        gens.push_back(g.permutation);
    const PermGroup g14 = PermGroup::build(14, gens);
    REQUIRE(g14.order() == 56448);
    const auto sample = cyclaut::sample_outside(c14, g14, 1000, 0);
    CHECK(sample.escapes == 0);
    CHECK(sample.tested == 1000);
    CHECK(sample.drawn >= 1000);
    CHECK(sample.seed == 0);
    CHECK(sample.counterexamples.empty());

    // Nothing lies outside S_n, so nothing is tested and the draw cap ends the run.
    const PermGroup s7 = PermGroup::build(7, cyclaut::symmetric_generators(7));
    const auto none = cyclaut::sample_outside(code(7, "x^3+x+1"), s7, 10, 3);
    CHECK(none.escapes == 0);
    CHECK(none.tested == 0);
    CHECK(none.drawn == 64 * 10 + 1024);

    // Against the trivial group the Hamming code has 167 escaping permutations.
    const CyclicCode hamming = code(7, "x^3+x+1");
    const PermGroup trivial = PermGroup::build(7, {});
    const auto hits = cyclaut::sample_outside(hamming, trivial, 1000, 42);
    CHECK(hits.tested == 1000);
    CHECK(hits.escapes > 0);
    CHECK(hits.escapes < 200);
    CHECK(hits.counterexamples.size() == std::min<std::size_t>(hits.escapes, 16));
    for (const auto& p : hits.counterexamples) {
        CHECK(cyclaut::is_automorphism(hamming, p));
        CHECK_FALSE(trivial.contains(p));
    }
    // The same seed reproduces the run.
    const auto again = cyclaut::sample_outside(hamming, trivial, 1000, 42);
    CHECK(again.escapes == hits.escapes);
    CHECK(again.counterexamples == hits.counterexamples);
    CHECK_THROWS_AS((void)cyclaut::sample_outside(hamming, g14, 10, 0), std::invalid_argument);
}

TEST_CASE("verify_claim examples") {
    cyclaut::VerifyOptions options;
    options.sampling = cyclaut::SamplingOptions{};
    const auto r14 = cyclaut::verify_claim(code(14, "(x^3+x+1)^2"), specs(kInterleaved14, 14),
                                           "56448", options);
    CHECK(r14.pass);
    CHECK(r14.computed_order == "56448");
    REQUIRE(r14.sampling.has_value());
    CHECK(r14.sampling->escapes == 0);
    CHECK(r14.sampling->tested == 1000);

    const auto p14 = cyclaut::verify_claim(code(14, "(x^3+x+1)(x^3+x^2+1)"), specs(kProduct14, 14),
                                           "645120", options);
    CHECK(p14.pass);
    CHECK(p14.computed_order == "645120");

    const auto r49 = cyclaut::verify_claim(
        code(49, "(x^3+x+1)(x^3+x^2+1)"),
        specs(R"J([{"kind": "BlockRows", "k": 7, "n": 7},
                  {"kind": "LiftedColumn", "k": 7,
                   "inner": {"source": "brute", "n": 7, "generator": "(x^3+x+1)(x^3+x^2+1)"}}])J",
              49),
        cyclaut::to_decimal(oracle::power(5040, 8)));
    CHECK(r49.pass);
    CHECK(r49.computed_order == "416336312719673760153600000000");
}

TEST_CASE("verify_claim failures") {
    const CyclicCode c14 = code(14, "(x^3+x+1)^2");
    const auto wrong = cyclaut::verify_claim(c14, specs(kInterleaved14, 14), "56449");
    CHECK_FALSE(wrong.pass);
    CHECK(wrong.detail.find("56448") != std::string::npos);
    CHECK(wrong.detail.find("56449") != std::string::npos);

    // A row permutation that swaps the first two coordinates of the Hamming code.
    const CyclicCode hamming = code(7, "x^3+x+1");
    const auto bad = cyclaut::verify_claim(
        hamming, specs(R"J([{"kind": "Shift"}, {"kind": "RowPermutation", "rows": 7, "perms": ["(1,2)"]}])J", 7),
        "168");
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.counterexample.has_value());
    CHECK(*bad.counterexample == "(1,2)");
    CHECK(bad.detail.find("not an automorphism") != std::string::npos);

    // Subgroup claims pass on divisibility and fail otherwise.
    cyclaut::VerifyOptions sub;
    sub.claim = ClaimKind::Subgroup;
    CHECK(cyclaut::verify_claim(c14, specs(kInterleaved14, 14), "112896", sub).pass);
    CHECK_FALSE(cyclaut::verify_claim(c14, specs(kInterleaved14, 14), "56450", sub).pass);
    CHECK_THROWS_AS(cyclaut::verify_claim(c14, specs(kInterleaved14, 14), "12x"), std::invalid_argument);
}

TEST_CASE("brute and multiplier verification") {
    CHECK(cyclaut::verify_brute(code(7, "x^3+x+1"), "168").pass);
    const auto miss = cyclaut::verify_brute(code(7, "x^3+x+1"), "169");
    CHECK_FALSE(miss.pass);
    CHECK(miss.detail.find("168 vs") != std::string::npos);
    CHECK(miss.detail.find("169") != std::string::npos);

    const auto two = cyclaut::verify_multiplier(code(31, "(x^5+x^2+1)(x^5+x^3+1)"), "310");
    CHECK(two.pass);
    CHECK(two.computed_order == "310");
    const auto three =
        cyclaut::verify_multiplier(code(31, "(x^5+x^2+1)(x^5+x^3+1)(x^5+x^3+x^2+x+1)"), "155");
    CHECK(three.pass);
    cyclaut::VerifyOptions sub;
    sub.claim = ClaimKind::Subgroup;
    const auto quintic = cyclaut::verify_multiplier(code(31, "x^5+x^2+1"), "9999360", sub);
    CHECK(quintic.pass);
    CHECK(quintic.computed_order == "155");
    CHECK_FALSE(cyclaut::verify_multiplier(code(31, "x^5+x^2+1"), "9999360").pass);
}

TEST_CASE("every generator is checked individually") {
    // Inner perms that are not automorphisms of the inner code must be caught
    // even when the resulting group order happens to match.
    const auto bad = cyclaut::verify_claim(
        code(14, "(x^3+x+1)^2"),
        specs(R"J([{"kind": "InterleavedLift", "perms": ["(1,2)"]}, {"kind": "PairSwap"}])J", 14), "4");
    CHECK_FALSE(bad.pass);
    CHECK(bad.counterexample.has_value());
}

TEST_CASE("decimal parsing and tags") {
    CHECK(cyclaut::parse_decimal("0") == 0);
    CHECK(cyclaut::parse_decimal("416336312719673760153600000000") == oracle::power(5040, 8));
    CHECK_THROWS_AS(cyclaut::parse_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(cyclaut::parse_decimal("-1"), std::invalid_argument);
    CHECK_THROWS_AS(cyclaut::parse_decimal("1.5"), std::invalid_argument);
    CHECK(cyclaut::claim_kind_from_string("subgroup") == ClaimKind::Subgroup);
    CHECK(cyclaut::to_string(ClaimKind::Full) == "full");
    CHECK(cyclaut::method_from_string("multiplier") == cyclaut::Method::Multiplier);
    CHECK_THROWS_AS(cyclaut::method_from_string("guess"), std::invalid_argument);
}
