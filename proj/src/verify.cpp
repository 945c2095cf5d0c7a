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

#include "cyclaut/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace cyclaut {

bool is_automorphism(const CyclicCode& code, const Permutation& p) {
    if (p.degree() != code.length())
        throw std::invalid_argument("permutation of degree " + std::to_string(p.degree()) +
                                    " tested against a code of length " +
                                    std::to_string(code.length()));
    for (const auto& row : code.generator_rows())
        if (!code.contains_bits(apply_to_word(p, row).words())) return false;
    return true;
}

// --- brute force ---------------------------------------------------------------------

namespace {

constexpr std::size_t kMembershipTableMaxN = 20;

std::size_t resolve_jobs(std::size_t jobs) {
    if (jobs != 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Candidate test specialized to single-word codes: rows as bit masks and,
// for short lengths, a precomputed membership bitmap.
class SmallAutTester {
public:
    explicit SmallAutTester(const CyclicCode& code) : code_(code) {
        const std::size_t n = code.length();
        for (const auto& row : code.generator_rows()) rows_.push_back(row.words()[0]);
        if (n <= kMembershipTableMaxN) {
            member_.assign(std::size_t{1} << n, false);
            std::array<std::uint64_t, 1> bits{};
            for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
                bits[0] = w;
                member_[w] = code.contains_bits(bits);
            }
        }
    }

    bool accepts(const std::vector<std::uint32_t>& images) const {
        for (std::uint64_t row : rows_) {
            std::uint64_t image = 0;
            while (row != 0) {
                image |= std::uint64_t{1} << images[static_cast<std::size_t>(std::countr_zero(row))];
                row &= row - 1;
            }
            if (!member(image)) return false;
        }
        return true;
    }

private:
    bool member(std::uint64_t word) const {
        if (!member_.empty()) return member_[word];
        std::array<std::uint64_t, 1> bits{word};
        return code_.contains_bits(bits);
    }

    const CyclicCode& code_;
    std::vector<std::uint64_t> rows_;
    std::vector<bool> member_;
};

}  // namespace

BruteForceResult brute_force_aut_group(const CyclicCode& code, const BruteForceOptions& options) {
    const std::size_t n = code.length();
    if (n > options.max_n)
        throw LimitExceeded("brute force over S_" + std::to_string(n) + " exceeds max_n = " +
                            std::to_string(options.max_n) +
                            "; raise --max-n or verify a construction instead (aut-construct)");
    if (n > 64) throw LimitExceeded("brute force supports lengths up to 64");

    const SmallAutTester tester(code);
    std::vector<std::vector<Permutation>> by_first(n);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t first = next++; first < n; first = next++) {
            std::vector<std::uint32_t> tail;
            for (std::uint32_t i = 0; i < n; ++i)
                if (i != first) tail.push_back(i);
            std::vector<std::uint32_t> images(n);
            images[0] = static_cast<std::uint32_t>(first);
            do {
                std::copy(tail.begin(), tail.end(), images.begin() + 1);
                if (tester.accepts(images)) by_first[first].push_back(Permutation::from_images(images));
            } while (std::next_permutation(tail.begin(), tail.end()));
        }
    };

    const std::size_t jobs = std::min(resolve_jobs(options.jobs), n);
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
    }

    BruteForceResult result;
    for (auto& chunk : by_first)
        for (auto& p : chunk) result.elements.push_back(std::move(p));

    result.generators = reduce_generators(n, result.elements);
    const BigInt order = PermGroup::build(n, result.generators).order();
    if (order != result.elements.size())
        throw std::logic_error("automorphism set of size " + std::to_string(result.elements.size()) +
                               " generates a group of order " + to_decimal(order));
    return result;
}

std::vector<Permutation> brute_force_aut(const CyclicCode& code, const BruteForceOptions& options) {
    return brute_force_aut_group(code, options).elements;
}

// --- negative sampling -----------------------------------------------------------------

SampleResult sample_outside(const CyclicCode& code, const PermGroup& group, std::size_t trials,
                            std::uint64_t seed) {
    const std::size_t n = code.length();
    if (group.degree() != n)
        throw std::invalid_argument("group of degree " + std::to_string(group.degree()) +
                                    " sampled against a code of length " + std::to_string(n));
    SampleResult result;
    result.seed = seed;
    std::mt19937_64 rng(seed);
    const std::size_t max_draws = 64 * trials + 1024;
    while (result.tested < trials && result.drawn < max_draws) {
        Permutation p = random_permutation(rng, n);
        ++result.drawn;
        if (group.contains(p)) continue;
        ++result.tested;
        if (!is_automorphism(code, p)) continue;
        ++result.escapes;
        if (result.counterexamples.size() < kMaxRecordedCounterexamples)
            result.counterexamples.push_back(std::move(p));
    }
    return result;
}

// --- generator assembly ----------------------------------------------------------------

namespace {

std::mutex& inner_cache_mutex() {
    static std::mutex mutex;
    return mutex;
}

std::map<std::string, std::vector<Permutation>>& inner_cache() {
    static std::map<std::string, std::vector<Permutation>> cache;
    return cache;
}

CyclicCode inner_code(const InnerGroupSource& source) {
    return CyclicCode(source.length, parse_generator_expression(source.generator));
}

}  // namespace

std::vector<Permutation> resolve_inner(const InnerGroupSource& source,
                                       const BruteForceOptions& brute) {
    using Kind = InnerGroupSource::Kind;
    if (source.kind == Kind::Symmetric) return symmetric_generators(source.length);
    if (source.kind == Kind::Construct) {
        std::vector<Permutation> out;
        for (auto& g : build_generators(inner_code(source), source.construction, brute))
            out.push_back(std::move(g.permutation));
        return out;
    }

    const CyclicCode code = inner_code(source);
    const std::string key = std::string(to_string(source.kind)) + "|" +
                            std::to_string(source.length) + "|" + code.generator().to_string();
    {
        std::lock_guard lock(inner_cache_mutex());
        if (auto it = inner_cache().find(key); it != inner_cache().end()) return it->second;
    }
    std::vector<Permutation> gens = source.kind == Kind::Brute
                                        ? brute_force_aut_group(code, brute).generators
                                        : shift_multiplier_generators(code);
    std::lock_guard lock(inner_cache_mutex());
    return inner_cache().emplace(key, std::move(gens)).first->second;
}

std::vector<LabeledGenerator> build_generators(const CyclicCode& code,
                                               const std::vector<ConstructionSpec>& specs,
                                               const BruteForceOptions& brute) {
    std::vector<LabeledGenerator> out;
    for (std::size_t s = 0; s < specs.size(); ++s) {
        const ConstructionSpec& spec = specs[s];
        const std::size_t degree = inner_degree(spec, code.length());
        std::vector<Permutation> inner;
        if (degree == 0 && (!spec.cycles.empty() || spec.inner))
            throw std::invalid_argument(std::string(to_string(spec.kind)) +
                                        " takes no inner permutations");
        for (const auto& text : spec.cycles) inner.push_back(Permutation::parse_cycles(text, degree));
        if (spec.inner) {
            if (spec.inner->length != degree)
                throw std::invalid_argument(std::string(to_string(spec.kind)) +
                                            ": inner source has length " +
                                            std::to_string(spec.inner->length) + ", expected " +
                                            std::to_string(degree));
            for (auto& p : resolve_inner(*spec.inner, brute)) inner.push_back(std::move(p));
        }
        if (degree != 0 && inner.empty())
            throw std::invalid_argument(std::string(to_string(spec.kind)) +
                                        " needs inner permutations (cycles or inner source)");

        const auto perms = instantiate(spec, code, inner);
        for (std::size_t i = 0; i < perms.size(); ++i)
            out.push_back({perms[i], "spec " + std::to_string(s + 1) + " (" +
                                         std::string(to_string(spec.kind)) + ") generator " +
                                         std::to_string(i + 1)});
    }
    return out;
}

// --- claims ----------------------------------------------------------------------------

std::string_view to_string(ClaimKind kind) {
    return kind == ClaimKind::Full ? "full" : "subgroup";
}

ClaimKind claim_kind_from_string(std::string_view tag) {
    if (tag == "full") return ClaimKind::Full;
    if (tag == "subgroup") return ClaimKind::Subgroup;
    throw std::invalid_argument("unknown claim kind '" + std::string(tag) +
                                "' (expected full or subgroup)");
}

std::string_view to_string(Method method) {
    switch (method) {
        case Method::Brute: return "brute";
        case Method::Construct: return "construct";
        case Method::Multiplier: return "multiplier";
    }
    return "?";
}

Method method_from_string(std::string_view tag) {
    if (tag == "brute") return Method::Brute;
    if (tag == "construct") return Method::Construct;
    if (tag == "multiplier") return Method::Multiplier;
    throw std::invalid_argument("unknown method '" + std::string(tag) +
                                "' (expected brute, construct or multiplier)");
}

BigInt parse_decimal(std::string_view text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
            return c >= '0' && c <= '9';
        }))
        throw std::invalid_argument("'" + std::string(text) + "' is not a nonnegative integer");
    return BigInt(std::string(text));
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerificationReport base_report(const CyclicCode& code, Method method, std::string_view expected,
                               const VerifyOptions& options) {
    VerificationReport report;
    report.n = code.length();
    report.generator = code.generator().to_string();
    report.method = method;
    report.claim = options.claim;
    report.expected_order = std::string(expected);
    return report;
}

bool order_matches(const BigInt& computed, const BigInt& expected, ClaimKind claim) {
    if (claim == ClaimKind::Full) return computed == expected;
    return computed != 0 && expected % computed == 0;
}

std::string order_detail(const BigInt& computed, const BigInt& expected, ClaimKind claim) {
    const std::string c = to_decimal(computed);
    const std::string e = to_decimal(expected);
    if (claim == ClaimKind::Full)
        return computed == expected ? "order " + c + " matches expected"
                                    : "order mismatch: " + c + " vs " + e + " (computed vs expected)";
    return expected % computed == 0
               ? "subgroup of order " + c + " divides expected " + e + " (index " +
                     to_decimal(expected / computed) + ")"
               : "subgroup order " + c + " does not divide expected " + e;
}

// Shared tail of the construct and multiplier methods.
VerificationReport verify_generators(VerificationReport report, const CyclicCode& code,
                                     const std::vector<LabeledGenerator>& gens,
                                     const VerifyOptions& options, Clock::time_point start) {
    const BigInt expected = parse_decimal(report.expected_order);
    report.generator_count = gens.size();
    for (const auto& g : gens) {
        if (is_automorphism(code, g.permutation)) continue;
        report.pass = false;
        report.computed_order = "";
        report.counterexample = g.permutation.format_cycles();
        report.detail = g.origin + " is not an automorphism";
        report.elapsed_ms = elapsed_ms(start);
        return report;
    }

    std::vector<Permutation> perms;
    perms.reserve(gens.size());
    for (const auto& g : gens) perms.push_back(g.permutation);
    const PermGroup group = PermGroup::build(code.length(), perms);
    const BigInt computed = group.order();
    report.computed_order = to_decimal(computed);
    report.pass = order_matches(computed, expected, options.claim);
    report.detail = order_detail(computed, expected, options.claim);

    if (options.sampling) {
        SampleResult sample =
            sample_outside(code, group, options.sampling->trials, options.sampling->seed);
        report.detail += "; sampled " + std::to_string(sample.tested) + " non-members, " +
                         std::to_string(sample.escapes) + " escapes";
        if (sample.escapes != 0) {
            report.pass = false;
            report.counterexample = sample.counterexamples.front().format_cycles();
        }
        report.sampling = std::move(sample);
    }
    report.elapsed_ms = elapsed_ms(start);
    return report;
}

}  // namespace

VerificationReport verify_claim(const CyclicCode& code, const std::vector<ConstructionSpec>& specs,
                                std::string_view expected_order, const VerifyOptions& options) {
    const auto start = Clock::now();
    parse_decimal(expected_order);
    VerificationReport report = base_report(code, Method::Construct, expected_order, options);
    return verify_generators(std::move(report), code, build_generators(code, specs, options.brute),
                             options, start);
}

VerificationReport verify_multiplier(const CyclicCode& code, std::string_view expected_order,
                                     const VerifyOptions& options) {
    const auto start = Clock::now();
    parse_decimal(expected_order);
    VerificationReport report = base_report(code, Method::Multiplier, expected_order, options);
    std::vector<LabeledGenerator> gens{{shift(code.length()), "shift"}};
    const auto units = multiplier_subgroup(code);
    for (std::size_t a : units)
        if (a != 1) gens.push_back({multiplier(a, code.length()), "multiplier " + std::to_string(a)});
    report = verify_generators(std::move(report), code, gens, options, start);
    report.detail = std::to_string(units.size()) + " multiplier units; " + report.detail;
    return report;
}

VerificationReport verify_brute(const CyclicCode& code, std::string_view expected_order,
                                const VerifyOptions& options) {
    const auto start = Clock::now();
    const BigInt expected = parse_decimal(expected_order);
    VerificationReport report = base_report(code, Method::Brute, expected_order, options);
    const BruteForceResult result = brute_force_aut_group(code, options.brute);
    const BigInt computed = result.elements.size();
    report.generator_count = result.generators.size();
    report.computed_order = to_decimal(computed);
    report.pass = order_matches(computed, expected, options.claim);
    report.detail = order_detail(computed, expected, options.claim) + " (exhaustive over S_" +
                    std::to_string(code.length()) + ")";
    report.elapsed_ms = elapsed_ms(start);
    return report;
}

}  // namespace cyclaut
