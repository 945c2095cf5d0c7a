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

#ifndef CYCLAUT_VERIFY_HPP
#define CYCLAUT_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclaut/code.hpp"
#include "cyclaut/construct.hpp"
#include "cyclaut/group.hpp"
#include "cyclaut/perm.hpp"

namespace cyclaut {

/// Raised when a request exceeds a configured size limit (for example
/// brute force beyond max_n). It is an input error, not a failed claim.
class LimitExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// True iff p maps every generator row into the code. Rows span the code,
/// so by linearity this is equivalent to p mapping the code onto itself.
/// Throws std::invalid_argument when p.degree() != code.length().
bool is_automorphism(const CyclicCode& code, const Permutation& p);

constexpr std::size_t kDefaultBruteForceMaxN = 10;

struct BruteForceOptions {
    std::size_t max_n = kDefaultBruteForceMaxN;
    std::size_t jobs = 0;  // 0 = hardware concurrency
};

struct BruteForceResult {
    std::vector<Permutation> elements;    // lexicographic in one-line form
    std::vector<Permutation> generators;  // greedy generating subset
};

/// Every automorphism of the code, found by scanning S_n in lexicographic
/// order. The scan is split by the image of the first point across worker
/// threads and merged in that order, so the output never depends on
/// `jobs`. Closure is checked by building the group generated by the
/// result and comparing its order with the element count; a mismatch
/// throws std::logic_error. Throws LimitExceeded when n > max_n.
BruteForceResult brute_force_aut_group(const CyclicCode& code,
                                       const BruteForceOptions& options = {});
std::vector<Permutation> brute_force_aut(const CyclicCode& code,
                                         const BruteForceOptions& options = {});

constexpr std::size_t kDefaultSampleTrials = 1000;
constexpr std::uint64_t kDefaultSampleSeed = 0;
constexpr std::size_t kMaxRecordedCounterexamples = 16;

struct SampleResult {
    std::size_t escapes = 0;  // non-members that passed is_automorphism
    std::size_t tested = 0;   // non-members checked
    std::size_t drawn = 0;    // uniform draws from S_n, members included
    std::uint64_t seed = 0;
    std::vector<Permutation> counterexamples;  // first few escapes
};

/// Draws seeded uniform permutations of S_n, skips members of `group`, and
/// checks the others with is_automorphism until `trials` non-members have
/// been tested. Draws stop after 64*trials + 1024 attempts, so a group that
/// is (nearly) all of S_n terminates with tested < trials.
SampleResult sample_outside(const CyclicCode& code, const PermGroup& group, std::size_t trials,
                            std::uint64_t seed);

/// A constructed generator together with where it came from.
struct LabeledGenerator {
    Permutation permutation;
    std::string origin;
};

/// Generating set of an inner group source. Brute and multiplier sources
/// are memoized per (kind, length, generator) for the life of the process.
std::vector<Permutation> resolve_inner(const InnerGroupSource& source,
                                       const BruteForceOptions& brute = {});

/// Instantiates every spec for the code, resolving explicit cycles and
/// inner sources. Throws std::invalid_argument on inconsistent parameters.
std::vector<LabeledGenerator> build_generators(const CyclicCode& code,
                                               const std::vector<ConstructionSpec>& specs,
                                               const BruteForceOptions& brute = {});

enum class ClaimKind {
    Full,      // computed order must equal the expected order
    Subgroup,  // computed order must divide the expected order
};

std::string_view to_string(ClaimKind kind);
ClaimKind claim_kind_from_string(std::string_view tag);

enum class Method { Brute, Construct, Multiplier };

std::string_view to_string(Method method);
Method method_from_string(std::string_view tag);

struct SamplingOptions {
    std::size_t trials = kDefaultSampleTrials;
    std::uint64_t seed = kDefaultSampleSeed;
};

struct VerifyOptions {
    ClaimKind claim = ClaimKind::Full;
    std::optional<SamplingOptions> sampling;
    BruteForceOptions brute;
};

struct VerificationReport {
    std::string name;
    std::size_t n = 0;
    std::string generator;
    Method method = Method::Construct;
    ClaimKind claim = ClaimKind::Full;
    std::string expected_order;
    std::string computed_order;
    bool pass = false;
    double elapsed_ms = 0.0;
    std::size_t generator_count = 0;
    std::optional<SampleResult> sampling;
    std::optional<std::string> counterexample;  // cycle notation
    std::string detail;
};

/// Parses a nonnegative decimal integer. Throws std::invalid_argument.
BigInt parse_decimal(std::string_view text);

/// Checks every constructed generator, builds the group, compares its
/// order with `expected_order` and optionally samples outside it. Fails
/// on the first generator that is not an automorphism, naming it.
VerificationReport verify_claim(const CyclicCode& code, const std::vector<ConstructionSpec>& specs,
                                std::string_view expected_order, const VerifyOptions& options = {});

/// Order of the exhaustively enumerated automorphism group against
/// `expected_order`.
VerificationReport verify_brute(const CyclicCode& code, std::string_view expected_order,
                                const VerifyOptions& options = {});

/// Order of the group generated by the shift and the code's multiplier
/// automorphisms against `expected_order`.
VerificationReport verify_multiplier(const CyclicCode& code, std::string_view expected_order,
                                     const VerifyOptions& options = {});

}  // namespace cyclaut

#endif  // CYCLAUT_VERIFY_HPP
