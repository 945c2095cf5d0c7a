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

#ifndef CYCLAUT_MANIFEST_HPP
#define CYCLAUT_MANIFEST_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyclaut/construct.hpp"
#include "cyclaut/verify.hpp"

namespace cyclaut {

/// Malformed manifest or construction JSON.
class ManifestError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/*
   One claimed automorphism-group order.

   JSON form:
     {
       "name": "n14-hamming-squared",
       "n": 14,
       "generator": "(x^3+x+1)^2",
       "expected_order": "56448",
       "expected_formula": "2*168^2",          optional, must evaluate to expected_order
       "method": "construct",                  brute | construct | multiplier
       "claim": "full",                        full (default) | subgroup
       "construction": [ ConstructionSpec... ],  required for construct
       "sampling": {"trials": 1000, "seed": 0}   optional
     }

   ConstructionSpec JSON: {"kind": <ConstructionKind name>, ...} with
     BlockRows        "k", "n" (columns)
     LiftedColumn     "k"
     InterleavedLift  "row" (optional, 1 or 2)
     PairSwap         "p" (optional, defaults to n/2)
     ResidueLift      "rows" or prime-power "p","n","m"; "row" (optional)
     RowPermutation   "rows" or prime-power "p","n","m"
     Multiplier       "a" (optional, default every code multiplier)
     Shift            -
   plus, for kinds with inner permutations, "perms": ["(1,2,3)", ...]
   and/or "inner": {"source": "symmetric"|"brute"|"multiplier"|"construct",
   "n": .., "generator": .., "construction": [...]}.
*/
struct ManifestEntry {
    std::string name;
    std::size_t n = 0;
    std::string generator;
    std::string expected_order;
    std::optional<std::string> expected_formula;
    Method method = Method::Construct;
    ClaimKind claim = ClaimKind::Full;
    std::vector<ConstructionSpec> construction;
    std::optional<SamplingOptions> sampling;
};

struct Manifest {
    std::vector<ManifestEntry> entries;
};

/// Accepts {"entries": [...]} or a bare array. Validates every entry:
/// the generator parses and divides x^n - 1, expected_order is a decimal
/// integer equal to expected_formula when given, and each construction
/// fits the length. Throws ManifestError.
Manifest parse_manifest(std::string_view json_text);
Manifest load_manifest(const std::filesystem::path& path);

/// A JSON array of ConstructionSpec objects (or a single object) for a
/// code of length `length`. Throws ManifestError.
std::vector<ConstructionSpec> parse_constructions(const nlohmann::json& value, std::size_t length);
std::vector<ConstructionSpec> parse_constructions_text(std::string_view json_text, std::size_t length);

struct RunOptions {
    std::size_t jobs = 1;
    std::optional<std::string> filter;         // substring of entry name
    std::optional<std::uint64_t> seed;         // overrides sampling seeds
    BruteForceOptions brute;
};

VerificationReport run_entry(const ManifestEntry& entry, const RunOptions& options = {});

/// Runs the selected entries, `jobs` at a time; reports keep manifest
/// order. The first exception raised by any entry is rethrown after all
/// workers finish.
std::vector<VerificationReport> run_manifest(const Manifest& manifest,
                                             const RunOptions& options = {});

/// One JSON object per report, as an array.
nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// Human-readable table with a summary line.
std::string format_report_table(const std::vector<VerificationReport>& reports);

}  // namespace cyclaut

#endif  // CYCLAUT_MANIFEST_HPP
