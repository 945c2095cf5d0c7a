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

// Command-line front end: factorization, code inspection, automorphism
// groups by brute force, construction or multipliers, and the manifest
// regression harness.
//
// Exit codes: 0 success, 1 a checked claim failed, 2 input or usage error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <charconv>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclaut/code.hpp"
#include "cyclaut/construct.hpp"
#include "cyclaut/gf2poly.hpp"
#include "cyclaut/group.hpp"
#include "cyclaut/kernels.hpp"
#include "cyclaut/manifest.hpp"
#include "cyclaut/order_expr.hpp"
#include "cyclaut/verify.hpp"

namespace {

using namespace cyclaut;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;
constexpr const char* kManifestEnv = "CYCLAUT_MANIFEST";
constexpr std::size_t kMaxPrintedRows = 64;

struct GlobalOptions {
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::size_t jobs = 1;
    std::size_t max_n = kDefaultBruteForceMaxN;
};

struct CodeArgs {
    std::size_t n = 0;
    std::string generator;
};

CyclicCode make_code(const CodeArgs& args) {
    return CyclicCode(args.n, parse_generator_expression(args.generator));
}

void print_json(const ordered_json& value) { std::cout << value.dump(2) << "\n"; }

std::string read_argument_or_file(const std::string& text) {
    if (text.empty() || text.front() != '@') return text;
    std::ifstream in(text.substr(1), std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + text.substr(1));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int cmd_factor(std::size_t n, const GlobalOptions& global) {
    const auto factors = factor_xn_minus_1(n);
    if (global.json) {
        ordered_json out;
        out["n"] = n;
        out["factors"] = ordered_json::array();
        for (const auto& f : factors)
            out["factors"].push_back({{"factor", f.factor.to_string()},
                                      {"degree", f.factor.degree()},
                                      {"multiplicity", f.multiplicity}});
        print_json(out);
        return kExitOk;
    }
    for (const auto& f : factors)
        std::cout << "(" << f.factor.to_string() << ")^" << f.multiplicity << "\n";
    return kExitOk;
}

int cmd_code_info(const CodeArgs& args, const GlobalOptions& global) {
    const CyclicCode code = make_code(args);
    const bool small = code.dimension() <= kDefaultMaxEnumerationDimension;
    if (global.json) {
        ordered_json out;
        out["n"] = code.length();
        out["k"] = code.dimension();
        out["parameters"] = code.parameters();
        out["generator"] = code.generator().to_string();
        out["check"] = code.check().to_string();
        if (code.dimension() <= kMaxPrintedRows) {
            out["rows"] = ordered_json::array();
            for (const auto& row : code.generator_rows()) out["rows"].push_back(row.to_string());
        }
        if (small) {
            ordered_json dist = ordered_json::object();
            for (const auto& [w, count] : weight_distribution(code))
                dist[std::to_string(w)] = count;
            out["weight_distribution"] = dist;
        }
        print_json(out);
        return kExitOk;
    }
    std::cout << code.parameters() << "\n";
    std::cout << "generator: " << code.generator().to_string() << "\n";
    std::cout << "check:     " << code.check().to_string() << "\n";
    if (code.dimension() <= kMaxPrintedRows) {
        std::cout << "generator rows:\n";
        for (const auto& row : code.generator_rows()) std::cout << "  " << row.to_string() << "\n";
    }
    if (small) {
        std::cout << "weight distribution:\n";
        for (const auto& [w, count] : weight_distribution(code))
            std::cout << "  " << w << ": " << count << "\n";
    }
    return kExitOk;
}

int cmd_aut_brute(const CodeArgs& args, bool emit_gens, const GlobalOptions& global) {
    const CyclicCode code = make_code(args);
    const BruteForceResult result =
        brute_force_aut_group(code, {.max_n = global.max_n, .jobs = global.jobs});
    if (global.json) {
        ordered_json out;
        out["n"] = code.length();
        out["generator"] = args.generator;
        out["order"] = std::to_string(result.elements.size());
        if (emit_gens) {
            out["generators"] = ordered_json::array();
            for (const auto& g : result.generators) out["generators"].push_back(g.format_cycles());
        }
        print_json(out);
        return kExitOk;
    }
    std::cout << result.elements.size() << "\n";
    if (emit_gens)
        for (const auto& g : result.generators) std::cout << g.format_cycles() << "\n";
    return kExitOk;
}

int print_report(const VerificationReport& report, bool emit_gens,
                 const std::vector<LabeledGenerator>& gens, const GlobalOptions& global) {
    if (global.json) {
        ordered_json out = report_to_json(report);
        if (emit_gens) {
            out["generators"] = ordered_json::array();
            for (const auto& g : gens) out["generators"].push_back(g.permutation.format_cycles());
        }
        print_json(out);
    } else {
        std::cout << "order: " << report.computed_order << "\n";
        if (!report.expected_order.empty())
            std::cout << (report.pass ? "PASS" : "FAIL") << ": " << report.detail << "\n";
        if (report.counterexample) std::cout << "counterexample: " << *report.counterexample << "\n";
        if (emit_gens)
            for (const auto& g : gens) std::cout << g.permutation.format_cycles() << "\n";
    }
    return report.pass ? kExitOk : kExitClaimFailed;
}

struct ConstructArgs {
    std::string construction;
    std::string expected;
    std::string claim = "full";
    std::size_t sample = 0;
    bool emit_gens = false;
};

int cmd_aut_construct(const CodeArgs& args, const ConstructArgs& extra, const GlobalOptions& global) {
    const CyclicCode code = make_code(args);
    const auto specs = parse_constructions_text(read_argument_or_file(extra.construction), code.length());
    VerifyOptions options;
    options.claim = claim_kind_from_string(extra.claim);
    options.brute = {.max_n = global.max_n, .jobs = global.jobs};
    if (extra.sample != 0)
        options.sampling = SamplingOptions{extra.sample, global.seed.value_or(kDefaultSampleSeed)};

    // Without --expected the order is only reported; the claim then
    // compares against the order itself so generator checks still gate.
    const auto gens = build_generators(code, specs, options.brute);
    std::string expected = extra.expected;
    if (!expected.empty()) expected = to_decimal(evaluate_order_expression(expected));
    VerificationReport report =
        verify_claim(code, specs, expected.empty() ? "0" : expected, options);
    report.name = "aut-construct";
    report.generator = args.generator;
    if (expected.empty()) {
        report.expected_order.clear();
        report.pass = !report.counterexample.has_value();
    }
    return print_report(report, extra.emit_gens, gens, global);
}

int cmd_multipliers(const CodeArgs& args, const GlobalOptions& global) {
    const CyclicCode code = make_code(args);
    const auto units = multiplier_subgroup(code);
    const auto gens = shift_multiplier_generators(code);
    const BigInt order = PermGroup::build(code.length(), gens).order();
    if (global.json) {
        ordered_json out;
        out["n"] = code.length();
        out["generator"] = args.generator;
        out["units"] = units;
        out["unit_count"] = units.size();
        out["order"] = to_decimal(order);
        print_json(out);
        return kExitOk;
    }
    std::cout << "units:";
    for (std::size_t a : units) std::cout << " " << a;
    std::cout << "\ncount: " << units.size() << "\norder: " << to_decimal(order) << "\n";
    return kExitOk;
}

int cmd_verify_table(const std::string& path_arg, const std::string& filter,
                     const GlobalOptions& global) {
    std::string path = path_arg;
    if (path.empty()) {
        const char* env = std::getenv(kManifestEnv);
        path = env != nullptr && *env != '\0' ? env : CYCLAUT_DEFAULT_MANIFEST;
    }
    const Manifest manifest = load_manifest(path);
    RunOptions options;
    options.jobs = global.jobs;
    if (!filter.empty()) options.filter = filter;
    options.seed = global.seed;
    options.brute = {.max_n = global.max_n, .jobs = 1};
    const auto reports = run_manifest(manifest, options);
    if (global.json)
        std::cout << reports_to_json(reports);
    else
        std::cout << format_report_table(reports);
    for (const auto& r : reports)
        if (!r.pass) return kExitClaimFailed;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automorphism groups of binary cyclic codes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "cyclaut 1.0.0");

    GlobalOptions global;
    std::uint64_t seed = 0;
    app.add_flag("--json", global.json, "Machine-readable JSON output");
    auto* seed_opt = app.add_option("--seed", seed, "Seed for negative sampling (default 0)");
    app.add_option("--jobs", global.jobs, "Parallel workers (manifest entries, brute force)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
    app.add_option("--max-n", global.max_n, "Largest length allowed for brute force")
        ->capture_default_str();
    const CLI::Validator length_range(
        [](std::string& text) -> std::string {
            std::size_t value = 0;
            const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || end != text.data() + text.size() || value == 0)
                return "length must be a positive integer, got '" + text + "'";
            return {};
        },
        "POSITIVE");
    app.footer(std::string("Environment: ") + kManifestEnv +
               " sets the default manifest for verify-table.\n"
               "Exit codes: 0 ok, 1 claim failed, 2 usage or input error.");

    std::size_t factor_n = 0;
    auto* factor = app.add_subcommand("factor", "Factor x^n - 1 over GF(2)");
    factor->add_option("n", factor_n, "Length")->required()->check(length_range);

    CodeArgs code_args;
    auto add_code_args = [&](CLI::App* sub) {
        sub->add_option("n", code_args.n, "Code length")->required()->check(length_range);
        sub->add_option("g", code_args.generator, "Generator polynomial, e.g. \"(x^3+x+1)^2\"")
            ->required();
    };

    auto* info = app.add_subcommand("code-info", "Parameters, rows and weight distribution");
    add_code_args(info);

    bool emit_gens = false;
    auto* brute = app.add_subcommand("aut-brute", "Automorphism group order by exhaustive search");
    add_code_args(brute);
    brute->add_flag("--emit-gens", emit_gens, "Also print a generating set");

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("aut-construct", "Order of a constructed automorphism group");
    add_code_args(construct);
    construct->add_option("--construction", construct_args.construction,
                          "Construction JSON, or @file")
        ->required();
    construct->add_option("--expected", construct_args.expected,
                          "Expected order, decimal or formula such as 2*168^2");
    construct->add_option("--claim", construct_args.claim, "full or subgroup")
        ->check(CLI::IsMember({"full", "subgroup"}));
    construct->add_option("--sample", construct_args.sample,
                          "Random non-members to test (0 = no sampling)");
    construct->add_flag("--emit-gens", construct_args.emit_gens, "Also print the generators");

    auto* mult = app.add_subcommand("multipliers", "Multiplier automorphisms and shift order");
    add_code_args(mult);

    std::string manifest_path;
    std::string filter;
    auto* table = app.add_subcommand("verify-table", "Verify every entry of a manifest");
    table->add_option("manifest", manifest_path,
                      std::string("Manifest JSON (default: $") + kManifestEnv + " or built-in)");
    table->add_option("--filter", filter, "Only entries whose name contains this text");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (seed_opt->count() > 0) global.seed = seed;

    try {
        if (*factor) return cmd_factor(factor_n, global);
        if (*info) return cmd_code_info(code_args, global);
        if (*brute) return cmd_aut_brute(code_args, emit_gens, global);
        if (*construct) return cmd_aut_construct(code_args, construct_args, global);
        if (*mult) return cmd_multipliers(code_args, global);
        if (*table) return cmd_verify_table(manifest_path, filter, global);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
