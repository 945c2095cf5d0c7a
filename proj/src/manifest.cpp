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

#include "cyclaut/manifest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "cyclaut/order_expr.hpp"

namespace cyclaut {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ManifestError(where + ": " + what);
}

void check_keys(const json& object, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : object.items())
        if (!allowed.contains(key)) fail(where, "unknown key '" + key + "'");
}

std::size_t get_size(const json& object, const char* key, const std::string& where) {
    const auto it = object.find(key);
    if (it == object.end()) fail(where, std::string("missing '") + key + "'");
    if (!it->is_number_unsigned()) fail(where, std::string("'") + key + "' must be a nonnegative integer");
    return it->get<std::size_t>();
}

std::size_t get_size_or(const json& object, const char* key, std::size_t fallback,
                        const std::string& where) {
    return object.contains(key) ? get_size(object, key, where) : fallback;
}

std::string get_string(const json& object, const char* key, const std::string& where) {
    const auto it = object.find(key);
    if (it == object.end()) fail(where, std::string("missing '") + key + "'");
    if (!it->is_string()) fail(where, std::string("'") + key + "' must be a string");
    return it->get<std::string>();
}

std::size_t power_checked(std::size_t base, std::size_t exponent, const std::string& where) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > (std::size_t{1} << 32) / base) fail(where, "prime power too large");
        result *= base;
    }
    return result;
}

Gf2Poly parse_generator_at(const std::string& text, const std::string& where) {
    try {
        return parse_generator_expression(text);
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

// Rows of a residue layout, from "rows" or from the prime-power triple.
std::size_t residue_rows(const json& object, std::size_t length, const std::string& where) {
    if (object.contains("rows")) {
        if (object.contains("p") || object.contains("m"))
            fail(where, "give either 'rows' or 'p','n','m', not both");
        return get_size(object, "rows", where);
    }
    const std::size_t p = get_size(object, "p", where);
    const std::size_t n = get_size(object, "n", where);
    const std::size_t m = get_size(object, "m", where);
    if (p < 2) fail(where, "'p' must be at least 2");
    if (m >= n) fail(where, "residue layout needs 0 <= m < n");
    if (power_checked(p, n, where) != length)
        fail(where, "p^n = " + std::to_string(p) + "^" + std::to_string(n) +
                        " does not equal the length " + std::to_string(length));
    return power_checked(p, m, where);
}

ConstructionSpec parse_spec(const json& object, std::size_t length, const std::string& where);

std::shared_ptr<const InnerGroupSource> parse_inner(const json& object, const std::string& where) {
    if (!object.is_object()) fail(where, "'inner' must be an object");
    check_keys(object, {"source", "n", "generator", "construction"}, where);
    auto source = std::make_shared<InnerGroupSource>();
    try {
        source->kind = inner_source_kind_from_string(get_string(object, "source", where));
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
    source->length = get_size(object, "n", where);
    if (source->length == 0) fail(where, "'n' must be positive");
    using Kind = InnerGroupSource::Kind;
    if (source->kind == Kind::Symmetric) {
        if (object.contains("generator") || object.contains("construction"))
            fail(where, "a symmetric source takes only 'n'");
        return source;
    }
    source->generator = get_string(object, "generator", where);
    const Gf2Poly g = parse_generator_at(source->generator, where);
    try {
        (void)CyclicCode(source->length, g);
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
    if (source->kind == Kind::Construct) {
        if (!object.contains("construction")) fail(where, "a construct source needs 'construction'");
        source->construction =
            parse_constructions(object.at("construction"), source->length);
    } else if (object.contains("construction")) {
        fail(where, "'construction' is only valid for a construct source");
    }
    return source;
}

ConstructionSpec parse_spec(const json& object, std::size_t length, const std::string& where) {
    if (!object.is_object()) fail(where, "construction entries must be objects");
    ConstructionSpec spec;
    try {
        spec.kind = construction_kind_from_string(get_string(object, "kind", where));
    } catch (const ManifestError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
    const std::string at = where + " (" + std::string(to_string(spec.kind)) + ")";
    auto with = [&](std::initializer_list<const char*> keys) {
        std::set<std::string> allowed{"kind"};
        for (const char* k : keys) allowed.insert(k);
        return allowed;
    };

    switch (spec.kind) {
        case ConstructionKind::BlockRows:
            check_keys(object, with({"k", "n", "cols"}), at);
            spec.k = get_size(object, "k", at);
            spec.columns = object.contains("cols") ? get_size(object, "cols", at)
                                                   : get_size(object, "n", at);
            if (spec.k < 2) fail(at, "'k' must be at least 2");
            if (spec.k * spec.columns != length)
                fail(at, std::to_string(spec.k) + " x " + std::to_string(spec.columns) +
                             " does not match length " + std::to_string(length));
            break;
        case ConstructionKind::LiftedColumn:
            check_keys(object, with({"k", "perms", "inner"}), at);
            spec.k = get_size(object, "k", at);
            break;
        case ConstructionKind::InterleavedLift:
            check_keys(object, with({"row", "perms", "inner"}), at);
            spec.row = get_size_or(object, "row", 0, at);
            if (spec.row > 2) fail(at, "'row' must be 1 or 2");
            break;
        case ConstructionKind::PairSwap:
            check_keys(object, with({"p"}), at);
            spec.half = get_size_or(object, "p", length / 2, at);
            if (2 * spec.half != length)
                fail(at, "2p = " + std::to_string(2 * spec.half) + " does not match length " +
                             std::to_string(length));
            break;
        case ConstructionKind::ResidueLift:
            check_keys(object, with({"rows", "p", "n", "m", "row", "perms", "inner"}), at);
            spec.rows = residue_rows(object, length, at);
            spec.row = get_size_or(object, "row", 0, at);
            if (spec.row > spec.rows) fail(at, "'row' exceeds the row count");
            break;
        case ConstructionKind::RowPermutation:
            check_keys(object, with({"rows", "p", "n", "m", "perms", "inner"}), at);
            spec.rows = residue_rows(object, length, at);
            break;
        case ConstructionKind::Multiplier:
            check_keys(object, with({"a"}), at);
            spec.unit = get_size_or(object, "a", 0, at);
            break;
        case ConstructionKind::Shift:
            check_keys(object, with({}), at);
            break;
    }

    if (const auto it = object.find("perms"); it != object.end()) {
        if (!it->is_array()) fail(at, "'perms' must be an array of cycle strings");
        for (const auto& p : *it) {
            if (!p.is_string()) fail(at, "'perms' must be an array of cycle strings");
            spec.cycles.push_back(p.get<std::string>());
        }
    }
    if (const auto it = object.find("inner"); it != object.end())
        spec.inner = parse_inner(*it, at + " inner");

    std::size_t degree = 0;
    try {
        degree = inner_degree(spec, length);
        for (const auto& text : spec.cycles) (void)Permutation::parse_cycles(text, degree);
    } catch (const std::invalid_argument& e) {
        fail(at, e.what());
    }
    if (degree != 0 && spec.cycles.empty() && !spec.inner)
        fail(at, "needs 'perms' or 'inner'");
    if (spec.inner && spec.inner->length != degree)
        fail(at, "inner source has n = " + std::to_string(spec.inner->length) + ", expected " +
                     std::to_string(degree));
    return spec;
}

ManifestEntry parse_entry(const json& object, std::size_t index) {
    std::string where = "entry " + std::to_string(index + 1);
    if (!object.is_object()) fail(where, "must be an object");
    if (object.contains("name") && object.at("name").is_string())
        where += " '" + object.at("name").get<std::string>() + "'";
    check_keys(object,
               {"name", "n", "generator", "expected_order", "expected_formula", "method", "claim",
                "construction", "sampling", "note"},
               where);

    ManifestEntry entry;
    entry.name = get_string(object, "name", where);
    entry.n = get_size(object, "n", where);
    if (entry.n == 0) fail(where, "'n' must be positive");
    entry.generator = get_string(object, "generator", where);
    try {
        (void)CyclicCode(entry.n, parse_generator_at(entry.generator, where));
    } catch (const ManifestError&) {
        throw;
    } catch (const std::exception& e) {
        fail(where, e.what());
    }

    const json& expected = object.contains("expected_order") ? object.at("expected_order") : json();
    if (expected.is_string()) {
        entry.expected_order = expected.get<std::string>();
    } else if (expected.is_number_unsigned()) {
        entry.expected_order = std::to_string(expected.get<std::uint64_t>());
    } else {
        fail(where, "'expected_order' must be a decimal string");
    }
    BigInt expected_value;
    try {
        expected_value = parse_decimal(entry.expected_order);
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
    if (object.contains("expected_formula")) {
        entry.expected_formula = get_string(object, "expected_formula", where);
        BigInt formula;
        try {
            formula = evaluate_order_expression(*entry.expected_formula);
        } catch (const std::invalid_argument& e) {
            fail(where, e.what());
        }
        if (formula != expected_value)
            fail(where, "expected_formula " + *entry.expected_formula + " = " + to_decimal(formula) +
                            " differs from expected_order " + entry.expected_order);
    }

    try {
        entry.method = method_from_string(get_string(object, "method", where));
        if (object.contains("claim")) entry.claim = claim_kind_from_string(get_string(object, "claim", where));
    } catch (const ManifestError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }

    if (entry.method == Method::Construct) {
        if (!object.contains("construction")) fail(where, "method construct needs 'construction'");
        entry.construction = parse_constructions(object.at("construction"), entry.n);
    } else if (object.contains("construction")) {
        fail(where, "'construction' is only valid with method construct");
    }

    if (object.contains("sampling")) {
        const json& s = object.at("sampling");
        if (!s.is_object()) fail(where, "'sampling' must be an object");
        check_keys(s, {"trials", "seed"}, where + " sampling");
        SamplingOptions sampling;
        sampling.trials = get_size_or(s, "trials", kDefaultSampleTrials, where);
        if (s.contains("seed")) {
            if (!s.at("seed").is_number_unsigned()) fail(where, "'seed' must be a nonnegative integer");
            sampling.seed = s.at("seed").get<std::uint64_t>();
        }
        entry.sampling = sampling;
    }
    return entry;
}

}  // namespace

std::vector<ConstructionSpec> parse_constructions(const json& value, std::size_t length) {
    std::vector<ConstructionSpec> specs;
    if (value.is_object()) {
        specs.push_back(parse_spec(value, length, "construction 1"));
        return specs;
    }
    if (!value.is_array()) throw ManifestError("construction must be an array of objects");
    for (std::size_t i = 0; i < value.size(); ++i)
        specs.push_back(parse_spec(value[i], length, "construction " + std::to_string(i + 1)));
    return specs;
}

std::vector<ConstructionSpec> parse_constructions_text(std::string_view json_text, std::size_t length) {
    json value;
    try {
        value = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ManifestError(std::string("invalid construction JSON: ") + e.what());
    }
    return parse_constructions(value, length);
}

Manifest parse_manifest(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ManifestError(std::string("invalid manifest JSON: ") + e.what());
    }
    const json* entries = &root;
    if (root.is_object()) {
        if (!root.contains("entries")) throw ManifestError("manifest object needs 'entries'");
        entries = &root.at("entries");
    }
    if (!entries->is_array()) throw ManifestError("manifest entries must be an array");

    Manifest manifest;
    std::set<std::string> names;
    for (std::size_t i = 0; i < entries->size(); ++i) {
        manifest.entries.push_back(parse_entry((*entries)[i], i));
        if (!names.insert(manifest.entries.back().name).second)
            throw ManifestError("duplicate entry name '" + manifest.entries.back().name + "'");
    }
    return manifest;
}

Manifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ManifestError("cannot read manifest " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_manifest(text.str());
}

VerificationReport run_entry(const ManifestEntry& entry, const RunOptions& options) {
    const CyclicCode code(entry.n, parse_generator_expression(entry.generator));
    VerifyOptions verify;
    verify.claim = entry.claim;
    verify.brute = options.brute;
    verify.sampling = entry.sampling;
    if (verify.sampling && options.seed) verify.sampling->seed = *options.seed;

    VerificationReport report;
    switch (entry.method) {
        case Method::Brute:
            report = verify_brute(code, entry.expected_order, verify);
            break;
        case Method::Multiplier:
            report = verify_multiplier(code, entry.expected_order, verify);
            break;
        case Method::Construct:
            report = verify_claim(code, entry.construction, entry.expected_order, verify);
            break;
    }
    report.name = entry.name;
    report.generator = entry.generator;
    return report;
}

std::vector<VerificationReport> run_manifest(const Manifest& manifest, const RunOptions& options) {
    std::vector<const ManifestEntry*> selected;
    for (const auto& entry : manifest.entries)
        if (!options.filter || entry.name.find(*options.filter) != std::string::npos)
            selected.push_back(&entry);

    std::vector<VerificationReport> reports(selected.size());
    std::vector<std::exception_ptr> errors(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            try {
                reports[i] = run_entry(*selected[i], options);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(1, selected.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return reports;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json out;
    out["name"] = report.name;
    out["n"] = report.n;
    out["generator"] = report.generator;
    out["expected_order"] = report.expected_order;
    out["computed_order"] = report.computed_order;
    out["pass"] = report.pass;
    out["elapsed_ms"] = std::round(report.elapsed_ms * 1000.0) / 1000.0;
    if (report.sampling)
        out["seed"] = report.sampling->seed;
    else
        out["seed"] = nullptr;
    out["method"] = std::string(to_string(report.method));
    out["claim"] = std::string(to_string(report.claim));
    out["generator_count"] = report.generator_count;
    if (report.sampling)
        out["sampling"] = {{"tested", report.sampling->tested},
                           {"drawn", report.sampling->drawn},
                           {"escapes", report.sampling->escapes}};
    out["counterexample"] = report.counterexample ? nlohmann::ordered_json(*report.counterexample)
                                                  : nlohmann::ordered_json(nullptr);
    out["detail"] = report.detail;
    return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& r : reports) array.push_back(report_to_json(r));
    return array.dump(2) + "\n";
}

std::string format_report_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    std::size_t name_width = 4;
    for (const auto& r : reports) name_width = std::max(name_width, r.name.size());
    out << std::left << std::setw(static_cast<int>(name_width)) << "name" << "  " << std::setw(5)
        << "n" << "  " << std::setw(10) << "method" << "  " << std::setw(8) << "claim" << "  "
        << std::setw(6) << "result" << "  " << std::right << std::setw(10) << "ms" << "  "
        << "detail\n";
    std::size_t passed = 0;
    for (const auto& r : reports) {
        passed += r.pass ? 1 : 0;
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(1) << r.elapsed_ms;
        out << std::left << std::setw(static_cast<int>(name_width)) << r.name << "  "
            << std::setw(5) << r.n << "  " << std::setw(10) << to_string(r.method) << "  "
            << std::setw(8) << to_string(r.claim) << "  " << std::setw(6)
            << (r.pass ? "PASS" : "FAIL") << "  " << std::right << std::setw(10) << ms.str()
            << "  " << r.detail;
        if (r.counterexample) out << "; counterexample " << *r.counterexample;
        out << "\n";
    }
    out << passed << "/" << reports.size() << " entries pass\n";
    return out.str();
}

}  // namespace cyclaut
