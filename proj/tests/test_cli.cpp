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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI through the shell with `args` appended; stderr is merged into out.
Run cli(const std::string& args, const std::string& env = "") {
    const std::string command = env + " '" + CYCLAUT_CLI_PATH + "' " + args + " 2>&1";
    Run run;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) run.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("cyclaut-test-" + name);
    std::ofstream(path) << contents;
    return path;
}

json without_timing(json value) {
    for (auto& entry : value) entry.erase("elapsed_ms");
    return value;
}

const std::string kData = CYCLAUT_DATA_DIR;

}  // namespace

TEST_CASE("factor") {
    const Run seven = cli("factor 7");
    CHECK(seven.exit_code == 0);
    CHECK(seven.out == "(x+1)^1\n(x^3+x+1)^1\n(x^3+x^2+1)^1\n");
    const Run fourteen = cli("factor 14");
    CHECK(fourteen.out == "(x+1)^2\n(x^3+x+1)^2\n(x^3+x^2+1)^2\n");
    CHECK(cli("factor 1").out == "(x+1)^1\n");
    CHECK(cli("factor 0").exit_code == 2);
    CHECK(cli("factor seven").exit_code == 2);
    const json parsed = json::parse(cli("--json factor 15").out);
    CHECK(parsed["factors"].size() == 5);
}

TEST_CASE("code-info") {
    const Run hamming = cli("code-info 7 x^3+x+1");
    CHECK(hamming.exit_code == 0);
    CHECK(hamming.out.find("[7,4]") != std::string::npos);
    CHECK(cli("code-info 14 '(x^3+x+1)^2'").out.find("[14,8]") != std::string::npos);
    const Run bad = cli("code-info 7 x^2+x+1");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("remainder") != std::string::npos);
    CHECK(cli("code-info 7 'x^3+'").exit_code == 2);
}

TEST_CASE("aut-brute") {
    const Run hamming = cli("aut-brute 7 x^3+x+1");
    CHECK(hamming.exit_code == 0);
    CHECK(hamming.out.find("168") != std::string::npos);
    CHECK(cli("aut-brute 7 '(x^3+x+1)(x^3+x^2+1)'").out.find("5040") != std::string::npos);
    const Run big = cli("aut-brute 14 '(x^3+x+1)^2'");
    CHECK(big.exit_code == 2);
    CHECK(big.out.find("max") != std::string::npos);
    CHECK(cli("--max-n 6 aut-brute 7 x^3+x+1").exit_code == 2);
    const Run gens = cli("--json aut-brute 7 x^3+x+1 --emit-gens");
    CHECK(gens.exit_code == 0);
    const json parsed = json::parse(gens.out);
    CHECK(parsed["order"] == "168");
}

TEST_CASE("aut-construct") {
    const std::string spec =
        R"J('[{"kind": "InterleavedLift", "inner": {"source": "brute", "n": 7, "generator": "x^3+x+1"}}, {"kind": "PairSwap"}]')J";
    const Run ok = cli("aut-construct 14 '(x^3+x+1)^2' --construction " + spec + " --expected '2*168^2' --sample 200");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("56448") != std::string::npos);
    const Run wrong = cli("aut-construct 14 '(x^3+x+1)^2' --construction " + spec + " --expected 56449");
    CHECK(wrong.exit_code == 1);
    const auto file = temp_file("construct.json", R"J([{"kind": "BlockRows", "k": 2, "n": 7},
        {"kind": "LiftedColumn", "k": 2, "inner": {"source": "symmetric", "n": 7}}])J");
    const Run from_file =
        cli("aut-construct 14 '(x^3+x+1)(x^3+x^2+1)' --construction @" + file.string() + " --expected 645120");
    CHECK(from_file.exit_code == 0);
    CHECK(cli("aut-construct 14 '(x^3+x+1)^2' --construction '[{\"kind\": \"Nope\"}]'").exit_code == 2);
}

TEST_CASE("multipliers") {
    const Run two = cli("multipliers 31 '(x^5+x^2+1)(x^5+x^3+1)'");
    CHECK(two.exit_code == 0);
    CHECK(two.out.find("count: 10") != std::string::npos);
    CHECK(two.out.find("order: 310") != std::string::npos);
    const Run three = cli("--json multipliers 31 '(x^5+x^2+1)(x^5+x^3+1)(x^5+x^3+x^2+x+1)'");
    const json parsed = json::parse(three.out);
    CHECK(parsed["unit_count"] == 5);
    CHECK(parsed["order"] == "155");
    const json seven = json::parse(cli("--json multipliers 7 x^3+x+1").out);
    CHECK(seven["units"] == json::array({1, 2, 4}));
    CHECK(seven["order"] == "21");
    CHECK(cli("multipliers 7 x^2+1").exit_code == 2);
}

TEST_CASE("verify-table") {
    const Run table = cli("verify-table --filter n14");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("2/2 entries pass") != std::string::npos);

    const Run first = cli("--json --jobs 2 verify-table --filter n14");
    const Run second = cli("--json verify-table --filter n14");
    REQUIRE(first.exit_code == 0);
    const json a = json::parse(first.out);
    const json b = json::parse(second.out);
    CHECK(a.is_array());
    CHECK(a.size() == 2);
    CHECK(without_timing(a) == without_timing(b));
    CHECK(a[0]["seed"] == 0);
    CHECK(json::parse(cli("--json --seed 7 verify-table --filter n14").out)[0]["seed"] == 7);

    const auto wrong = temp_file("wrong.json", R"({"entries": [{"name": "n7-hamming", "n": 7,
        "generator": "x^3+x+1", "expected_order": "169", "method": "brute"}]})");
    const Run failed = cli("verify-table " + wrong.string());
    CHECK(failed.exit_code == 1);
    CHECK(failed.out.find("168 vs 169") != std::string::npos);

    const auto empty = temp_file("empty.json", R"({"entries": []})");
    const Run none = cli("--json verify-table " + empty.string());
    CHECK(none.exit_code == 0);
    CHECK(json::parse(none.out) == json::array());

    const auto broken = temp_file("broken.json", "{");
    CHECK(cli("verify-table " + broken.string()).exit_code == 2);
    CHECK(cli("verify-table /nonexistent/manifest.json").exit_code == 2);

    // The environment variable replaces the compiled-in default manifest.
    const Run via_env = cli("verify-table", "CYCLAUT_MANIFEST='" + wrong.string() + "'");
    CHECK(via_env.exit_code == 1);
    const Run via_env_empty = cli("--json verify-table", "CYCLAUT_MANIFEST='" + empty.string() + "'");
    CHECK(via_env_empty.exit_code == 0);
    CHECK(json::parse(via_env_empty.out).empty());
}

TEST_CASE("usage errors") {
    CHECK(cli("").exit_code == 2);
    CHECK(cli("bogus").exit_code == 2);
    CHECK(cli("--jobs 0 factor 7").exit_code == 2);
    CHECK(cli("--help").exit_code == 0);
}
