#include <filesystem>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "subprocess.hpp"

namespace {

const std::string kCli = CPCURVE_CLI_PATH;

testutil::CommandResult cli(const std::string& args, bool merge_stderr = false) {
    return testutil::run_command(kCli + " " + args, merge_stderr);
}

}  // namespace

TEST_CASE("usage errors exit with code 1") {
    CHECK(cli("").exit_code == 1);
    CHECK(cli("frobnicate 5").exit_code == 1);
    CHECK(cli("check").exit_code == 1);               // missing argument
    CHECK(cli("count 7 --method slow").exit_code == 1);
    CHECK(cli("table --format yaml").exit_code == 1);
    CHECK(cli("--help").exit_code == 0);
}

TEST_CASE("check: verdicts, exit codes and error paths") {
    const auto r5 = cli("check 5");
    CHECK(r5.exit_code == 0);
    CHECK(r5.output.find("superspecial: yes") != std::string::npos);
    CHECK(r5.output.find("agreement: yes") != std::string::npos);

    const auto r7 = cli("check 7");
    CHECK(r7.exit_code == 0);
    CHECK(r7.output.find("superspecial: no") != std::string::npos);

    // p = 3 is singular, p = 8 is composite: both usage errors.
    const auto r3 = cli("check 3", /*merge_stderr=*/true);
    CHECK(r3.exit_code == 1);
    CHECK(r3.output.find("singular") != std::string::npos);
    CHECK(cli("check 8").exit_code == 1);
    CHECK(cli("check 2").exit_code == 1);
}

TEST_CASE("check --json emits a parseable report") {
    const auto result = cli("check 7 --json");
    CHECK(result.exit_code == 0);
    const nlohmann::json report = nlohmann::json::parse(result.output);
    CHECK(report["p"] == 7);
    CHECK(report["superspecial"] == false);
    CHECK(report["predicted"] == false);
    CHECK(report["agrees"] == true);
    REQUIRE(report["coefficients"].size() == 16);
    // Proposition order: the (x y z^2 w)^(p-1) entry sits at index 10.
    CHECK(report["coefficients"][10]["monomial"] == "x^6*y^6*z^12*w^6");
    CHECK(report["coefficients"][10]["coefficient"] == 6);
    CHECK(report["coefficients"][0]["exponents"] == nlohmann::json({12, 6, 6, 6}));
}

TEST_CASE("coeffs prints the 16 pairs in order") {
    const auto result = cli("coeffs 7");
    CHECK(result.exit_code == 0);
    std::size_t lines = 0;
    for (const char c : result.output) lines += (c == '\n');
    CHECK(lines == 16);
    CHECK(result.output.find("x^12*y^6*z^6*w^6  5") == 0);  // first row
    CHECK(result.output.find("x^6*y^6*z^12*w^6  6") != std::string::npos);
}

TEST_CASE("count: fast and brute methods, singular label for p = 3") {
    const auto fast = cli("count 13");
    CHECK(fast.exit_code == 0);
    CHECK(fast.output.find("#C_p(F_q) = 192") != std::string::npos);
    CHECK(fast.output.find("classification: neither") != std::string::npos);

    const auto brute = cli("count 13 --method brute");
    CHECK(brute.output.find("#C_p(F_q) = 192") != std::string::npos);
    CHECK(brute.output.find("[method: brute]") != std::string::npos);

    const auto singular = cli("count 3");
    CHECK(singular.exit_code == 0);
    CHECK(singular.output.find("#C_p(F_q) = 10") != std::string::npos);
    CHECK(singular.output.find("classification: singular") != std::string::npos);

    CHECK(cli("count 17 --method brute").exit_code == 1);  // above the brute gate
}

TEST_CASE("verify: certificate report and the p = 3 refusal") {
    const auto ok = cli("verify 11");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("certificate: PASS") != std::string::npos);
    CHECK(ok.output.find("f5 term sign in the second identity: +") != std::string::npos);

    const auto singular = cli("verify 3", /*merge_stderr=*/true);
    CHECK(singular.exit_code == 1);
    CHECK(singular.output.find("all six Jacobian minors are zero") != std::string::npos);
}

TEST_CASE("table: exact CSV bytes for a single prime") {
    const auto result = cli("table --min 5 --max 5");
    CHECK(result.exit_code == 0);
    CHECK(result.output ==
          "p,p_mod_3,superspecial,count_fp2,classification,hw_upper,hw_lower\n"
          "5,2,true,66,maximal,66,-14\n");
}

TEST_CASE("table: md format and the paper-table note column") {
    const auto md = cli("table --min 31 --max 41 --format md --paper-table");
    CHECK(md.exit_code == 0);
    CHECK(md.output.find("| 37 | 1 | Not S.sp. | 1344 | published row prints S.sp.") !=
          std::string::npos);
    CHECK(md.output.find("| 41 | 2 | S.sp. | 2010 (Max.) |  |") != std::string::npos);

    const auto json = cli("table --min 3 --max 7 --format json");
    const nlohmann::json rows = nlohmann::json::parse(json.output);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["p"] == 3);
    CHECK(rows[0]["classification"] == "singular");
    CHECK(rows[1]["count_fp2"] == 66);
}

TEST_CASE("table: invalid range is a usage error") {
    CHECK(cli("table --min 2 --max 10").exit_code == 1);
    CHECK(cli("table --min 50 --max 10").exit_code == 1);
}

TEST_CASE("table runs are byte-identical across worker counts and reruns") {
    const auto a = cli("table --min 3 --max 80 --jobs 1");
    const auto b = cli("table --min 3 --max 80 --jobs 4");
    const auto c = cli("table --min 3 --max 80 --jobs 4");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(b.output == c.output);
}

TEST_CASE("table --cache: second run is served from disk, byte-identical") {
    const std::string cache =
        (std::filesystem::temp_directory_path() / "cpcurve_cli_cache.jsonl").string();
    std::filesystem::remove(cache);
    const auto first = cli("table --min 3 --max 60 --cache " + cache);
    CHECK(first.exit_code == 0);
    CHECK(std::filesystem::exists(cache));
    const auto second = cli("table --min 3 --max 60 --cache " + cache);
    CHECK(second.output == first.output);
    std::filesystem::remove(cache);
}

TEST_CASE("density: frozen 12/23 at limit 100") {
    const auto result = cli("density --limit 100");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("ratio: 12/23 = 0.521739") != std::string::npos);
    CHECK(cli("density --limit 4").exit_code == 1);
    CHECK(cli("density").exit_code == 1);
}
