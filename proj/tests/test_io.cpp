#include <doctest.h>

#include <geocut/analysis.hpp>
#include <geocut/enumerate.hpp>
#include <geocut/io.hpp>
#include <geocut/rootfind.hpp>
#include <geocut/verify.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace geocut;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("numeric formatting is fixed width and locale free") {
    CHECK(fmt_threshold(1.2433469) == "1.243347");
    CHECK(fmt_threshold(2.0) == "2.000000");
    CHECK(fmt_threshold(1.0000005) == "1.000001"); // nearest double sits just above the midpoint
    CHECK(fmt_weight(35.8823) == "35.88");
    CHECK(fmt_weight(9999.994) == "9999.99");
    CHECK(fmt_weight(10000.0) == "1.000e+04");
    CHECK(fmt_weight(113779.5188) == "1.138e+05");
    CHECK(fmt_weight(-12345.6) == "-1.235e+04");
    CHECK(fmt_general(1.05) == "1.05");
    CHECK(fmt_general(0.001) == "0.001");
}

TEST_CASE("cut members render semicolon separated") {
    CHECK(members_string(CutSpec(6, {1, 2, 6})) == "1;2;6");
    CHECK(members_string(CutSpec(4, {1})) == "1");
    CHECK(members_string(CutSpec(4, {1, 2, 3, 4})) == "1;2;3;4");
}

TEST_CASE("threshold pair layout prints k and six-decimal roots") {
    const ThresholdTable t = threshold_table(6);
    CHECK(threshold_pairs_csv(t) == "k,r\n1,1.243347\n2,1.058812\n");
}

TEST_CASE("threshold matrix layout pads missing columns with dashes") {
    const std::vector<ThresholdTable> tables = {threshold_table(6), threshold_table(8)};
    const std::string csv = thresholds_matrix_csv(tables, 4);
    CHECK(csv ==
          "n,k=1,k=2,k=3,k=4\n"
          "6,1.243347,1.058812,--,--\n"
          "8,1.214506,1.084615,1.024141,--\n");
}

TEST_CASE("threshold json carries rounded roots and the solver settings") {
    const std::vector<ThresholdTable> tables = {threshold_table(6)};
    const auto j = nlohmann::json::parse(thresholds_json(tables));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["n"] == 6);
    CHECK(j[0]["tolerance"].get<double>() == doctest::Approx(1e-12));
    REQUIRE(j[0]["entries"].size() == 2);
    CHECK(j[0]["entries"][0]["k"] == 1);
    CHECK(j[0]["entries"][0]["r"].get<double>() == doctest::Approx(1.243347).epsilon(1e-9));
    CHECK(j[0]["entries"][1]["k"] == 2);
}

TEST_CASE("polynomial json spells the exponent blocks in order") {
    const SignedExponentPoly p = threshold_polynomial(7, 2);
    CHECK(poly_json(p) == R"({"n":7,"k":2,"pos":[19,14],"neg":[9,8,7,6]})");
}

TEST_CASE("polynomial csv lists signed exponents") {
    const SignedExponentPoly p = threshold_polynomial(7, 2);
    CHECK(poly_csv(p) ==
          "sign,exponent\n"
          "+,19\n+,14\n"
          "-,9\n-,8\n-,7\n-,6\n");
}

TEST_CASE("phase csv emits one row per grid point") {
    const PhaseDiagram d = phase_diagram(4, 0.1, 1.05, 1.95);
    const auto rows = lines_of(phase_csv(d));
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "r,winnerMembers,class,weightLog,margin");
    // Below the structural boundary at ~1.3247 the winner is the near cut {1;4}.
    CHECK(rows[1].rfind("1.050000,1;4,S_1*,", 0) == 0);
    // Above it the winner is the single split {1}.
    CHECK(rows[10].rfind("1.950000,1,C_1,", 0) == 0);
}

TEST_CASE("phase json summarises segments and keeps every point") {
    const PhaseDiagram d = phase_diagram(4, 0.1, 1.05, 1.95);
    const auto j = nlohmann::json::parse(phase_json(d));
    CHECK(j["n"] == 4);
    REQUIRE(j["segments"].size() == 2);
    CHECK(j["segments"][0]["label"] == "S_1*");
    CHECK(j["segments"][1]["label"] == "C_1");
    CHECK(j["points"].size() == 10);
    CHECK(j["points"][0]["r"].get<double>() == doctest::Approx(1.05));
    CHECK(j["points"][0]["members"] == "1;4");
}

TEST_CASE("enumeration output names the winner and the runner up") {
    const EnumerationResult e = max_cut_exhaustive(6, 1.1);
    const std::string csv = enumeration_csv(e);
    const auto rows = lines_of(csv);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "n,r,winnerMembers,class,weightLog,margin,runnerUpMembers,tieCount");
    CHECK(rows[1].rfind("6,1.1,1;2,C_2,", 0) == 0);

    const auto j = nlohmann::json::parse(enumeration_json(e));
    CHECK(j["n"] == 6);
    CHECK(j["winner"]["members"] == "1;2");
    CHECK(j["winner"]["class"] == "C_2");
    CHECK(j["tieCount"] == 0);
}

TEST_CASE("verification json lists violations and omits wall-clock time") {
    const VerificationReport rep = verify_exhaustive(4, 4, 0.1);
    const std::string text = verification_json(rep);
    CHECK(text.find("elapsed") == std::string::npos);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["nLow"] == 4);
    CHECK(j["nHigh"] == 4);
    CHECK(j["checked"] == 9);
    CHECK(j["ok"] == false);
    REQUIRE(j["violations"].size() == 3);
    CHECK(j["violations"][0]["n"] == 4);
    CHECK(j["violations"][0]["r"].get<double>() == doctest::Approx(1.1));
    CHECK(j["violations"][0]["members"] == "1;4");
    // Below the first threshold of the isolated family the best isolated cut
    // splits off two vertices, so the benchmark index is 2.
    CHECK(j["violations"][0]["expectedK"] == 2);
    CHECK(j["violations"][0]["margin"].get<double>() > 0.0);
}

TEST_CASE("clean verification reports ok with an empty list") {
    const VerificationReport rep = verify_exhaustive(7, 7, 0.1);
    const auto j = nlohmann::json::parse(verification_json(rep));
    CHECK(j["ok"] == true);
    CHECK(j["violations"].empty());

    const auto rows = lines_of(verification_csv(rep));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == "n,r,winnerMembers,expectedK,margin");
}

TEST_CASE("verification csv has one row per violation") {
    const VerificationReport rep = verify_exhaustive(4, 4, 0.1);
    const auto rows = lines_of(verification_csv(rep));
    REQUIRE(rows.size() == 4);
    CHECK(rows[1].rfind("4,1.100000,1;4,2,", 0) == 0);
}

TEST_CASE("scaling csv reproduces the printed table shape") {
    const auto rows = scaling_error_table({{10, 1}, {10, 2}});
    CHECK(scaling_csv(rows) ==
          "n,k,actual,predicted,errorPct\n"
          "10,1,0.1883,0.1664,-11.6\n"
          "10,2,0.0843,0.0835,-1.0\n");
}

TEST_CASE("scaling json keeps full precision") {
    const auto rows = scaling_error_table({{10, 3}});
    const auto j = nlohmann::json::parse(scaling_json(rows));
    REQUIRE(j.size() == 1);
    CHECK(j[0]["n"] == 10);
    CHECK(j[0]["k"] == 3);
    CHECK(j[0]["actual"].get<double>() == doctest::Approx(0.0404).epsilon(1e-2));
    CHECK(j[0]["errorPct"].get<double>() == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("bounds csv follows the comparison table columns") {
    const std::vector<BoundComparison> rows = {bound_comparison(8, 1.5)};
    const std::string csv = bounds_csv(rows);
    const auto out = lines_of(csv);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == "n,r,k,optimum,gyBound,gapPct");
    const BoundComparison& b = rows[0];
    const std::string want = "8,1.5,1," + fmt_weight(b.optimum) + "," +
                             fmt_weight(b.gy_bound) + "," + fmt_percent(b.gap_gy_pct);
    CHECK(out[1] == want);
    CHECK(out[1].find("e+05") != std::string::npos);
}

TEST_CASE("bounds json includes the spanning-tree bound as well") {
    const std::vector<BoundComparison> rows = {bound_comparison(8, 1.05)};
    const auto j = nlohmann::json::parse(bounds_json(rows));
    REQUIRE(j.size() == 1);
    CHECK(j[0]["n"] == 8);
    CHECK(j[0]["k"] == 3);
    CHECK(j[0]["gyBound"].get<double>() == doctest::Approx(33.4957).epsilon(1e-3));
    CHECK(j[0]["ptBound"].get<double>() > 0.0);
    CHECK(j[0]["gapPct"].get<double>() == doctest::Approx(6.65).epsilon(0.05));
}
