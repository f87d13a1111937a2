#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fubini/error.hpp"
#include "fubini/io.hpp"
#include "fubini/verify.hpp"

using namespace fubini;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
    std::string path = "fubini_test_" + name;
    std::ofstream(path) << contents;
    return path;
}

bool same_poset(const Poset& a, const Poset& b) {
    if (a.n != b.n || a.k != b.k || a.kind != b.kind || a.elements != b.elements || a.hasse != b.hasse ||
        a.codim != b.codim)
        return false;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (a.leq(i, j) != b.leq(i, j)) return false;
    return true;
}

} // namespace

TEST_SUITE("cli_io") {

TEST_CASE("matrix files") {
    RationalMatrix m = parse_matrix(R"({"rows": 2, "cols": 3, "entries": [[1, "2/4", 0], ["-3/-6", "+7", -2]]})");
    CHECK(m(1, 2) == Rational(1, 2));
    CHECK(m(2, 1) == Rational(1, 2));
    CHECK(m(2, 2) == 7);
    CHECK(m(2, 3) == -2);
    CHECK(matrix_to_json(m).dump() == R"({"cols":3,"entries":[[1,"1/2",0],["1/2",7,-2]],"rows":2})");
    CHECK(parse_matrix(matrix_to_json(m).dump()) == m);
    CHECK(parse_rational("6/-4") == Rational(-3, 2));

    CHECK_THROWS_AS(parse_matrix("{"), DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 2, "entries": [[1]]})"), DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 1, "entries": [["1/0"]]})"), DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 1, "entries": [[1.5]]})"), DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 1, "entries": [["x"]]})"), DomainError);
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/matrix.json"), DomainError);
}

TEST_CASE("poset export") {
    Poset d32 = build_poset(3, 2, OrderKind::Decaf);
    std::string dot = export_poset(d32, PosetFormat::Dot);
    CHECK(dot == export_poset(build_poset(3, 2, OrderKind::Decaf), PosetFormat::Dot));
    CHECK(dot.rfind("digraph \"decaf_3_2\" {\n", 0) == 0);
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::istringstream lines(dot);
    for (std::string line; std::getline(lines, line);) {
        nodes += line.find("[label=") != std::string::npos;
        edges += line.find("->") != std::string::npos;
    }
    CHECK(nodes == 6);
    CHECK(edges == d32.hasse.size());

    Poset m22 = build_poset(2, 2, OrderKind::Medium);
    CHECK(export_poset(m22, PosetFormat::Dot) ==
          "digraph \"medium_2_2\" {\n  rankdir=BT;\n  node [shape=plaintext];\n  n0 [label=\"12\"];\n"
          "  n1 [label=\"21\"];\n  n0 -> n1;\n}\n");

    for (OrderKind kind : {OrderKind::Medium, OrderKind::Espresso, OrderKind::Decaf}) {
        Poset p = build_poset(4, 3, kind);
        CHECK(same_poset(poset_from_json(nlohmann::json::parse(export_poset(p, PosetFormat::Json))), p));
        CHECK(same_poset(poset_from_json(poset_to_json(p, true)), p));
    }
    CHECK_THROWS_AS(parse_poset_format("svg"), DomainError);
    CHECK_THROWS_AS(poset_from_json(nlohmann::json::parse(R"({"n": 2})")), DomainError);
}

TEST_CASE("command line examples") {
    CHECK(run({"compare", "31422", "31424", "--order", "medium"}).out == "31422 < 31424\n");
    CHECK(run({"compare", "31424", "31422", "--order", "medium"}).out == "31424 > 31422\n");
    CHECK(run({"compare", "1323", "1123", "--order", "touch"}).out == "1323 ⇀ 1123: true\n");
    CHECK(run({"compare", "1323", "1123", "--order", "medium"}).out == "1323 || 1123\n");
    CHECK(run({"compare", "1323", "1123", "--order", "espresso"}).out == "1323 < 1123\n");
    CHECK(run({"compare", "12", "12", "--order", "decaf"}).out == "12 = 12\n");
    CHECK(run({"poincare", "3", "2"}).out == "1 + 3q + 2q^2\n");
    CHECK(run({"enumerate", "3", "2"}).out == "112\n121\n122\n211\n212\n221\n");

    Run info = run({"info", "31422"});
    CHECK(info.code == 0);
    CHECK(info.out.find("dim       6\n") != std::string::npos);
    CHECK(info.out.find("  0 1 * * *\n") != std::string::npos);

    Run minors = run({"minors", "21231231", "--class", "T", "--json"});
    CHECK(minors.code == 0);
    auto j = nlohmann::json::parse(minors.out);
    bool found = false;
    for (const auto& e : j["minors"]) found |= e["J"] == std::vector<int>{2, 6, 8};
    CHECK(found);

    Run ess = run({"essential", "122"});
    CHECK(ess.out.find("Ess*       none") != std::string::npos);

    std::string dot = run({"poset", "3", "2", "--order", "decaf", "--out", "dot"}).out;
    CHECK(dot == export_poset(build_poset(3, 2, OrderKind::Decaf), PosetFormat::Dot));
    CHECK(run({"poset", "3", "2", "--order", "medium", "--out", "json", "--hasse-only"}).out.find("relations") ==
          std::string::npos);
}

TEST_CASE("matrix subcommands") {
    std::string m = temp_file("m1123.json", R"({"rows": 3, "cols": 4, "entries": [[1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]})");
    Run member = run({"member", "1323", "--matrix", m});
    CHECK(member.code == 0);
    CHECK(member.out == "flag minors    true\nessential set  true\n");
    // 1123 lies in the closure of the larger cell 1223.
    CHECK(run({"member", "1223", "--matrix", m}).out == "flag minors    true\nessential set  true\n");
    CHECK(run({"member", "2113", "--matrix", m}).out == "flag minors    false\nessential set  false\n");

    std::string a = temp_file("scaled.json", R"({"rows": 2, "cols": 3, "entries": [[2, 4, "1/2"], [0, 0, 3]]})");
    Run d = run({"decompose", "--matrix", a});
    CHECK(d.code == 0);
    auto j = nlohmann::json::parse(d.out);
    CHECK(j["word"] == "112");
    CHECK(j["scaling"]["entries"][0][0] == 2);
    CHECK(j["scaling"]["entries"][1][1] == 4);
    CHECK(j["scaling"]["entries"][2][2] == 3);
    CHECK(j["unitriangular"]["entries"] == nlohmann::json::parse("[[1,0],[0,1]]"));
    CHECK(j["reduced"]["entries"] == nlohmann::json::parse(R"([[1,1,"1/6"],[0,0,1]])"));
    std::remove(m.c_str());
    std::remove(a.c_str());
}

TEST_CASE("errors and exit codes") {
    CHECK(run({}).code == cli::kExitDomainError);
    CHECK(run({"brew", "3"}).code == cli::kExitDomainError);
    CHECK(run({"info", "1x2"}).code == cli::kExitDomainError);
    CHECK(run({"info", "13"}).code == cli::kExitDomainError);
    CHECK(run({"compare", "12", "123"}).code == cli::kExitDomainError);
    CHECK(run({"poset", "7", "4", "--budget", "100"}).code == cli::kExitDomainError);
    CHECK(run({"enumerate", "2", "3"}).code == cli::kExitDomainError);
    CHECK(run({"decompose", "--matrix", "/nonexistent.json"}).code == cli::kExitDomainError);
    CHECK(run({"verify", "3", "2", "--suites", "nonsense"}).code == cli::kExitDomainError);
    CHECK(run({"--help"}).code == cli::kExitOk);
    CHECK_FALSE(run({"info", "1x2"}).err.empty());
}

TEST_CASE("outputs are byte-identical across runs") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"poset", "4", "3", "--order", "espresso", "--out", "json"},
             {"poset", "4", "2", "--order", "decaf", "--out", "dot"},
             {"minors", "31424"},
             {"verify", "4", "3", "--seed", "7", "--json"},
             {"essential", "44253136541"}}) {
        Run a = run(args);
        Run b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("verification harness") {
    VerifyReport r43 = verify_suite({4, 3, 1, 20, 20000, {}});
    CHECK_FALSE(r43.any_failure());
    CHECK(r43.suites.size() == suite_names().size());
    for (const auto& s : r43.suites) {
        CAPTURE(s.name);
        CAPTURE(s.summary);
        if (is_finding_suite(s.name))
            CHECK((s.status == SuiteStatus::Finding || s.status == SuiteStatus::Skipped));
        else
            CHECK((s.status == SuiteStatus::Pass || s.status == SuiteStatus::Skipped));
    }
    CHECK(r43.find("bruhat")->status == SuiteStatus::Skipped);

    VerifyReport r33 = verify_suite({3, 3, 1, 20, 20000, {"bruhat"}});
    REQUIRE(r33.suites.size() == 1);
    CHECK(r33.suites[0].status == SuiteStatus::Pass);

    VerifyReport r54 = verify_suite({5, 4, 1, 20, 20000, {"medium-ranked"}});
    const SuiteResult* ranked = r54.find("medium-ranked");
    REQUIRE(ranked != nullptr);
    CHECK(ranked->status == SuiteStatus::Finding);
    bool certificate = false;
    for (const auto& c : ranked->details["certificates"])
        certificate |= c["lower"] == "41321" && c["upper"] == "44312" && c["gap"] == 2 && c["dim_lower"] == 3 &&
                       c["dim_upper"] == 1;
    CHECK(certificate);
    CHECK_FALSE(r54.any_failure());

    Run cli43 = run({"verify", "4", "3"});
    CHECK(cli43.code == cli::kExitOk);
    CHECK(cli43.out.find("result: ok") != std::string::npos);
    CHECK_THROWS_AS(verify_suite({3, 4, 1, 20, 20000, {}}), DomainError);

    VerifyReport synthetic{2, 2, 1, 20, {{"lifting", SuiteStatus::Finding, "x", {}}}};
    CHECK_FALSE(synthetic.any_failure());
    synthetic.suites.push_back({"words", SuiteStatus::Fail, "x", {}});
    CHECK(synthetic.any_failure());
    CHECK(synthetic.to_json()["failed"] == true);
}

}
