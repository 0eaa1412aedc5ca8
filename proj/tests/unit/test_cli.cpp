#include "doctest.h"

#include "fibrant/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace fibrant::cli;

namespace {

CommandResult run_ok(const std::vector<std::string>& args) {
    auto r = run(args);
    INFO(r.err);
    REQUIRE(r.exit_code == 0);
    return r;
}

json run_json(const std::vector<std::string>& args) { return json::parse(run_ok(args).out); }

}  // namespace

TEST_CASE("classify-triple and collide") {
    auto t = run_json({"classify-triple", "2", "3", "7"});
    CHECK(t["kodaira"] == "I1*");
    CHECK(run_json({"classify-triple", "3", "4", "8"})["kodaira"] == "IV*");
    CHECK(run_json({"classify-triple", "7", "9", "18"})["reduced"] == json::parse("[3,3,6]"));
    CHECK(run_json({"classify-triple", "inf", "1", "2"})["kodaira"] == "II");
    CHECK(run({"classify-triple", "2", "3", "x"}).exit_code == 2);
    CHECK(run({"classify-triple", "1", "3", "2"}).exit_code == 2);

    auto c = run_json({"collide", "I1", "I4"});
    CHECK(c["label"] == "I5");
    CHECK(run_json({"collide", "I4", "I1*"})["label"] == "I3*");
    auto off = run({"collide", "IV", "IV"});
    CHECK(off.exit_code == 2);
    CHECK(off.err.find("not on Miranda's list") != std::string::npos);
    CHECK(run({"collide", "I1", "V"}).exit_code == 2);
}

TEST_CASE("analyze report") {
    auto r = run_ok({"analyze", "--alpha", "1"});
    auto doc = json::parse(r.out);
    CHECK(validate(doc, report_schema()).empty());
    bool found = false;
    for (auto& d : doc["divisors"])
        if (d["name"] == "L~") found = d["kodaira"] == "I1*";
    CHECK(found);
    CHECK(doc["collisions"].size() == 17);
    CHECK(doc["total_space_singularities"].size() == 3);
    CHECK(doc["monodromy"]["satisfied"] == true);
    CHECK(doc["monodromy"]["relations"].size() == 6);

    // Byte-stable output.
    CHECK(run_ok({"analyze", "--alpha", "1"}).out == r.out);

    auto md = run_ok({"analyze", "--alpha", "1", "--format", "md"}).out;
    CHECK(md.find("| L~ | line | (2,3,7) | I1* |") != std::string::npos);
    CHECK(md.find("| E2@(0:0:1) | exceptional@(0:0:1) | (0,0,4) | I4 |") != std::string::npos);

    CHECK(json::parse(run_ok({"analyze", "--alpha", "-7/3"}).out)["alpha"] == "-7/3");
}

TEST_CASE("exit codes") {
    auto g = run({"analyze", "--alpha", "4"});
    CHECK(g.exit_code == 2);
    CHECK(g.err.find("(alpha-4)^3") != std::string::npos);
    CHECK(run({"analyze", "--alpha", "0"}).exit_code == 2);
    CHECK(run({"analyze", "--alpha", "-4"}).exit_code == 2);
    CHECK(run({"analyze", "--alpha", "one"}).exit_code == 2);
    CHECK(run({"analyze", "--alpha", "1", "--format", "xml"}).exit_code == 2);
    CHECK(run({"analyze"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);

    ::setenv("FIBRANT_BLOWUP_BUDGET", "2", 1);
    auto b = run({"analyze", "--alpha", "1"});
    ::unsetenv("FIBRANT_BLOWUP_BUDGET");
    CHECK(b.exit_code == 1);
    CHECK(b.err.find("germ a = ") != std::string::npos);
}

TEST_CASE("schema") {
    std::ifstream f(std::string(FIBRANT_SCHEMA_DIR) + "/report.schema.json");
    REQUIRE(f.good());
    std::stringstream text;
    text << f.rdbuf();
    CHECK(json::parse(text.str()) == report_schema());

    auto doc = run_json({"analyze", "--alpha", "2"});
    REQUIRE(validate(doc, report_schema()).empty());

    json missing = doc;
    missing.erase("notes");
    CHECK(validate(missing, report_schema()).size() == 1);
    json wrong = doc;
    wrong["divisors"][0]["triple"] = json::parse("[1, 2]");
    CHECK(validate(wrong, report_schema()).size() == 1);
    json extra = doc;
    extra["collisions"][0]["colour"] = "red";
    CHECK(validate(extra, report_schema()).size() == 1);
    json bad_enum = doc;
    bad_enum["total_space_singularities"][0]["kind"] = "surface";
    CHECK(validate(bad_enum, report_schema()).size() == 1);
    json bad_type = doc;
    bad_type["blow_ups"] = "many";
    CHECK(validate(bad_type, report_schema()).size() == 1);
}

TEST_CASE("module wrappers") {
    auto cusp = run_json({"blowup-demo", "cusp"});
    CHECK(cusp["events"].size() == 3);
    CHECK(cusp["final_charts"].size() == 2);
    CHECK(cusp["divisors"][2]["kodaira"] == "I0*");

    auto p010 = run_json({"blowup-demo", "p010"});
    CHECK(p010["divisors"].size() == 4);
    CHECK(p010["divisors"][0]["kodaira"] == "IV*");
    CHECK(p010["divisors"][1]["kodaira"] == "IV");
    auto p001 = run_json({"blowup-demo", "p001", "--alpha", "3"});
    CHECK(p001["collisions"].size() == 3);
    CHECK(run({"blowup-demo", "node"}).exit_code == 2);

    for (const char* m : {"0", "1/2", "3"}) CHECK(run_json({"bracket-check", "--m", m})["all_zero"] == true);
    CHECK(run({"bracket-check", "--m", "-1"}).exit_code == 2);

    std::vector<std::string> sample{"sample-fiber", "--h3", "1", "--h4", "1/2", "--a", "2", "--m", "1/2", "-n", "20",
                                    "--seed", "9"};
    auto s = run_json(sample);
    CHECK(s["points"].size() == 20);
    CHECK(s["max_cubic_residual"].get<double>() < 1e-9);
    CHECK(s["max_weierstrass_residual"].get<double>() < 1e-9);
    CHECK(run_ok(sample).out == s.dump(2) + "\n");

    auto mono = run_json({"monodromy", "--bound", "10"});
    CHECK(mono["node_solutions"] == json::parse(R"(["[[1,1],[0,1]]"])"));
    CHECK(mono["normal_forms"] == json::parse(R"(["[[1,0],[-1,1]]"])"));
    CHECK(mono["braid_check"] == true);
    CHECK(mono["presentation"]["satisfied"] == true);
}
