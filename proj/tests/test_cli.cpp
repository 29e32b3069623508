#include <doctest.h>

#include <fstream>
#include <sstream>

#include "chainmdp/cli.hpp"
#include "chainmdp/json_io.hpp"
#include "codes.hpp"

using namespace testsupport;
using chainmdp::io::json;

namespace {

struct Run {
    int exit_code;
    std::string out, err;
    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CHAINMDP_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("FNV-1a digest") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("exit codes on the golden suite") {
    struct Case {
        std::vector<std::string> args;
        int expected;
    };
    const std::vector<Case> cases{
        {{"check", "mdp", "--code", data("z121_322.json"), "--method", "both"}, 0},
        {{"check", "reverse-mdp", "--code", data("z121_322.json"), "--method", "both"}, 0},
        {{"check", "delay-free", "--code", data("zpr_zz_stack.json")}, 1},
        {{"check", "delay-free", "--code", data("zpr_top_layer.json")}, 0},
        {{"check", "reduced", "--code", data("z121_322.json")}, 0},
        {{"check", "gamma-basis", "--code", data("z121_322.json")}, 0},
        {{"check", "mdp", "--code", data("bad.json")}, 2},
        {{"check", "mdp", "--code", data("f11_311.json")}, 0},
        {{"check", "mdp", "--code", data("f115_724.json")}, 0},
        {{"check", "mdp", "--code", data("missing.json")}, 2},
        {{"check", "mdp", "--code", data("z121_322.json"), "--method", "fast"}, 2},
        {{"distances", "--code", data("z121_322.json"), "--max-j", "1"}, 0},
        {{"distances", "--code", data("gr121_5_744.json"), "--max-j", "9"}, 2},
        {{"bounds", "--n", "3", "--k", "2", "--delta", "2", "--nu", "2"}, 0},
        {{"blockcode", "mindist", "--matrix", data("z9_block.json")}, 0},
        {{"search", "superregular", "--ell", "3", "--ring", "f2"}, 1},
        {{"search", "superregular", "--ell", "2", "--ring", "f2"}, 0},
        {{"search", "superregular", "--ell", "4", "--ring", "f7", "--strategy", "random"}, 2},
        {{"frobnicate"}, 2},
        {{"--help"}, 0},
    };
    for (const auto& c : cases) {
        const Run r = run(c.args);
        INFO(c.args.front(), " ", r.err);
        CHECK(r.exit_code == c.expected);
    }
    const Run bad = run({"check", "mdp", "--code", data("bad.json")});
    CHECK(bad.err.find("nu does not divide k") != std::string::npos);
    CHECK(bad.doc()["error"]["code"] == "PreconditionViolated");
}

TEST_CASE("reports are deterministic and schema-versioned") {
    const std::vector<std::string> args{"distances", "--code", data("z121_322.json"), "--max-j", "1"};
    const Run a = run(args), b = run(args);
    CHECK(a.out == b.out);
    const json d = a.doc();
    CHECK(d["schema_version"] == kReportSchemaVersion);
    CHECK(d["command"] == json(args));
    CHECK(d["results"]["profile"] == json{3, 5});
    CHECK(d["results"]["all_saturated"] == true);
    CHECK(d["results"]["L"] == 1);
    CHECK(d["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);

    const Run other = run({"distances", "--code", data("f11_311.json"), "--max-j", "1"});
    CHECK(other.doc()["input_digest"] != d["input_digest"]);

    const Run timed = run({"check", "mdp", "--code", data("z121_322.json"), "--timing"});
    CHECK(timed.doc().contains("timing"));
    CHECK_FALSE(a.doc().contains("timing"));
}

TEST_CASE("check mdp reports both methods") {
    const json r = run({"check", "mdp", "--code", data("z121_322.json"), "--method", "both"}).doc()["results"];
    CHECK(r["holds"] == true);
    CHECK(r["agree"] == true);
    CHECK(r["methods"]["distances"]["distances"] == json{3, 5});
    CHECK(r["methods"]["minors"]["holds"] == true);

    const Run lifted = run({"check", "mdp", "--code", data("gr121_5_744.json")});
    CHECK(lifted.exit_code == 0);
    CHECK(lifted.doc()["results"]["code"]["k"] == 4);
    CHECK(lifted.doc()["results"]["code"]["delta"] == 8);
}

TEST_CASE("bounds from parameters") {
    const json r = run({"bounds", "--n", "3", "--k", "2", "--delta", "2", "--nu", "2"}).doc()["results"];
    CHECK(r["generalized_singleton"] == 6);
    CHECK(r["L"] == 1);
    CHECK(r["column_distance_bounds"] == json{3, 5});
    const Run odd = run({"bounds", "--n", "2", "--k", "1", "--delta", "2", "--nu", "2"});
    CHECK(odd.exit_code == 0);
    CHECK(odd.doc()["warnings"].size() == 1);
}

TEST_CASE("constructions pipe into checks") {
    const Run via_matrix = run({"construct", "superregular", "--matrix", data("t6_z11.json"), "--n", "3", "--k", "1",
                                "--L", "1", "--ring", "z121", "--rows", "example"});
    const Run via_lift = run({"construct", "lift", "--field-code", data("f11_311.json"), "--ring", "z121"});
    REQUIRE(via_matrix.exit_code == 0);
    REQUIRE(via_lift.exit_code == 0);
    const PolyMatrix g1 = chainmdp::io::encoder_from_json(via_matrix.doc());
    const PolyMatrix g2 = chainmdp::io::encoder_from_json(via_lift.doc());
    CHECK(g1 == z121_encoder());
    CHECK(g2 == z121_encoder());

    const Run checked = run({"check", "reverse-mdp", "--code", "-", "--method", "both"}, via_matrix.out);
    CHECK(checked.exit_code == 0);

    const Run formula = run({"construct", "superregular", "--matrix", data("t6_z11.json"), "--n", "3", "--k", "1",
                             "--L", "1", "--rows", "formula"});
    CHECK(formula.doc()["report"]["results"]["minors_unit"] == false);
    CHECK(run({"check", "mdp", "--code", "-"}, formula.out).exit_code == 1);

    const Run binomial = run({"construct", "binomial", "--n", "3", "--k", "1", "--delta", "1", "--p", "7"});
    CHECK(binomial.doc()["encoder"]["coeffs"] == json{{{3, 5, 1}}, {{1, 5, 3}}});
    CHECK(binomial.doc()["report"]["results"]["bound"] == "200");
    CHECK(binomial.doc()["report"]["warnings"].size() == 1);
    const Run lifted = run({"construct", "lift", "--field-code", "-", "--ring", "z49"}, binomial.out);
    CHECK(run({"check", "reverse-mdp", "--code", "-", "--method", "both"}, lifted.out).exit_code == 0);
}

TEST_CASE("golden codes round trip through the loader") {
    for (const char* name : {"z121_322.json", "f11_311.json", "zpr_zz_stack.json", "zpr_top_layer.json",
                             "bad.json", "f115_724.json", "gr121_5_744.json"}) {
        const Run shown = run({"check", "reduced", "--code", data(name)});
        REQUIRE(shown.exit_code == 0);
        std::ifstream f(data(name));
        const json original = json::parse(f);
        const PolyMatrix g = chainmdp::io::encoder_from_json(original);
        const json again = chainmdp::io::code_to_json(g);
        CHECK(chainmdp::io::encoder_from_json(again) == g);
        CHECK(again["encoder"] == chainmdp::io::code_to_json(chainmdp::io::encoder_from_json(again))["encoder"]);
    }
}

TEST_CASE("ring, block code and search commands") {
    const json ring = run({"ring", "--ring", "z8", "--element", "6"}).doc()["results"];
    CHECK(ring["representatives"] == json{0, 1});
    CHECK(ring["element"]["gamma_adic_digits"] == json{0, 1, 1});

    const json shape = run({"blockcode", "shape", "--matrix", data("z9_block.json")}).doc()["results"];
    CHECK(shape["gamma_dimension"] == 3);
    const json params = run({"blockcode", "params", "--matrix", data("z9_block.json")}).doc()["results"];
    CHECK(params["params"] == json{1, 1});
    const json sf = run({"blockcode", "standard-form", "--matrix", data("z9_block.json")}).doc()["results"];
    CHECK(sf["levels"] == json{0, 1});
    const json md = run({"blockcode", "mindist", "--matrix", data("z9_block.json")}).doc()["results"];
    CHECK(md["min_distance"].get<int>() <= md["singleton_bound"].get<int>());

    const std::vector<std::string> random{"search", "superregular", "--ell", "4", "--ring", "f7", "--strategy",
                                          "random", "--seed", "11", "--budget", "200"};
    const Run a = run(random), b = run(random);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const json found = a.doc()["results"]["found"];
    REQUIRE(!found.empty());
    CHECK(found[0]["superregular"] == true);

    const json two = run({"search", "superregular", "--ell", "2", "--ring", "f2", "--with-minors"}).doc()["results"];
    REQUIRE(two["count"] == 1);
    CHECK(two["found"][0]["spec"]["first_row"] == json{1, 1});
    CHECK(two["found"][0]["minors"].size() == 4);
}
