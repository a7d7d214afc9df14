#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "limtop/homology.hpp"
#include "limtop/io.hpp"

using namespace limtop;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + std::string(LIMTOP_CLI_PATH) + " " +
                      args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args) {
    RunResult r = run_cli(args);
    REQUIRE(r.exit_code == 0);
    return json::parse(r.out);
}

std::string fx(const std::string& name) {
    return std::string(LIMTOP_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("cli homology matches known groups", "[cli]") {
    json circle = run_json("homology " + fx("circle.cplx") + " --dim 1");
    CHECK(circle["rank"] == 1);
    CHECK(circle["torsion"].empty());
    CHECK(circle["generators"].size() == 1);

    json point = run_json("homology " + fx("point.cplx") + " --dim 3");
    CHECK(point["rank"] == 0);

    json torus = run_json("homology " + fx("torus7.cplx") + " --dim 1");
    CHECK(torus["rank"] == 2);

    json rp2 = run_json("homology " + fx("rp2_6.cplx") + " --dim 1");
    CHECK(rp2["rank"] == 0);
    CHECK(rp2["torsion"] == json::array({2}));

    json rel = run_json("homology " + fx("disc.cplx") + " --relative " + fx("circle.cplx") +
                        " --dim 2");
    CHECK(rel["relative"] == true);
    CHECK(rel["rank"] == 1);
}

TEST_CASE("cli colimit homology walks the staged file", "[cli]") {
    json line = run_json("homology " + fx("line.exh") + " --colimit --dim 0");
    CHECK(line["colimit"]["rank"] == 1);
    CHECK(line["stable_from"] <= 2);
    for (const auto& ok : line["maps_iso"]) CHECK(ok == true);

    json wedge = run_json("homology " + fx("wedge.exh") + " --colimit --dim 1");
    REQUIRE(wedge["stages"].size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(wedge["stages"][i]["rank"] == i);
    for (const auto& ok : wedge["maps_injective"]) CHECK(ok == true);
}

TEST_CASE("cli pi1 prints the edge-path presentation", "[cli]") {
    json circle = run_json("pi1 " + fx("circle.cplx"));
    CHECK(circle["generators"] == json::array({"a"}));
    CHECK(circle["relators"].empty());
    CHECK(circle["abelianization"]["rank"] == 1);

    json torus = run_json("pi1 " + fx("torus7.cplx"));
    CHECK(torus["abelianization"]["rank"] == 2);
    CHECK(torus["abelianization"]["torsion"].empty());
}

TEST_CASE("cli hurewicz compares and certifies", "[cli]") {
    json t = run_json("hurewicz " + fx("torus7.cplx"));
    CHECK(t["agree"] == true);

    json s = run_json("hurewicz " + fx("sphere.cplx") + " --dim 2");
    CHECK(s["status"] == "certified");
    CHECK(s["pi2"]["rank"] == 1);

    json r = run_json("hurewicz " + fx("rp2_6.cplx") + " --dim 2");
    CHECK(r["status"] == "not-simply-connected");
    CHECK(r["pi1_order"] == 2);
}

TEST_CASE("cli cover builds and verifies covers", "[cli]") {
    json dbl = run_json("cover " + fx("circle.cplx") + " --subgroup \"a a\"");
    CHECK(dbl["sheets"] == 2);
    CHECK(dbl["euler_base"] == 0);
    CHECK(dbl["euler_total"] == 0);
    CHECK(dbl["verified"] == true);

    json idx3 = run_json("cover " + fx("wedge2.cplx") +
                         " --subgroup \"a a a\" --subgroup \"b A\""
                         " --subgroup \"a b A A\" --subgroup \"a a b\" --emit-total");
    CHECK(idx3["sheets"] == 3);
    CHECK(idx3["euler_base"] == -1);
    CHECK(idx3["euler_total"] == -3);
    CHECK(idx3["verified"] == true);
    FiniteComplex total = parse_complex_document(idx3["total"].get<std::string>()).complex;
    CHECK(homology(total, 1).group().rank == 4);

    json lazy = run_json("cover " + fx("circle.cplx") + " --lazy --radius 10");
    CHECK(lazy["sheets"] == "infinite/prefix");
    CHECK(lazy["interior_h1"]["rank"] == 0);
    CHECK(lazy["verified"] == true);
}

TEST_CASE("cli connect reports the documented verdict shape", "[cli]") {
    json two = run_json("connect " + fx("example_5_4.schema"));
    CHECK(two["kind"] == "stages");
    CHECK(two["connected"] == false);
    CHECK(two["components"] == 2);
    CHECK(two["op"] == false);
    CHECK(two["ps"]["witness"] == "(0,+inf)");
    CHECK(two["e"]["none"] == 3);
    CHECK(two["definability"]["definable"] == false);
    REQUIRE(two["definability"]["obstructions"].size() == 4);
    CHECK(two["definability"]["obstructions"][0]["kind"] == "infinite-element");
    CHECK(two["definability"]["obstructions"][1]["kind"] == "epsilon-limit");

    json planar = run_json("connect " + fx("example_5_3.schema") + " --bound 2");
    CHECK(planar["kind"] == "planar");
    CHECK(planar["connected"] == false);
    CHECK(planar["components"] == 2);
    CHECK(planar["op"] == false);
    CHECK(planar["ps"]["none"] == 2);
    CHECK(planar["e"]["none"] == 2);
}

TEST_CASE("cli glue joins parts along identifications", "[cli]") {
    json g = run_json("glue " + fx("circle.cplx") + " " + fx("circle.cplx") +
                      " --id \"0 0 1 0\" --id \"0 1 1 1\"");
    CHECK(g["parts"] == 2);
    CHECK(g["euler"] == -1);
    CHECK(g["h0"]["rank"] == 1);
    CHECK(g["h1"]["rank"] == 2);
}

TEST_CASE("cli whitehead certifies, rejects, and abstains", "[cli]") {
    json yes = run_json("whitehead " + fx("disc.cplx") + " " + fx("point.cplx") + " --map " +
                        fx("disc_to_point.map"));
    CHECK(yes["verdict"] == "equivalence-certified");

    json no = run_json("whitehead " + fx("circle6.cplx") + " " + fx("circle.cplx") + " --map " +
                       fx("circle6_degree2.map"));
    CHECK(no["verdict"] == "not-equivalence");
    CHECK(no["reason"].get<std::string>().find("H_1") != std::string::npos);

    json maybe = run_json("whitehead " + fx("torus7.cplx") + " " + fx("torus7.cplx") +
                          " --map " + fx("torus7_identity.map"));
    CHECK(maybe["verdict"] == "undetermined");
}

TEST_CASE("cli exit codes follow the error taxonomy", "[cli]") {
    CHECK(run_cli("homology /nonexistent.cplx").exit_code == 2);
    CHECK(run_cli("--no-such-flag").exit_code == 2);
    CHECK(run_cli("glue " + fx("circle.cplx") + " --id \"0 0 0 1\"").exit_code == 3);
    CHECK(run_cli("cover " + fx("circle.cplx") + " --coset-budget 5").exit_code == 4);
    CHECK(run_cli("hurewicz " + fx("torus7.cplx") + " --dim 2 --coset-budget 20").exit_code ==
          4);
}

TEST_CASE("cli output is deterministic and env-overridable", "[cli]") {
    std::string args = "connect " + fx("example_5_4.schema");
    CHECK(run_cli(args).out == run_cli(args).out);
    std::string h = "homology " + fx("torus7.cplx") + " --dim 1";
    CHECK(run_cli(h).out == run_cli(h).out);

    json via_env = json::parse(
        run_cli("connect " + fx("example_5_4.schema"), "LIMTOP_GRAMMAR_BOUND=1").out);
    CHECK(via_env["e"]["none"] == 1);
    CHECK(via_env["ps"]["witness"] == "(0,+inf)");

    json via_flag = json::parse(run_cli("connect " + fx("example_5_4.schema") + " --bound 1").out);
    CHECK(via_flag == via_env);
}

TEST_CASE("fixture corpus round-trips byte for byte", "[cli]") {
    struct Entry {
        const char* file;
        FiniteComplex complex;
    };
    const Entry entries[] = {
        {"point.cplx", fixtures::point()},       {"interval.cplx", fixtures::interval()},
        {"circle.cplx", fixtures::circle()},     {"circle6.cplx", fixtures::circle(6)},
        {"disc.cplx", fixtures::disc()},         {"sphere.cplx", fixtures::sphere()},
        {"torus7.cplx", fixtures::torus7()},     {"rp2_6.cplx", fixtures::rp2_6()},
        {"klein.cplx", fixtures::klein()},       {"wedge2.cplx", fixtures::wedge(2)},
        {"wedge3.cplx", fixtures::wedge(3)},
    };
    for (const Entry& e : entries) {
        INFO(e.file);
        std::string text = slurp(fx(e.file));
        auto doc = parse_complex_document(text);
        CHECK(doc.complex == e.complex);
        CHECK(write_complex(doc.complex) == text);
    }

    for (const char* name : {"line.exh", "wedge.exh"}) {
        INFO(name);
        std::string text = slurp(fx(name));
        CHECK(write_exhaustion(to_exhaustion(parse_complex_document(text))) == text);
    }

    std::string s4 = slurp(fx("example_5_4.schema"));
    CHECK(write_schema1d(parse_schema1d(s4)) == s4);
    CHECK(s4 == write_schema1d(example_5_4()));
    std::string s3 = slurp(fx("example_5_3.schema"));
    CHECK(write_schema2d(parse_schema2d(s3)) == s3);
    CHECK(s3 == write_schema2d(example_5_3()));
}
