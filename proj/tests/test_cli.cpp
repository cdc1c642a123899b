#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "chevk1/serialize.hpp"

using namespace chevk1;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "chevk1-test-cli";
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string &args, const fs::path &out,
            const fs::path &err) {
    std::string cmd = std::string(CHEVK1_CLI_PATH) + " " + args + " > " +
                      out.string() + " 2> " + err.string();
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("ring element JSON round trips") {
    RingDescPtr q = RingDescriptor::parse("quot(poly(Z[1/2]; xi, zeta); xi^2)");
    RingElement xi = RingElement::variable(q, "xi");
    RingElement zeta = RingElement::variable(q, "zeta");
    RingElement e = RingElement::one(q) +
                    RingElement::from_fraction(q, 3, 2) * zeta * xi;
    json j = element_to_json(e);
    CHECK(j.is_object());
    CHECK(j["1"] == "1");
    CHECK(j["xi^1*zeta^1"] == "3/2^1");
    CHECK(element_from_json(q, j) == e);

    RingDescPtr z = RingDescriptor::integers();
    CHECK(element_to_json(RingElement::from_int(z, -17)) == "-17");
    CHECK(element_from_json(z, json("-17")) == RingElement::from_int(z, -17));
}

TEST_CASE("word and matrix JSON round trips") {
    DiagramPtr d = parse_rep("D5:w1");
    RingDescPtr ring = RingDescriptor::residue(360);
    GeneratorWord w{d->label(),
                    {{LetterKind::X, d->system()->simple(1),
                      RingElement::from_int(ring, 17), {}},
                     {LetterKind::H, d->system()->simple(2),
                      RingElement::from_int(ring, 7), "E(Delta,R)"}}};
    json jw = word_to_json(w);
    CHECK(jw.is_array());
    CHECK(jw[0]["kind"] == "x");
    CHECK(jw[1]["tag"] == "E(Delta,R)");
    GeneratorWord back = word_from_json(ring, d->label(), jw);
    REQUIRE(back.letters.size() == 2);
    CHECK(back.letters[0].scalar == w.letters[0].scalar);
    CHECK(back.letters[1].tag == w.letters[1].tag);

    GroupElement g = realize(d, ring, w);
    GroupElement g2 = matrix_from_json(matrix_to_json(g));
    GroupElement g1 = g;
    g1.clear_provenance();
    CHECK(g1 == g2);
}

TEST_CASE("diagram JSON shape") {
    DiagramPtr d = parse_rep("E6:w1");
    json j = diagram_to_json(*d);
    CHECK(j["rep"] == "E6:w1");
    CHECK(j["nodes"].size() == 27);
    CHECK(j["edges"].size() == d->edges().size());
    for (const auto &e : j["edges"]) {
        CHECK(e.size() == 3);
        CHECK(e[0].get<int>() >= 1);
        CHECK(e[1].get<int>() <= 27);
    }
}

TEST_CASE("cli: diagram and roots") {
    fs::path dir = temp_dir();
    fs::path out = dir / "out.json", err = dir / "err.txt";

    CHECK(run_cli("diagram --rep E6:w1 --format json", out, err) == 0);
    json j = json::parse(slurp(out));
    CHECK(j["nodes"].size() == 27);

    CHECK(run_cli("diagram --rep E6:w1 --format dot", out, err) == 0);
    CHECK(slurp(out).find("digraph") != std::string::npos);

    CHECK(run_cli("roots --system E7", out, err) == 0);
    json r = json::parse(slurp(out));
    CHECK(r["count"] == 126);
    CHECK(r["maximal_root"] == json::parse("[2,2,3,4,3,2,1]"));
}

TEST_CASE("cli: reduce on e^mu yields the empty word") {
    fs::path dir = temp_dir();
    fs::path in = dir / "v.json", out = dir / "w.json", err = dir / "err.txt";
    json v = json::array();
    v.push_back("1");
    for (int i = 1; i < 27; ++i)
        v.push_back("0");
    std::ofstream(in) << v.dump();
    CHECK(run_cli("reduce --rep E6:w1 --ring Z/360 --in " + in.string(), out,
                  err) == 0);
    json w = json::parse(slurp(out));
    CHECK(w.is_array());
    CHECK(w.empty());
}

TEST_CASE("cli: reduced words replay through elem") {
    fs::path dir = temp_dir();
    fs::path in = dir / "v2.json", out = dir / "w2.json",
             err = dir / "err.txt";
    json v = json::array();
    for (int i = 0; i < 27; ++i)
        v.push_back(std::to_string((i * 37 + 5) % 360));
    std::ofstream(in) << v.dump();
    REQUIRE(run_cli("reduce --rep E6:w1 --ring Z/360 --in " + in.string(), out,
                    err) == 0);

    fs::path mat = dir / "m.json";
    REQUIRE(run_cli("elem --rep E6:w1 --ring Z/360 --in " + out.string(), mat,
                    err) == 0);
    GroupElement h = matrix_from_json(json::parse(slurp(mat)));

    RingDescPtr ring = RingDescriptor::residue(360);
    std::vector<RingElement> coords = vector_from_json(ring, json::parse(slurp(in)));
    CHECK(act(h, coords)[0].is_one());
}

TEST_CASE("cli: decompose round trips a matrix input") {
    fs::path dir = temp_dir();
    fs::path in = dir / "g.json", out = dir / "split.json",
             err = dir / "err.txt";

    DiagramPtr d = parse_rep("E6:w1");
    RingDescPtr ring = RingDescriptor::residue(5);
    const auto &roots = d->system()->roots();
    std::mt19937_64 rng(5);
    GroupElement g;
    do {
        GeneratorWord w{d->label(), {}};
        for (int i = 0; i < 20; ++i)
            w.letters.push_back({LetterKind::X, roots[rng() % roots.size()],
                                 RingElement::from_int(ring, Int(rng() % 5)),
                                 {}});
        g = realize(d, ring, w);
    } while (!g.at(0, 0).is_unit());
    std::ofstream(in) << matrix_to_json(g).dump();

    REQUIRE(run_cli("decompose --rep E6:w1 --pivot 1 --in " + in.string(), out,
                    err) == 0);
    json split = json::parse(slurp(out));
    GroupElement v = realize(d, ring, word_from_json(ring, d->label(), split["v"]));
    GroupElement g1 = matrix_from_json(split["g1"]);
    GroupElement u = realize(d, ring, word_from_json(ring, d->label(), split["u"]));
    GroupElement prod = multiply(multiply(v, g1), u);
    prod.clear_provenance();
    g.clear_provenance();
    CHECK(prod == g);
}

TEST_CASE("cli: batch reduce is deterministic for a fixed seed") {
    fs::path dir = temp_dir();
    fs::path out1 = dir / "b1.json", out2 = dir / "b2.json",
             err = dir / "err.txt";
    std::string args = "reduce --rep D5:w1 --ring Z/360 --random 3 --seed 5";
    REQUIRE(run_cli(args, out1, err) == 0);
    REQUIRE(run_cli(args, out2, err) == 0);
    std::string a = slurp(out1), b = slurp(out2);
    CHECK(a == b);
    CHECK_FALSE(a.empty());

    fs::path out3 = dir / "b3.json";
    REQUIRE(run_cli("reduce --rep D5:w1 --ring Z/360 --random 3 --seed 6", out3,
                    err) == 0);
    CHECK(slurp(out3) != a);
}

TEST_CASE("cli: conjugate emits a replayable Weyl word") {
    fs::path dir = temp_dir();
    fs::path out = dir / "c.json", err = dir / "err.txt";
    int rc = run_cli("conjugate --system E7 --delta 2,3,4,5,6,7,max "
                     "--source [1,0,0,0,0,0,0] --target [1,1,1,1,1,1,1]",
                     out, err);
    REQUIRE(rc == 0);
    json j = json::parse(slurp(out));
    auto sys = RootSystem::build("E7");
    Root cur{1, 0, 0, 0, 0, 0, 0};
    WeylWord word;
    for (const auto &r : j["word"]) {
        Root root;
        for (const auto &c : r)
            root.push_back(c.get<int>());
        word.push_back(root);
    }
    CHECK(apply_weyl_word(*sys, word, cur) == Root{1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("cli: domain errors exit 1 with machine-readable JSON") {
    fs::path dir = temp_dir();
    fs::path in = dir / "bad.json", out = dir / "o.txt", err = dir / "e.txt";
    json v = json::array();
    for (int i = 0; i < 27; ++i)
        v.push_back("2");
    std::ofstream(in) << v.dump();
    CHECK(run_cli("reduce --rep E6:w1 --ring Z --in " + in.string(), out,
                  err) == 1);
    json e = json::parse(slurp(err));
    CHECK(e["error"]["kind"] == "NotUnimodular");
    CHECK(e["error"].contains("detail"));

    // a Delta root has no conjugator to alpha_1
    CHECK(run_cli("conjugate --system E7 --delta 2,3,4,5,6,7,max "
                  "--source [1,0,0,0,0,0,0] --target [0,1,0,0,0,0,0]",
                  out, err) == 1);
    CHECK(json::parse(slurp(err))["error"]["kind"] == "NoSuchElement");
}

TEST_CASE("cli: usage errors exit 2") {
    fs::path dir = temp_dir();
    fs::path out = dir / "o2.txt", err = dir / "e2.txt";
    CHECK(run_cli("frobnicate", out, err) == 2);
    CHECK(json::parse(slurp(err))["error"]["kind"] == "UsageError");

    CHECK(run_cli("diagram --rep E6:w9", out, err) == 2);
    CHECK(json::parse(slurp(err))["error"]["kind"] == "NotMinuscule");

    CHECK(run_cli("roots --system Q5", out, err) == 2);
    CHECK(run_cli("reduce --rep E6:w1 --ring Z", out, err) == 2);
}

TEST_CASE("cli: verify --suite paper passes") {
    fs::path dir = temp_dir();
    fs::path out = dir / "report.json", err = dir / "e3.txt";
    REQUIRE(run_cli("verify --suite paper", out, err) == 0);
    json report = json::parse(slurp(out));
    CHECK(report.size() >= 7);
    for (const auto &r : report) {
        INFO(r["check"].get<std::string>());
        CHECK(r["status"] == "pass");
        CHECK(r.contains("elapsed_ms"));
    }
}
