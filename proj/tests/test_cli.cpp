#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "cocycle_lab/json_io.hpp"

using namespace cocycle_lab;
using namespace cocycle_lab::kl;
using json_io::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(COCYCLE_LAB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_file(const std::string& name, const json& j) {
  std::ofstream(name) << j.dump();
  return name;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate") {
    const Run gb = run("generate --family g_b --b i --conductor 4");
    REQUIRE(gb.code == 0);
    const Cochain g = json_io::cochain_from_json(json::parse(gb.out));
    CHECK(json::parse(gb.out)["values"].size() == 64);
    CHECK(g.at({{sigma, tau, sigma}}) == CycScalar::i());
    CHECK(g == g_b(CycScalar::i()));

    const Run empty = run("generate --family phi_X --X \"\"");
    REQUIRE(empty.code == 0);
    for (const auto& v : json_io::cochain_from_json(json::parse(empty.out)).values()) CHECK(v.is_one());

    const Run q = run("generate --family qabc --n 3");
    REQUIRE(q.code == 0);
    CHECK(json_io::cochain_from_json(json::parse(q.out)).at({{1, 1, 1}}) == root_of_unity(3, 1));

    CHECK(run("generate --family h_a --a 0").code == 1);
    CHECK(run("generate --family g_b --b zeta3").code == 1);
    CHECK(run("generate --family phi_q --n 3 --q i").code == 1);
    CHECK(run("generate --family nonsense").code == 1);
    CHECK(run("generate").code == 1);
  }

  TEST_CASE("generate, classify and reconstruct round trip") {
    struct Case {
      std::string args;
      std::array<int, 3> eps;
      Cochain expected;
    };
    const std::vector<Case> cases = {
        {"--family phi_X --X sigma,rho", {-1, 1, -1}, phi_X(KleinSubset{KleinSubset::sigma | KleinSubset::rho})},
        {"--family phi_X --X sigma,tau", {-1, -1, 1}, phi_X(KleinSubset{KleinSubset::sigma | KleinSubset::tau})},
        {"--family phi_X --X tau", {1, -1, 1}, phi_X(KleinSubset{KleinSubset::tau})},
        {"--family g_b --b i", {1, 1, 1}, g_b(CycScalar::i())},
        {"--family g_b --b -1", {1, 1, 1}, g_b(-1)},
        {"--family h_a --a -1", {1, 1, 1}, h_a(-1)},
        {"--family h_a --a 2/3", {1, 1, 1}, h_a(Rational(2, 3))},
    };
    for (const auto& c : cases) {
      const Run gen = run("generate " + c.args);
      REQUIRE(gen.code == 0);
      const Cochain phi = json_io::cochain_from_json(json::parse(gen.out));
      CHECK(phi == c.expected);
      const Run cls = run("classify --input " + write_file("cli_roundtrip.json", json::parse(gen.out)));
      REQUIRE(cls.code == 0);
      const json j = json::parse(cls.out);
      CHECK(j["eps"].get<std::array<int, 3>>() == c.eps);
      const HappyParams hp = happy_params(happify(phi).phi);
      CHECK(reconstruct(hp) == phi);
    }
  }

  TEST_CASE("classify outcomes") {
    const Run st = run("classify --input " + write_file("cli_st.json", json_io::to_json(phi_X(KleinSubset{3}))));
    REQUIRE(st.code == 0);
    CHECK(json::parse(st.out)["eps"] == json::array({-1, -1, 1}));
    CHECK(json::parse(st.out)["b_class"] == "trivial");

    const Run hg = run("classify --input " + write_file("cli_hg.json", json_io::to_json(h_a(3) * g_b(9))));
    REQUIRE(hg.code == 0);
    CHECK(json::parse(hg.out)["eps"] == json::array({1, 1, 1}));
    CHECK(json::parse(hg.out)["b_class"] == "trivial");

    const Run gi = run("classify --input " + write_file("cli_gi.json", json_io::to_json(g_b(CycScalar::i()))));
    REQUIRE(gi.code == 0);
    CHECK(json::parse(gi.out)["b_class"] == "nontrivial");

    Cochain tampered = phi_X(KleinSubset{1});
    tampered.set({{sigma, tau, rho}}, CycScalar(1));
    const Run bad = run("classify --input " + write_file("cli_bad.json", json_io::to_json(tampered)));
    CHECK(bad.code == 1);
    CHECK(bad.out.find("failing_quadruple") != std::string::npos);

    const Run und = run("classify --input " + write_file("cli_und.json", json_io::to_json(g_b(CycScalar(1) + CycScalar::i()))));
    CHECK(und.code == 2);
    CHECK(run("classify --input does_not_exist.json").code == 1);
    CHECK(run("classify --input " + write_file("cli_c3.json", json_io::to_json(cyclic_qabc(3, root_of_unity(3, 1))))).code == 1);
  }

  TEST_CASE("braidings and hexagon checks") {
    const Run js = run("braidings --group klein --conductor 4 --format json");
    REQUIRE(js.code == 0);
    const json all = json::parse(js.out);
    CHECK(all.size() == 32);
    CHECK(all[8]["label"] == "E1");
    const Run table = run("braidings --group klein --conductor 4 --format table");
    REQUIRE(table.code == 0);
    CHECK(std::count(table.out.begin(), table.out.end(), '\n') == 32);
    CHECK(json::parse(run("braidings --group klein --conductor 2").out).size() == 8);
    CHECK(json::parse(run("braidings --group cyclic --n 2").out).size() == 4);

    const std::string phi = write_file("cli_phi.json", all[8]["phi"]), r = write_file("cli_r.json", all[8]["R"]);
    const Run ok = run("check-hexagon --phi " + phi + " --r " + r);
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["label"] == "E1");
    CHECK(run("check-hexagon --input " + write_file("cli_ac.json", all[20])).code == 0);
    const std::string odd = write_file("cli_odd.json", json_io::to_json(phi_X(KleinSubset{1})));
    const Run fail = run("check-hexagon --phi " + odd + " --r " + r);
    CHECK(fail.code == 1);
    CHECK(json::parse(fail.out)["hexagons"] == false);
    CHECK(run("check-hexagon --phi " + phi).code == 1);
  }

  TEST_CASE("cohomology") {
    const Run c = run("cohomology --group cyclic --n 3 --degree 3 --modulus 3");
    REQUIRE(c.code == 0);
    CHECK(json::parse(c.out)["factors"] == json::array({3}));
    const Run k = run("cohomology --group klein --modulus 4");
    REQUIRE(k.code == 0);
    CHECK(json::parse(k.out)["factors"] == json::array({2, 2, 2, 2}));
    CHECK(json::parse(k.out)["generators"].size() == 4);
  }

  TEST_CASE("hopf subcommands") {
    const Run re = run("hopf reassociator --n 3 --l 1");
    REQUIRE(re.code == 0);
    const GroupAlgebraTensor t = json_io::tensor_from_json(json::parse(re.out));
    CHECK(t == reassociator_transport(3, 1, root_of_unity(3, 1)));
    CHECK(run("hopf reassociator --n 2 --l 1 --form closed --check").code == 0);
    const Run closed = run("hopf reassociator --n 3 --l 1 --form closed --check");
    CHECK(closed.code == 1);
    CHECK(json::parse(closed.out)["harrison"]["pentagon"] == false);
    CHECK(run("hopf reassociator --n 3 --l 3").code == 1);

    const Run chk = run("hopf build --group klein --family prop54i --a -1 --check");
    CHECK(chk.code == 0);
    CHECK(chk.out.find("FAIL") == std::string::npos);
    const Run build = run("hopf build --group klein --family prop54ii --d i");
    REQUIRE(build.code == 0);
    const json b = json::parse(build.out);
    CHECK(b["product"].size() == 16);
    CHECK(b["delta"].size() == 4);
    CHECK(json_io::tensor_from_json(b["delta"][0]["delta"]) == klein_weak_hopf_g(CycScalar::i()).delta(e));
    CHECK(run("hopf build --group cyclic --family prop53 --n 5 --check").code == 0);
    CHECK(run("hopf build --group klein --family prop53 --n 3").code == 1);
    CHECK(run("hopf build --group cyclic --family prop53 --n 2 --q -1").code == 1);
    CHECK(run("hopf").code == 1);
  }

  TEST_CASE("verify-paper") {
    const Run r = run("verify-paper --only 8");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS c08.symmetric") != std::string::npos);
    const Run j = run("verify-paper --only c07.r. --format json");
    CHECK(j.code == 0);
    CHECK(json::parse(j.out)["claims"].size() == 32);
    CHECK(run("verify-paper --only c12").code == 1);
  }
}
