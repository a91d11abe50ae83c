#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsnsim/config.hpp"

using namespace wsnsim;

namespace {

bool same_config(const SimConfig& a, const SimConfig& b) {
  return a.n_nodes == b.n_nodes && a.field_side == b.field_side &&
         a.bs_x == b.bs_x && a.bs_y == b.bs_y && a.strategy == b.strategy &&
         a.seed == b.seed && a.max_rounds == b.max_rounds &&
         a.radio.e_elec == b.radio.e_elec && a.radio.eps_fs == b.radio.eps_fs &&
         a.radio.eps_mp == b.radio.eps_mp && a.radio.e_da == b.radio.e_da &&
         a.radio.packet_bits == b.radio.packet_bits && a.het.m == b.het.m &&
         a.het.m0 == b.het.m0 && a.het.m1 == b.het.m1 && a.het.a == b.het.a &&
         a.het.b == b.het.b && a.het.u == b.het.u && a.het.e0 == b.het.e0 &&
         a.het.p_opt == b.het.p_opt;
}

}  // namespace

TEST_CASE("empty text yields the documented defaults") {
  const SimConfig c = parse_config("", {});
  CHECK(same_config(c, default_config()));
  CHECK(c.n_nodes == 100);
  CHECK(c.field_side == 100.0);
  CHECK(c.bs_x == 50.0);
  CHECK(c.bs_y == 50.0);
  CHECK(c.strategy == Strategy::BEENISH);
  CHECK(c.seed == 1);
  CHECK(c.max_rounds == 20000);
  CHECK(c.radio.e_elec == 50e-9);
  CHECK(c.radio.eps_fs == 10e-12);
  CHECK(c.radio.eps_mp == 1.3e-15);
  CHECK(c.radio.e_da == 5e-9);
  CHECK(c.radio.packet_bits == 4000);
  CHECK(c.het.m == 0.5);
  CHECK(c.het.m0 == 0.3);
  CHECK(c.het.m1 == 0.2);
  CHECK(c.het.a == 1.5);
  CHECK(c.het.b == 2.0);
  CHECK(c.het.u == 2.5);
  CHECK(c.het.e0 == 0.5);
  CHECK(c.het.p_opt == 0.1);
}

TEST_CASE("comments, blanks and spacing are tolerated") {
  const std::string text =
      "# full-line comment\n"
      "\n"
      "  sim.n_nodes = 64   # trailing comment\n"
      "sim.strategy=DEEC\n"
      "\thet.m = 0.25\n";
  const SimConfig c = parse_config(text, {});
  CHECK(c.n_nodes == 64);
  CHECK(c.strategy == Strategy::DEEC);
  CHECK(c.het.m == 0.25);
}

TEST_CASE("later lines and overrides win") {
  const std::string text =
      "sim.n_nodes=10\n"
      "sim.n_nodes=20\n";
  CHECK(parse_config(text, {}).n_nodes == 20);
  CHECK(parse_config(text, {"sim.n_nodes=30"}).n_nodes == 30);
  CHECK(parse_config(text, {"sim.n_nodes=30", "sim.n_nodes=40"}).n_nodes == 40);
}

TEST_CASE("overrides can flatten the energy mix") {
  const SimConfig c = parse_config("", {"het.m=0", "sim.strategy=LEACH"});
  CHECK(c.het.m == 0.0);
  CHECK(c.strategy == Strategy::LEACH);
}

TEST_CASE("the sink follows the field centre unless pinned") {
  CHECK(parse_config("sim.field_side=300\n", {}).bs_x == 150.0);
  CHECK(parse_config("sim.field_side=300\n", {}).bs_y == 150.0);

  // field resized after the sink line: still the final centre
  const SimConfig late = parse_config("sim.field_side=300\n", {"sim.field_side=80"});
  CHECK(late.bs_x == 40.0);

  const SimConfig pinned =
      parse_config("sim.bs_x=10\nsim.field_side=300\n", {});
  CHECK(pinned.bs_x == 10.0);
  CHECK(pinned.bs_y == 150.0);  // only the pinned coordinate sticks
}

TEST_CASE("unknown keys are rejected with the full key list") {
  try {
    parse_config("radio.bandwidth=5\n", {});
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("config line 1") != std::string::npos);
    CHECK(msg.find("unknown key 'radio.bandwidth'") != std::string::npos);
    CHECK(msg.find("valid keys:") != std::string::npos);
    CHECK(msg.find("sim.n_nodes") != std::string::npos);
    CHECK(msg.find("het.p_opt") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("", {"nope=1"}), std::invalid_argument);
}

TEST_CASE("malformed lines name their location") {
  CHECK_THROWS_WITH_AS(parse_config("sim.n_nodes\n", {}),
                       "config line 1: expected key=value, got 'sim.n_nodes'",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config("=5\n", {}), "config line 1: empty key",
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_config("", {"justakey"}), std::invalid_argument);
}

TEST_CASE("numeric junk is rejected per key") {
  CHECK_THROWS_AS(parse_config("sim.n_nodes=abc\n", {}), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("sim.n_nodes=12x\n", {}), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("sim.n_nodes=3000000000\n", {}),
                  std::invalid_argument);  // beyond int range
  CHECK_THROWS_AS(parse_config("het.m=0.5x\n", {}), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("radio.e_elec=\n", {}), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("sim.seed=-5\n", {}), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("sim.seed=+5\n", {}), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("sim.seed=5.5\n", {}), std::invalid_argument);

  try {
    parse_config("sim.seed=-5\n", {});
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("unsigned") != std::string::npos);
  }
}

TEST_CASE("strategy names are strict") {
  CHECK_THROWS_WITH_AS(
      parse_config("sim.strategy=deec\n", {}),
      "sim.strategy: unknown value 'deec' (valid: LEACH, DEEC, EDEEC, BEENISH)",
      std::invalid_argument);
}

TEST_CASE("semantic violations surface through parsing") {
  try {
    parse_config("het.m=1.5\n", {});
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()) == "het.m: fraction out of [0,1]");
  }
  CHECK_THROWS_AS(parse_config("sim.n_nodes=0\n", {}), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("radio.eps_mp=0\n", {}), std::invalid_argument);
}

TEST_CASE("the seed accepts the full unsigned range") {
  CHECK(parse_config("sim.seed=18446744073709551615\n", {}).seed ==
        18446744073709551615ull);
  CHECK_THROWS_AS(parse_config("sim.seed=18446744073709551616\n", {}),
                  std::invalid_argument);
}

TEST_CASE("missing files are reported by path") {
  try {
    load_config("/no/such/dir/app.cfg", {});
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("/no/such/dir/app.cfg") != std::string::npos);
    CHECK(msg.find("cannot read") != std::string::npos);
  }
}

TEST_CASE("files on disk parse like inline text") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "wsnsim_config_test.cfg";
  {
    std::ofstream out(path);
    out << "# scenario\nsim.n_nodes=42\nhet.e0=0.25\n";
  }
  const SimConfig c = load_config(path.string(), {"sim.seed=9"});
  CHECK(c.n_nodes == 42);
  CHECK(c.het.e0 == 0.25);
  CHECK(c.seed == 9);
  std::filesystem::remove(path);
}

TEST_CASE("echo round-trips through the parser") {
  SimConfig original = default_config();
  original.n_nodes = 73;
  original.field_side = 250.0;
  original.strategy = Strategy::EDEEC;
  original.seed = 31337;
  original.het.m = 1.0 / 3.0;  // needs the full shortest representation
  original.radio.eps_mp = 1.7e-15;
  original.bs_x = original.field_side / 2.0;
  original.bs_y = original.field_side / 2.0;

  std::string text;
  for (const auto& [key, value] : config_echo(original)) {
    text += key + "=" + value + "\n";
  }
  const SimConfig parsed = parse_config(text, {});
  CHECK(same_config(parsed, original));

  const auto keys = config_keys();
  const auto echo = config_echo(original);
  REQUIRE(echo.size() == keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) CHECK(echo[i].first == keys[i]);
}
