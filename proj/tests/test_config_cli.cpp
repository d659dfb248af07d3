#include <doctest.h>

#include <json.hpp>

#include "dwarith/run.hpp"

using namespace dwarith;
using nlohmann::json;

namespace {

const std::string kConfigDir = DWARITH_CONFIG_DIR;

json minimal_config() {
  return json::parse(R"({
    "modulus": 2,
    "gauge_group": {"builtin": "cyclic", "n": 2},
    "cocycle": {"builtin": "zero"},
    "locals": [
      {"name": "kp",
       "group": {"builtin": "product", "factors": [2, 2]},
       "inv": {"builtin": "commutator_pairing"},
       "orientation": 1}
    ]
  })");
}

}  // namespace

TEST_CASE("minimal config parses") {
  ModelConfig config = parse_config(minimal_config());
  CHECK(config.modulus == 2);
  CHECK(config.gauge->order == 2);
  CHECK(config.locals.size() == 1);
  CHECK(config.local_by_name("kp") != nullptr);
  CHECK(config.local_by_name("nope") == nullptr);
}

TEST_CASE("non-cocycle tables are rejected with the violating quadruple") {
  json doc = minimal_config();
  doc["cocycle"] = {{"entries", json::array({json::array({1, 1, 0, 1})})}};
  try {
    parse_config(doc);
    FAIL("expected NotACocycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACocycle);
    CHECK(std::string(e.what()).find("quadruple") != std::string::npos);
  }
}

TEST_CASE("dangling references are reported") {
  json doc = minimal_config();
  doc["globals"] = json::array(
      {{{"label", "X"},
        {"group", {{"builtin", "product"}, {"factors", json::array({2, 2})}}},
        {"attachments",
         json::array({{{"local", "ghost"},
                       {"iota_map", json::array({0, 1, 2, 3})}}})}}});
  try {
    parse_config(doc);
    FAIL("expected DanglingReference");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DanglingReference);
  }
}

TEST_CASE("schema errors carry the offending path") {
  json doc = minimal_config();
  doc.erase("modulus");
  try {
    parse_config(doc);
    FAIL("expected SchemaError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
    CHECK(std::string(e.what()).find("modulus") != std::string::npos);
  }

  json doc2 = minimal_config();
  doc2["locals"][0]["group"] = {{"builtin", "noSuchFamily"}};
  CHECK_THROWS_AS(parse_config(doc2), Error);
}

TEST_CASE("commands are deterministic byte-for-byte") {
  ModelConfig config = load_config_file(kConfigDir + "/trivial_z2.json");
  for (std::string command : {"validate", "homs", "lambda", "cs", "partition",
                              "hdim", "transport"}) {
    RunResult a = run_command(command, config);
    RunResult b = run_command(command, config);
    CHECK(a.text == b.text);
    CHECK(a.structured.dump() == b.structured.dump());
    CHECK(a.exit_code == 0);
  }
}

TEST_CASE("hdim on the trivial model: dimensions 2, 2 and 4") {
  ModelConfig config = load_config_file(kConfigDir + "/trivial_z2.json");
  RunResult result = run_command("hdim", config);
  const auto& report = result.structured["report"];
  REQUIRE(report.size() == 3);
  CHECK(report[0]["space"] == "p2a");
  CHECK(report[0]["dim"] == 2);
  CHECK(report[1]["space"] == "p2b");
  CHECK(report[1]["dim"] == 2);
  CHECK(report[2]["space"] == "XS");
  CHECK(report[2]["dim"] == 4);
}

TEST_CASE("partition on the trivial model carries the half values") {
  ModelConfig config = load_config_file(kConfigDir + "/trivial_z2.json");
  RunResult result = run_command("partition", config);
  const auto& entries =
      result.structured["report"]["globals"][0]["vector"]["entries"];
  REQUIRE(entries.size() == 4);
  int halves = 0, zeros = 0;
  for (const auto& row : entries) {
    if (row["value"]["den"] == 2) ++halves;
    if (row["value"]["den"] == 1) ++zeros;
  }
  CHECK(halves == 2);
  CHECK(zeros == 2);
}

TEST_CASE("glue command validates the gluing identity") {
  for (std::string name :
       {"glue_z4", "closed_z2", "closed_z3", "closed_k4_z2", "closed_z4_c"}) {
    ModelConfig config = load_config_file(kConfigDir + "/" + name + ".json");
    RunResult result = run_command("glue", config);
    CHECK(result.exit_code == 0);
    for (const auto& row : result.structured["report"])
      CHECK(row["equal"] == true);
  }
}

TEST_CASE("closed counts match the averaged representation counts") {
  // Trivial class: the closed invariant equals #Hom / #G.
  struct Expected {
    std::string file;
    std::vector<long long> coeffs_num;  // numerator coefficient at exponent 0
    long long den;
  };
  // Z/2 target: 2/2 = 1; Z/3: 1/2; K4: 4/2 = 2.
  for (const auto& [file, num, den] :
       {std::tuple{"closed_z2", 1LL, 1LL}, std::tuple{"closed_z3", 1LL, 2LL},
        std::tuple{"closed_k4_z2", 2LL, 1LL}}) {
    ModelConfig config =
        load_config_file(kConfigDir + "/" + std::string(file) + ".json");
    RunResult result = run_command("partition", config);
    const auto& closed = result.structured["report"]["closed"];
    REQUIRE(closed.size() >= 1);
    for (const auto& row : closed) {
      CHECK(row["value"]["coeffs"][0] == num);
      CHECK(row["value"]["den"] == den);
    }
  }
}

TEST_CASE("the S3 closed model averages ten homomorphisms over six elements") {
  ModelConfig config = load_config_file(kConfigDir + "/closed_k4_s3.json");
  RunResult homs = run_command("homs", config);
  CHECK(homs.structured["report"]["globals"][0]["count"] == 10);
  RunResult result = run_command("partition", config);
  const auto& closed = result.structured["report"]["closed"][0];
  CHECK(closed["value"]["coeffs"][0] == 5);
  CHECK(closed["value"]["den"] == 3);
}

TEST_CASE("validate rejects the engineered reciprocity violation") {
  ModelConfig config =
      load_config_file(kConfigDir + "/reciprocity_violation.json");
  RunResult result = run_command("validate", config);
  CHECK(result.exit_code == 1);
  bool reported = false;
  for (const auto& row : result.structured["report"]["globals"])
    for (const auto& check : row["checks"])
      if (check["check"].get<std::string>().find("reciprocity") !=
              std::string::npos &&
          check["passed"] == false)
        reported = true;
  CHECK(reported);
}

TEST_CASE("transport command verifies against fresh computations") {
  for (std::string name : {"trivial_z2", "klein_pair", "tame_z4"}) {
    ModelConfig config = load_config_file(kConfigDir + "/" + name + ".json");
    RunResult result = run_command("transport", config);
    CHECK(result.exit_code == 0);
  }
}

TEST_CASE("unknown commands are schema errors") {
  ModelConfig config = load_config_file(kConfigDir + "/trivial_z2.json");
  CHECK_THROWS_AS(run_command("fnord", config), Error);
}
