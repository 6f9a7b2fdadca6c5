#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = partcat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("text output") {
  auto gram = run({"gram", "--n", "1", "--det"});
  CHECK(gram.code == 0);
  CHECK(gram.out == "t^2\n");
  CHECK(run({"semisimple", "--t", "5/2"}).out == "semisimple: true\n");
  CHECK(run({"semisimple", "--t", "3"}).out == "semisimple: false\n");
  CHECK(run({"semisimple", "--t", "t"}).out == "semisimple: true\n");
  CHECK(run({"ppoly", "--lambda", "3,2"}).out == "(1/24)·t·(t-1)·(t-2)·(t-5)·(t-7)\n");
  CHECK(run({"xi", "--lambda", "2,1", "--r", "2"}).out == "(1/2)t^2 - (7/2)t + 3\n");
  auto omega = run({"omega", "--n", "1", "--r", "2", "--verify-at", "4"});
  CHECK(omega.out.find("matches the r-cycle action at d = 4: true") != std::string::npos);
  auto lift = run({"lift", "--idempotent", "s_2", "--t", "0"});
  CHECK(lift.out.find("(1) + (1,1)") != std::string::npos);
  auto zero = run({"verify-zeroblock", "--n-max", "2"});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("all relations hold: true") != std::string::npos);
  CHECK(run({"interp-rank", "--n", "1", "--m", "1", "--d", "1"}).out.rfind("rank = 1", 0) == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json output") {
  auto p = run_json({"ppoly", "--lambda", "3,2"});
  CHECK(p["factored"] == "(1/24)·t·(t-1)·(t-2)·(t-5)·(t-7)");
  CHECK(p["roots"] == nlohmann::json::array({0, 1, 2, 5, 7}));
  CHECK(p["coefficients"][5] == nlohmann::json::array({"1", "24"}));
  auto box = run_json({"tensor-box", "--lambda", "3,1"});
  CHECK(box.dump().find("[3,1]") != std::string::npos);
  auto blocks = run_json({"blocks", "--t", "3", "--max-size", "4"});
  CHECK_FALSE(blocks.empty());
  auto lift = run_json({"lift", "--idempotent", "young 2,1", "--t", "3"});
  CHECK_FALSE(lift.empty());
  // Repeated runs give byte-identical documents.
  for (auto args : std::vector<std::vector<std::string>>{{"--json", "blocks", "--t", "3", "--max-size", "5"},
                                                         {"--json", "omega", "--n", "2", "--r", "3"},
                                                         {"--json", "lift", "--idempotent", "id_2", "--t", "1"},
                                                         {"--json", "verify-zeroblock", "--n-max", "2"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::accept(a.out));
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"gram", "--n", "1", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"ppoly"}).code == 2);
  CHECK(run({"ppoly", "--lambda", "2,3"}).code == 2);
  CHECK(run({"semisimple", "--t", "x/y"}).code == 2);
  CHECK(run({"blocks", "--t", "3", "--max-size", "31"}).code == 1);
  CHECK(run({"gram", "--n", "9"}).code == 1);
  auto pole = run({"--json", "lift", "--idempotent", "prim 2", "--t", "1"});
  CHECK(pole.code == 1);
  CHECK(nlohmann::json::parse(pole.out)["error"]["code"] == "PoleAtPoint");
  CHECK_FALSE(pole.err.empty());
  auto not_idem = run({"lift", "--idempotent", "young 7", "--t", "1"});
  CHECK(not_idem.code == 1);
}
