#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "kleinvcy/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kleinvcy::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Outcome o = run(args);
  REQUIRE(o.code == 0);
  return json::parse(o.out);
}

}  // namespace

TEST_CASE("record shape") {
  const json j = run_json({"mul", "0", "0", "5", "7"});
  CHECK(j["command"] == "mul");
  CHECK(j["result"]["product"] == json::array({5, 7}));
  CHECK(j["inputs"]["g"] == json::array({0, 0}));
  CHECK(j.contains("provenance"));
}

TEST_CASE("negative and rational arguments") {
  CHECK(run_json({"mul", "-1", "1", "-2", "3"})["result"]["product"] == json::array({1, 4}));
  CHECK(run_json({"isotropy", "1/2", "0"})["result"]["isotropy"]["generator"] == json::array({4, 2}));
  CHECK(run_json({"isotropy", "inf", "1/4"})["result"]["isotropy"]["generator"] == json::array({0, 2}));
  CHECK(run_json({"act-line", "1", "1", "inf", "1/2"})["result"]["image"]["intercept"] == "1/2");
  CHECK(run_json({"isotropy", "2/4", "0"})["inputs"]["line"]["slope"] == "1/2");
}

TEST_CASE("big integers survive as strings") {
  const json j = run_json({"mul", "99999999999999999999", "0", "1", "0"});
  CHECK(j["result"]["product"][0] == "100000000000000000000");
}

TEST_CASE("text mode carries the same values") {
  const Outcome o = run({"mul", "0", "0", "5", "7"});
  CHECK(o.code == 0);
  CHECK(o.out.find("command: mul") != std::string::npos);
  CHECK(o.out.find("product: (5,7)") != std::string::npos);
  CHECK(o.out.find("provenance: ") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"mul", "1", "2", "3"}).code == 2);
  CHECK(run({"mul", "1", "2", "3", "q"}).code == 2);
  CHECK(run({"isotropy", "1/0", "1"}).code == 2);
  CHECK(run({}).code == 2);
  const Outcome trivial = run({"class", "0", "0"});
  CHECK(trivial.code == 1);
  CHECK(trivial.err.find("nontrivial") != std::string::npos);
  CHECK(run({"homology", "--circles", "9", "--method", "simplicial"}).code == 1);
  CHECK(run({"verify", "--suite", "bogus"}).code == 1);
}

TEST_CASE("homology methods agree within the cap") {
  for (const char* n : {"1", "2", "3"}) {
    CHECK(run_json({"homology", "--circles", n, "--method", "kunneth"})["result"] ==
          run_json({"homology", "--circles", n, "--method", "simplicial"})["result"]);
  }
}

TEST_CASE("verify emits per-suite reports") {
  const json j = run_json({"verify", "--suite", "isotropy", "--bound", "3", "--max-denominator", "2"});
  CHECK(j["result"]["isotropy"]["passed"] == true);
  CHECK(j["result"]["passed"] == true);
  CHECK(j["inputs"]["max_denominator"] == 2);
}

TEST_CASE("products and joins of named spaces") {
  const json p = run_json({"kunneth-product", "circle", "klein"});
  CHECK(p["result"]["homology"]["1"]["rank"] == 2);
  CHECK(run_json({"kunneth-join", "circles:2", "klein", "--method", "simplicial"})["result"] ==
        run_json({"kunneth-join", "circles:2", "klein"})["result"]);
  CHECK(run({"kunneth-product", "sphere", "klein"}).code == 2);
}

TEST_CASE("json and text agree for every positional command") {
  const std::vector<std::vector<std::string>> cases = {
      {"inv", "3", "1"},          {"pow", "3", "1", "2"},       {"conj", "1", "1", "2", "4"},
      {"contains", "3", "1", "0", "2"}, {"class", "3", "6"},     {"commensurator", "1", "2"},
      {"fixed-set", "3", "1"},    {"kn-act", "1", "1", "3"},    {"stabilizes", "1", "2", "2", "5"},
  };
  for (const auto& c : cases) {
    const Outcome text = run(c);
    std::vector<std::string> jc = c;
    jc.push_back("--json");
    const json j = json::parse(run(jc).out);
    REQUIRE(text.code == 0);
    for (const auto& [key, value] : j["result"].items()) {
      CHECK(text.out.find("  " + key + ": ") != std::string::npos);
    }
    CHECK(text.out.find("provenance: " + j["provenance"].get<std::string>()) != std::string::npos);
  }
}
