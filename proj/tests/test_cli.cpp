#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "wcurve/cli.hpp"

using namespace wcurve;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_command(args, out, err);
  return Run{status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("invariants in both formats") {
  Run text = run({"invariants", "--field", "rational", "--a", "0,0,1,-1,0"});
  CHECK(text.status == 0);
  CHECK(text.out ==
        "b2 = 0\nb4 = -2\nb6 = 1\nb8 = -1\ndelta = 37\nis_elliptic = true\n");

  Run js = run({"invariants", "--field", "q(5)", "--a", "0,0,0,1,1",
                "--format", "json"});
  CHECK(js.status == 0);
  CHECK(js.out ==
        "{\"b2\":\"0\",\"b4\":\"2\",\"b6\":\"4\",\"b8\":\"4\",\"delta\":\"4\","
        "\"is_elliptic\":true,\"schema\":1}\n");
}

TEST_CASE("point arithmetic commands") {
  Run sum = run({"add", "--field", "rational", "--a", "0,0,1,-1,0", "--p",
                 "0,0", "--q", "1,0"});
  CHECK(sum.status == 0);
  CHECK(sum.out == "-1,-1\n");

  Run dbl = run({"add", "--field", "rational", "--a", "0,0,1,-1,0", "--p",
                 "0,0", "--q", "0,0"});
  CHECK(dbl.out == "1,0\n");

  Run mul = run({"smul", "--field", "rational", "--a", "0,0,1,-1,0", "-n",
                 "5", "--p", "0,0"});
  CHECK(mul.status == 0);
  CHECK(mul.out == "1/4,-5/8\n");

  Run mneg = run({"smul", "--field", "rational", "--a", "0,0,1,-1,0", "-n",
                  "-2", "--p", "0,0"});
  CHECK(mneg.out == "1,-1\n");

  Run ng = run({"neg", "--field", "rational", "--a", "0,0,1,-1,0", "--p",
                "0,0", "--format", "json"});
  CHECK(ng.out == "{\"result\":\"0,-1\",\"schema\":1}\n");

  Run zero = run({"add", "--field", "rational", "--a", "0,0,1,-1,0", "--p",
                  "0,0", "--q", "0,-1"});
  CHECK(zero.out == "O\n");

  Run inf = run({"neg", "--field", "rational", "--a", "0,0,1,-1,0", "--p",
                 "O"});
  CHECK(inf.out == "O\n");
}

TEST_CASE("bracketed extension literals work in composite contexts") {
  Run r = run({"add", "--field", "q(2^2)", "--a", "0,0,[1,1],0,0", "--p",
               "[0,0],[0,0]", "--q", "[0,0],[0,0]"});
  CHECK(r.status == 0);
  Run g = run({"group", "--field", "q(2^2)", "--a", "0,0,[1,1],0,0",
               "--format", "json"});
  CHECK(g.status == 0);
  CHECK(g.out.find("\"order\":3") != std::string::npos);
}

TEST_CASE("points and group commands") {
  Run pts = run({"points", "--field", "q(5)", "--a", "0,0,0,1,1"});
  CHECK(pts.status == 0);
  CHECK(pts.out ==
        "count = 9\nO\n0,1\n0,4\n2,1\n2,4\n3,1\n3,4\n4,2\n4,3\n");

  Run pj = run({"points", "--field", "q(2)", "--a", "0,0,1,0,0", "--format",
                "json"});
  nlohmann::json j = nlohmann::json::parse(pj.out);
  CHECK(j["schema"] == 1);
  CHECK(j["count"] == 3);
  CHECK(j["points"] == nlohmann::json::array({"O", "0,0", "0,1"}));

  Run grp = run({"group", "--field", "q(2)", "--a", "0,0,1,0,0"});
  CHECK(grp.out == "order = 3\nn1 = 1\nn2 = 3\ncyclic = true\n");

  Run tor = run({"group", "--field", "q(5)", "--a", "0,0,0,-1,0", "--format",
                 "json"});
  CHECK(tor.out ==
        "{\"cyclic\":false,\"n1\":2,\"n2\":4,\"order\":8,\"schema\":1}\n");
}

TEST_CASE("change command transforms curve and point") {
  Run r = run({"change", "--field", "rational", "--a", "0,0,1,-1,0", "--u",
               "1", "--r", "1", "--p", "1,0"});
  CHECK(r.status == 0);
  CHECK(r.out == "a = 0,3,1,2,0\ndelta = 37\np = 0,0\n");

  // u = 2 rescales the discriminant by 2^-12
  Run half = run({"change", "--field", "rational", "--a", "0,0,1,-1,0",
                  "--u", "2", "--format", "json"});
  nlohmann::json j = nlohmann::json::parse(half.out);
  CHECK(j["delta"] == "37/4096");
  CHECK(j.count("p") == 0);
}

TEST_CASE("json output reparses under the documented grammar") {
  Run r = run({"change", "--field", "q(2^2)", "--a", "0,0,[1,1],0,0", "--u",
               "[0,1]", "--r", "[1,1]", "--s", "1", "--t", "0", "--format",
               "json"});
  REQUIRE(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  auto arr = j["a"];
  REQUIRE(arr.size() == 5);
  std::string joined;
  for (std::size_t i = 0; i < 5; ++i)
    joined += (i ? "," : "") + arr[i].get<std::string>();
  Run again = run({"invariants", "--field", "q(2^2)", "--a", joined,
                   "--format", "json"});
  CHECK(again.status == 0);
  nlohmann::json j2 = nlohmann::json::parse(again.out);
  CHECK(j2["delta"] == j["delta"]);
}

TEST_CASE("exit codes") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"add", "--field", "rational", "--a", "0,0,1,-1,0", "--p",
             "0,0"}).status == 2);  // missing --q
  CHECK(run({"invariants", "--field", "rational", "--a", "0,0,1"}).status ==
        2);  // short curve literal
  CHECK(run({"invariants", "--field", "q(6)", "--a", "0,0,0,0,0"}).status ==
        2);  // not a field
  CHECK(run({"invariants", "--field", "rational", "--a", "0,0,1,-1,zz"})
            .status == 2);
  CHECK(run({"add", "--field", "rational", "--a", "0,0,1,-1,0", "--p", "2,1",
             "--q", "0,0"}).status == 3);  // point off the curve
  CHECK(run({"points", "--field", "rational", "--a", "0,0,1,-1,0"}).status ==
        3);  // cannot enumerate an infinite group
  CHECK(run({"invariants", "--field", "rational", "--a", "0,0,1,-1,0",
             "--format", "yaml"}).status == 2);
  Run help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("invariants") != std::string::npos);
}

TEST_CASE("errors go to the error stream") {
  Run r = run({"add", "--field", "rational", "--a", "0,0,1,-1,0", "--p",
               "2,1", "--q", "0,0"});
  CHECK(r.out.empty());
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("verify runs every suite and reports") {
  Run r = run({"verify", "--trials", "10"});
  CHECK(r.status == 0);
  CHECK(r.out.find("result: pass") != std::string::npos);

  Run js = run({"verify", "--trials", "10", "--format", "json"});
  REQUIRE(js.status == 0);
  nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j["schema"] == 1);
  CHECK(j["result"] == "pass");
  REQUIRE(j["reports"].size() == 14);
  int exact = 0, randomized = 0, scans = 0;
  for (const auto& rep : j["reports"]) {
    std::string id = rep["id"].get<std::string>();
    std::string status = rep["status"].get<std::string>();
    if (id == "partial-x-decomposition") {
      CHECK(status == "holds_up_to_sign");
      CHECK(rep["note"] == "sign=-1");
    } else {
      CHECK(status == "holds");
    }
    if (id.rfind("group-law-", 0) == 0)
      ++scans;
    else if (id == "line-interpolation" ||
             id == "cubic-root-factorization" ||
             id == "cubic-derivative-sum")
      ++randomized;
    else
      ++exact;
  }
  CHECK(exact == 7);
  CHECK(randomized == 3);
  CHECK(scans == 4);

  // byte-identical reruns for a fixed seed
  Run again = run({"verify", "--trials", "10", "--format", "json"});
  CHECK(again.out == js.out);
  Run other = run({"verify", "--trials", "10", "--seed", "9", "--format",
                   "json"});
  CHECK(other.status == 0);
}
