#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "latticeforge/relation.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = latticeforge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("sub --count") {
  CHECK(run({"sub", "--n", "2", "--count"}).out == "28\n");
  auto a = latticeforge::make_jn(3);
  auto r = run({"sub", "--n", "3", "--count", "--threads", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == std::to_string(latticeforge::enumerate_sub(a, a).size()) + "\n");
}

TEST_CASE("verbs") {
  auto f = run({"free", "--n", "1", "--route", "both"});
  CHECK(f.code == 0);
  CHECK(f.out == "single=266 multi=266 agree=true\n");
  auto c = run({"con", "--n", "4", "--shape"});
  CHECK(c.code == 0);
  CHECK(c.out == "2^4 (+) 1: ok\n");
  CHECK(run({"algebra", "--n", "2"}).code == 0);
  CHECK(run({"mi", "--n", "2", "--count"}).out == "8\n");
  CHECK(run({"homs", "--n", "1", "--from", "J", "--to", "M0", "--count"}).out == "1\n");
  CHECK(run({"dual", "--n", "2", "--of", "S_2,1"}).code == 0);
  CHECK(run({"dual", "--n", "2", "--route", "multi"}).code == 0);
  CHECK(run({"optimal", "--n", "2"}).code == 0);
  CHECK(run({"entail", "--n", "3", "--i", "0"}).code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"sub", "--n", "7", "--count"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"algebra", "--n", "2", "--of", "Q"}).code == 2);
  CHECK(run({"reproduce", "--only", "nothing"}).code == 2);
  CHECK(run({"entail", "--n", "3", "--i", "9"}).code == 2);
}

TEST_CASE("--json output parses") {
  auto s = run({"sub", "--n", "1", "--json"});
  REQUIRE(s.code == 0);
  auto j = nlohmann::json::parse(s.out);
  CHECK(j.dump().find("pairs") != std::string::npos);
  auto a = run({"algebra", "--n", "1", "--json"});
  CHECK(nlohmann::json::parse(a.out)["carrier"] == 6);
  auto o = run({"optimal", "--n", "1", "--json"});
  auto arr = nlohmann::json::parse(o.out);
  REQUIRE(arr.is_array());
  for (const auto& rec : arr) CHECK(rec["verdict"] == "optimal-necessary");
}
