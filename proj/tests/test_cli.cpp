#include <sstream>

#include "doctest.h"
#include "posrep/cli.hpp"
#include "posrep/error.hpp"
#include "posrep/families.hpp"
#include "posrep/json_io.hpp"
#include "posrep/representation.hpp"

using namespace posrep;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json parse(const Run& r) { return Json::parse(r.out); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::UnknownFamily;
}

std::vector<std::string> family_args(const std::string& family, std::optional<int> n) {
  std::vector<std::string> a = {"--family", family};
  if (n) {
    a.push_back("--n");
    a.push_back(std::to_string(*n));
  }
  return a;
}

}  // namespace

TEST_CASE("check reports failing pairs") {
  const auto r = run({"check", "--family", "pn", "--n", "4", "--alpha", "4", "--beta", "4"});
  CHECK(r.code == cli::kFails);
  const Json j = parse(r);
  CHECK(j["representable"] == false);
  bool pq = false;
  for (const auto& f : j["failures"]) pq = pq || f == Json::array({"p", "q"});
  CHECK(pq);

  CHECK(run({"check", "--family", "pn", "--n", "4"}).code == cli::kHolds);
  CHECK(run({"check", "--family", "d2poset", "--method", "enumerate"}).code == cli::kFails);
}

TEST_CASE("conditions on the D2bar fixture") {
  const auto r = run({"conditions", "--family", "d2poset"});
  CHECK(r.code == cli::kHolds);
  const Json j = parse(r);
  CHECK(j["d2bar"] == true);
  CHECK(j["lmd"] == false);
  CHECK(run({"conditions", "--family", "d2poset", "--only", "lmd"}).code == cli::kFails);
  CHECK(run({"conditions", "--family", "d2poset", "--only", "nope"}).code == cli::kUsageError);
}

TEST_CASE("generate piped into check") {
  const auto g = run({"generate", "--family", "boolean", "--n", "3"});
  REQUIRE(g.code == cli::kHolds);
  CHECK(run({"check", "--alpha", "ALL", "--beta", "ALL", "--stdin"}, g.out).code == cli::kHolds);
}

TEST_CASE("poset JSON round trip for every fixture") {
  for (const Poset& p : {express_poset(), d2poset(), prime_ideal_poset(), pn(5), m3(), n5(), chain(0)}) {
    const auto parsed = parse_poset(emit_json(to_json(p)));
    CHECK(parsed.poset == p);
    CHECK(parsed.closure_added == 0);
  }
}

TEST_CASE("representation JSON round trip") {
  const Poset e = express_poset();
  const Representation h = express_representation();
  const Representation back = representation_from_json(e, to_json(e, h));
  CHECK(back.ground == h.ground);
  CHECK(back.images == h.images);
  CHECK(back.signature == h.signature);
}

TEST_CASE("schema errors") {
  CHECK(code_of([] { parse_poset(R"({"covers": []})"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_poset(R"({"elements": ["a"]})"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_poset(R"({"elements": ["a"], "covers": [], "order": []})"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_poset(R"({"elements": ["a"], "covers": [["a"]]})"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_poset(R"({"elements": ["a"], "covers": [["a", "z"]]})"); }) == ErrorCode::UnknownLabel);
  CHECK(code_of([] { parse_poset(R"({"elements": ["a", "b"], "covers": [["a","b"],["b","a"]]})"); }) ==
        ErrorCode::CycleDetected);

  const auto missing = run({"check", "--stdin"}, R"({"covers": []})");
  CHECK(missing.code == cli::kUsageError);
  CHECK(missing.err.find("/elements") != std::string::npos);

  const auto broken = run({"check", "--stdin"}, R"({"elements": [)");
  CHECK(broken.code == cli::kUsageError);
  CHECK(broken.err.find("byte") != std::string::npos);

  const auto unknown = run({"check", "--stdin"}, R"({"elements": ["a"], "covers": [["a","z"]]})");
  CHECK(unknown.code == cli::kUsageError);
  CHECK(unknown.err.find("/covers/0/1") != std::string::npos);
}

TEST_CASE("order-mode input is closed and noted") {
  const auto r = run({"check", "--stdin"}, R"({"elements": ["a","b","c"], "order": [["a","b"],["b","c"]]})");
  CHECK(r.code == cli::kHolds);
  CHECK(parse(r)["input"]["note"].get<std::string>().find("1 pair added") != std::string::npos);
}

TEST_CASE("signature aliases are echoed canonically") {
  const auto r = run({"check", "--family", "chain", "--n", "3", "--alpha", "ω", "--beta", "omega"});
  CHECK(r.code == cli::kHolds);
  const Json j = parse(r);
  CHECK(j["signature"]["alpha"] == "ALL");
  CHECK(j["signature"]["beta"] == "ALL");
  CHECK(run({"check", "--family", "chain", "--n", "3", "--alpha", "1"}).code == cli::kUsageError);
}

TEST_CASE("every fixture claim is checkable by one invocation") {
  const std::vector<std::pair<std::string, std::optional<int>>> fixtures = {
      {"express", std::nullopt}, {"d2poset", std::nullopt}, {"prime_ideal", std::nullopt},
      {"pn", 4},                 {"pn", 5},                 {"pn", 6}};
  int claims = 0;
  for (const auto& [family, n] : fixtures) {
    for (const Claim& c : fixture_expectations(family, n)) {
      std::vector<std::string> args;
      const auto fam = family_args(family, n);
      switch (c.kind) {
        case Claim::Kind::Representable:
          args = {"check", "--alpha", c.signature.alpha.to_string(), "--beta", c.signature.beta.to_string()};
          break;
        case Claim::Kind::Lmd: args = {"conditions", "--only", "lmd"}; break;
        case Claim::Kind::D2bar: args = {"conditions", "--only", "d2bar"}; break;
        case Claim::Kind::CompletelyRepresentable: args = {"conditions", "--only", "completely_representable"}; break;
        case Claim::Kind::ExtensionFails:
          args = {"extend", "--forbidden", c.forbidden, "--from"};
          args.insert(args.end(), c.seed.begin(), c.seed.end());
          break;
      }
      args.insert(args.begin() + 1, fam.begin(), fam.end());
      const int want = c.kind == Claim::Kind::ExtensionFails ? (c.expected ? cli::kFails : cli::kHolds)
                                                             : (c.expected ? cli::kHolds : cli::kFails);
      CHECK_MESSAGE(run(args).code == want, family << ": " << c.describe());
      ++claims;
    }
  }
  CHECK(claims > 10);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"spectrum", "--family", "random", "--n", "7", "--seed", "5", "--prob", "0.4"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> rep = {"represent", "--family", "pn", "--n", "4", "--alpha", "3", "--beta", "3"};
  CHECK(run(rep).out == run(rep).out);
}

TEST_CASE("represent output feeds verify") {
  const auto r = run({"represent", "--family", "express", "--alpha", "ALL", "--beta", "ALL"});
  REQUIRE(r.code == cli::kHolds);
  const Poset e = express_poset();
  const Representation h = representation_from_json(e, parse(r)["representation"]);
  CHECK(verify_representation(e, h).empty());
  CHECK(run({"verify", "--family", "express", "--fixture-rep"}).code == cli::kHolds);
  CHECK(run({"verify", "--family", "prime_ideal", "--fixture-rep"}).code == cli::kHolds);
  CHECK(run({"represent", "--family", "d2poset"}).code == cli::kFails);
}

TEST_CASE("filters, extend and text output") {
  const auto f = run({"filters", "--family", "chain", "--n", "2"});
  CHECK(f.code == cli::kHolds);
  CHECK(parse(f)["count"] == 3);
  const auto set = run({"filters", "--family", "d2poset", "--set", "a"});
  CHECK(set.code == cli::kFails);
  CHECK(parse(set)["violation"]["kind"] == "not-up-closed");
  const auto t = run({"filters", "--family", "chain", "--n", "2", "--text"});
  CHECK(t.out.find("count: 3") != std::string::npos);
  CHECK(run({"extend", "--family", "chain", "--n", "3", "--from", "c1"}).code == cli::kHolds);
}

TEST_CASE("search verb") {
  const auto r = run({"search", "--holds", "lmd", "--fails", "d2bar", "--max-n", "4"});
  CHECK(r.code == cli::kFails);
  CHECK(parse(r)["found"] == false);
  CHECK(r.err.find("n=4") != std::string::npos);
  const auto found = run({"search", "--holds", "d2bar", "--fails", "representable(3,3)", "--max-n", "7"});
  CHECK(found.code == cli::kHolds);
  CHECK(run({"search", "--probe", "lmd-all-binary", "--max-n", "4"}).code == cli::kFails);
  CHECK(run({"search", "--holds", "lmd", "--fails", "d2bar", "--max-n", "9"}).code == cli::kUsageError);
}

TEST_CASE("exit codes for usage and budget errors") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"bogus"}).code == cli::kUsageError);
  CHECK(run({"check", "--family", "nope"}).code == cli::kUsageError);
  CHECK(run({"check", "--family", "pn", "--n", "2"}).code == cli::kUsageError);
  CHECK(run({"filters", "--family", "antichain", "--n", "12", "--budget", "10"}).code == cli::kBudgetExceeded);
  CHECK(run({"search", "--holds", "lmd", "--fails", "lmd", "--max-n", "6", "--budget", "5"}).code ==
        cli::kBudgetExceeded);
}
