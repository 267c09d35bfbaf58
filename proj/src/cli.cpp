#include "posrep/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "posrep/conditions.hpp"
#include "posrep/error.hpp"
#include "posrep/families.hpp"
#include "posrep/json_io.hpp"
#include "posrep/representation.hpp"
#include "posrep/search.hpp"

namespace posrep::cli {

namespace {

struct InputOptions {
  std::string file;
  bool from_stdin = false;
  std::string family;
  std::optional<int> n;
  double prob = 0.5;
  std::optional<std::uint64_t> seed;
};

struct CommonOptions {
  InputOptions input;
  std::string alpha = "3";
  std::string beta = "3";
  bool text = false;
  std::uint64_t budget = kDefaultBudget;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--file", in.file, "poset JSON file");
  cmd->add_flag("--stdin", in.from_stdin, "read poset JSON from standard input");
  cmd->add_option("--family", in.family, "built-in family: pn, express, d2poset, prime_ideal, boolean, chain, "
                                         "antichain, m3, n5, random");
  cmd->add_option("--n", in.n, "family size parameter");
  cmd->add_option("--prob", in.prob, "edge probability (random family)");
  cmd->add_option("--seed", in.seed, "seed (random family)");
}

void add_common(CLI::App* cmd, CommonOptions& o, bool signature) {
  add_input(cmd, o.input);
  if (signature) {
    cmd->add_option("--alpha", o.alpha, "meet arity bound: integer >= 2 or ALL (omega, C accepted)");
    cmd->add_option("--beta", o.beta, "join arity bound: integer >= 2 or ALL (omega, C accepted)");
  }
  cmd->add_flag("--text", o.text, "human-readable summary instead of JSON");
  cmd->add_option("--budget", o.budget, "search node / up-set budget (env POSREP_BUDGET overrides the default)");
}

FamilySpec family_spec(const InputOptions& in) {
  FamilySpec spec{in.family, {}, in.seed, in.prob};
  if (in.n) spec.parameters["n"] = *in.n;
  return spec;
}

struct LoadedPoset {
  Poset poset;
  Json source;
};

LoadedPoset load(const InputOptions& in, std::istream& stdin_stream) {
  const int sources = (!in.file.empty()) + (in.from_stdin ? 1 : 0) + (!in.family.empty());
  if (sources != 1) throw Error(ErrorCode::InvalidParameter, "give exactly one of --file, --stdin, --family");
  if (!in.family.empty()) {
    Json src = {{"family", in.family}};
    if (in.n) src["n"] = *in.n;
    if (in.seed) src["seed"] = *in.seed;
    return {generate(family_spec(in)), src};
  }
  std::string text;
  if (in.from_stdin) {
    text.assign(std::istreambuf_iterator<char>(stdin_stream), {});
  } else {
    std::ifstream f(in.file);
    if (!f) throw Error(ErrorCode::InvalidParameter, "cannot read " + in.file);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  ParsedPoset parsed = parse_poset(text);
  Json src = {{"source", in.from_stdin ? std::string("stdin") : in.file}};
  if (parsed.closure_added > 0) {
    src["note"] = "order relation closed transitively; " + std::to_string(parsed.closure_added) + (parsed.closure_added == 1 ? " pair added" : " pairs added");
  }
  return {std::move(parsed.poset), src};
}

Signature signature_of(const CommonOptions& o, const Poset& p) {
  return Signature{Arity::parse(o.alpha), Arity::parse(o.beta)}.canonical(p.size());
}

Index element(const Poset& p, const std::string& label) {
  auto i = p.find(label);
  if (!i) throw Error(ErrorCode::UnknownElement, "'" + label + "'");
  return *i;
}

ElementSet elements(const Poset& p, const std::vector<std::string>& labels) {
  ElementSet s;
  for (const auto& l : labels) s.insert(element(p, l));
  return s;
}

void emit(std::ostream& out, const Json& report, bool text) { out << (text ? emit_text(report) : emit_json(report)); }

Json filter_check_json(const Poset& p, ElementSet s, Signature sig) {
  const auto violation = is_filter(p, s, sig);
  Json j = {{"set", element_set_json(p, s)}, {"signature", signature_json(sig)}, {"is_filter", !violation}};
  if (violation) j["violation"] = to_json(p, *violation);
  return j;
}

Json evidence(const Poset& p) {
  return {{"lmd", to_json(p, check_lmd(p))},
          {"d2bar", to_json(p, check_d2bar(p))},
          {"lattice", to_json(p, lattice_profile(p))},
          {"spectrum", to_json(spectrum(p))}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide, construct and verify (alpha,beta)-representations of finite posets", "posrep"};
  app.require_subcommand(1);

  CommonOptions o;
  if (const char* env = std::getenv("POSREP_BUDGET")) {
    try {
      o.budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "ignoring malformed POSREP_BUDGET\n";
    }
  }

  std::string method = "search";
  auto* check = app.add_subcommand("check", "decide representability at a signature");
  add_common(check, o, true);
  check->add_option("--method", method, "search (per pair) or enumerate (all filters)")
      ->check(CLI::IsMember({"search", "enumerate"}));

  auto* represent = app.add_subcommand("represent", "construct the canonical field-of-sets representation");
  add_common(represent, o, true);

  std::string rep_file;
  bool fixture_rep = false;
  auto* verify = app.add_subcommand("verify", "verify a representation and audit its point filters");
  add_common(verify, o, false);
  verify->add_option("--rep", rep_file, "representation JSON file");
  verify->add_flag("--fixture-rep", fixture_rep, "use the built-in representation of the express or prime_ideal fixture");

  auto* spec_cmd = app.add_subcommand("spectrum", "representability at every signature");
  add_common(spec_cmd, o, false);

  std::string policy = "all";
  std::vector<std::string> set_labels;
  bool set_given = false;
  auto* filters = app.add_subcommand("filters", "enumerate filters, or check one set with --set");
  add_common(filters, o, true);
  filters->add_option("--policy", policy, "all or canonical")->check(CLI::IsMember({"all", "canonical"}));
  auto* set_opt = filters->add_option("--set", set_labels, "labels of the set to check");
  set_opt->allow_extra_args(true);

  std::vector<std::string> seed_labels;
  std::string forbidden;
  auto* extend = app.add_subcommand("extend", "extend a seed to a filter avoiding an element");
  add_common(extend, o, true);
  extend->add_option("--from", seed_labels, "seed labels")->required()->allow_extra_args(true);
  extend->add_option("--forbidden", forbidden, "label that must stay outside");

  std::string only;
  auto* conditions = app.add_subcommand("conditions", "LMD, D2bar, lattice profile, complete representability");
  add_common(conditions, o, false);
  conditions->add_option("--only", only, "exit status reflects this condition")
      ->check(CLI::IsMember({"lmd", "d2bar", "is_lattice", "is_distributive", "completely_representable"}));

  bool expectations = false;
  auto* gen = app.add_subcommand("generate", "emit a family member as poset JSON");
  add_input(gen, o.input);
  gen->add_flag("--expectations", expectations, "also emit the recorded claims for the named fixtures");
  gen->add_flag("--text", o.text, "human-readable summary instead of JSON");

  std::string holds_text, fails_text, probe;
  int max_n = kDefaultEnumerationCap;
  int cap = kDefaultEnumerationCap;
  std::uint64_t search_budget = 1'000'000;
  auto* search = app.add_subcommand("search", "look for the smallest poset satisfying one predicate but not another");
  search->add_option("--holds", holds_text, "predicate that must hold");
  search->add_option("--fails", fails_text, "predicate that must fail");
  search->add_option("--probe", probe, "named preset: lmd-all-binary, d2bar-ternary, ternary-not-quaternary");
  search->add_option("--max-n", max_n, "largest poset size to enumerate");
  search->add_option("--cap", cap, "enumeration size cap");
  search->add_option("--budget", search_budget, "maximum posets to evaluate");
  search->add_flag("--text", o.text, "human-readable summary instead of JSON");

  std::vector<std::string> argv_store{"posrep"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "posrep: " << e.what() << "\n";
    return kUsageError;
  }
  set_given = set_opt->count() > 0;

  try {
    if (*gen) {
      const Poset p = generate(family_spec(o.input));
      Json report = to_json(p);
      if (expectations) {
        Json claims = Json::array();
        for (const auto& c : fixture_expectations(o.input.family, o.input.n)) claims.push_back(to_json(c));
        report = {{"poset", report}, {"expectations", claims}};
      }
      emit(out, report, o.text);
      return kHolds;
    }

    if (*search) {
      if (!probe.empty()) {
        bool known = false;
        for (const auto& pr : probe_presets()) {
          if (pr.name == probe) {
            holds_text = pr.holds;
            fails_text = pr.fails;
            known = true;
          }
        }
        if (!known) throw Error(ErrorCode::InvalidParameter, "unknown probe '" + probe + "'");
      }
      if (holds_text.empty() || fails_text.empty()) {
        throw Error(ErrorCode::InvalidParameter, "search needs --holds and --fails (or --probe)");
      }
      const Predicate holds = Predicate::parse(holds_text);
      const Predicate fails = Predicate::parse(fails_text);
      const auto outcome = find_counterexample(holds, fails, max_n, search_budget, cap,
                                               [&](const std::string& line) { err << line << "\n"; });
      Json report = {{"holds", holds.text()},
                     {"fails", fails.text()},
                     {"max_n", max_n},
                     {"evaluated", outcome.progress.evaluated},
                     {"found", outcome.counterexample.has_value()}};
      if (outcome.counterexample) {
        const Poset& p = *outcome.counterexample;
        report["counterexample"] = to_json(p);
        Json ev = evidence(p);
        ev["holds_evaluates"] = holds.evaluate(p);
        ev["fails_evaluates"] = fails.evaluate(p);
        report["evidence"] = ev;
      } else {
        report["result"] = "no counterexample up to n = " + std::to_string(outcome.progress.completed_size);
      }
      emit(out, report, o.text);
      return outcome.counterexample ? kHolds : kFails;
    }

    const LoadedPoset loaded = load(o.input, in);
    const Poset& p = loaded.poset;
    Json report;
    int code = kHolds;

    if (*check) {
      const Signature sig = signature_of(o, p);
      const DecideOptions opts{method == "enumerate" ? DecisionMethod::FullEnumeration : DecisionMethod::PerPairSearch,
                               o.budget};
      const auto r = decide_representable(p, sig, opts);
      report = to_json(p, r);
      code = r.representable ? kHolds : kFails;
    } else if (*represent) {
      const Signature sig = signature_of(o, p);
      const auto h = canonical_representation(p, sig, o.budget);
      report = {{"signature", signature_json(sig)}, {"representable", h.has_value()}};
      if (h) {
        report["representation"] = to_json(p, *h);
      } else {
        const auto r = decide_representable(p, sig, {DecisionMethod::PerPairSearch, o.budget});
        report["failures"] = to_json(p, r).at("failures");
      }
      code = h ? kHolds : kFails;
    } else if (*verify) {
      Representation h;
      if (fixture_rep) {
        if (o.input.family == "express") {
          h = express_representation();
        } else if (o.input.family == "prime_ideal") {
          h = prime_ideal_identity_representation();
        } else {
          throw Error(ErrorCode::InvalidParameter, "--fixture-rep needs --family express or prime_ideal");
        }
      } else {
        std::ifstream f(rep_file);
        if (rep_file.empty() || !f) throw Error(ErrorCode::InvalidParameter, "verify needs --rep FILE or --fixture-rep");
        Json j;
        try {
          j = Json::parse(f);
        } catch (const Json::parse_error& e) {
          throw Error(ErrorCode::SchemaError, "malformed JSON at byte " + std::to_string(e.byte));
        }
        // Accept the bare object or a full `represent` report.
        if (j.is_object() && j.contains("representation") && j["representation"].is_object()) j = j["representation"];
        h = representation_from_json(p, j);
      }
      const auto violations = verify_representation(p, h);
      Json vs = Json::array();
      for (const auto& v : violations) vs.push_back(to_json(p, v));
      report = {{"ok", violations.empty()}, {"violations", vs}, {"signature", signature_json(h.signature)}};
      if (violations.empty()) {
        Json pf = Json::array();
        bool all_filters = true;
        for (const auto& f : point_filters(p, h)) {
          Json entry = {{"point", h.ground[f.point]},
                        {"members", element_set_json(p, f.members)},
                        {"is_filter", !f.violation}};
          if (f.violation) entry["violation"] = to_json(p, *f.violation);
          all_filters = all_filters && !f.violation;
          pf.push_back(entry);
        }
        report["point_filters"] = pf;
        report["point_filters_ok"] = all_filters;
        code = all_filters ? kHolds : kFails;
      } else {
        code = kFails;
      }
    } else if (*spec_cmd) {
      report = to_json(spectrum(p, o.budget));
    } else if (*filters) {
      const Signature sig = signature_of(o, p);
      if (set_given) {
        report = filter_check_json(p, elements(p, set_labels), sig);
        code = report.at("is_filter").get<bool>() ? kHolds : kFails;
      } else {
        const auto fs = enumerate_filters(p, sig, policy == "all" ? FilterPolicy::All : FilterPolicy::Canonical,
                                          o.budget);
        Json list = Json::array();
        for (const auto& f : fs) list.push_back(element_set_json(p, f.members));
        report = {{"signature", signature_json(sig)}, {"policy", policy}, {"count", fs.size()}, {"filters", list}};
      }
    } else if (*extend) {
      const Signature sig = signature_of(o, p);
      std::optional<Index> forb;
      if (!forbidden.empty()) forb = element(p, forbidden);
      const auto f = extend_to_filter(p, elements(p, seed_labels), forb, sig, o.budget);
      report = {{"signature", signature_json(sig)},
                {"seed", seed_labels},
                {"forbidden", forbidden.empty() ? Json(nullptr) : Json(forbidden)},
                {"found", f.has_value()}};
      if (f) report["filter"] = element_set_json(p, f->members);
      code = f ? kHolds : kFails;
    } else if (*conditions) {
      const auto lmd = check_lmd(p);
      const auto d2 = check_d2bar(p);
      const auto profile = lattice_profile(p);
      const auto complete = completely_representable(p, o.budget);
      report = {{"lmd", lmd.holds},
                {"d2bar", d2.holds},
                {"is_lattice", profile.is_lattice},
                {"is_distributive", profile.is_lattice && profile.is_distributive},
                {"completely_representable", complete.representable},
                {"details",
                 {{"lmd", to_json(p, lmd)},
                  {"d2bar", to_json(p, d2)},
                  {"lattice", to_json(p, profile)},
                  {"completely_representable", to_json(p, complete)}}}};
      if (!only.empty()) code = report.at(only).get<bool>() ? kHolds : kFails;
    }

    report["input"] = loaded.source;
    emit(out, report, o.text);
    return code;
  } catch (const Error& e) {
    err << "posrep: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kBudgetExceeded : kUsageError;
  } catch (const std::exception& e) {
    err << "posrep: internal error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace posrep::cli
