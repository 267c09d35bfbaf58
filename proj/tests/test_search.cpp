#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "posrep/conditions.hpp"
#include "posrep/error.hpp"
#include "posrep/families.hpp"
#include "posrep/representation.hpp"
#include "posrep/search.hpp"

using namespace posrep;
using oracle::sig;

namespace {

Poset relabel(const Poset& p, std::mt19937_64& rng) {
  std::vector<Index> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> labels(p.size());
  std::vector<ElementSet> above(p.size());
  for (Index i = 0; i < p.size(); ++i) labels[perm[i]] = "v" + std::to_string(perm[i]);
  for (Index i = 0; i < p.size(); ++i)
    for (Index j : p.up(i)) above[perm[i]].insert(perm[j]);
  return Poset::from_relation(labels, above);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::SchemaError;
}

}  // namespace

TEST_CASE("small poset counts agree with labeled brute force") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(enumerate_small_posets(n).size() == oracle::count_isomorphism_classes(n));
  }
  CHECK(enumerate_small_posets(1).size() == 1);
  CHECK(enumerate_small_posets(2).size() == 2);
  CHECK(enumerate_small_posets(3).size() == 5);
  CHECK(enumerate_small_posets(4).size() == 16);
}

TEST_CASE("enumerated representatives are pairwise non-isomorphic") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<std::uint64_t>> codes;
    for (const Poset& p : enumerate_small_posets(n)) {
      CHECK(p.size() == static_cast<std::size_t>(n));
      codes.insert(canonical_form(p).code);
    }
    CHECK(codes.size() == enumerate_small_posets(n).size());
  }
  CHECK(code_of([] { enumerate_small_posets(8); }) == ErrorCode::CapExceeded);
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(17);
  for (const Poset& p : oracle::mixed_corpus(80, 14, 3001)) {
    const Poset q = relabel(p, rng);
    CHECK(canonical_form(p) == canonical_form(q));
    CHECK(isomorphic(p, q));
    CHECK(canonical_poset(p) == canonical_poset(q));
  }
  CHECK_FALSE(isomorphic(m3(), n5()));
  CHECK_FALSE(isomorphic(chain(3), antichain(3)));
  CHECK(isomorphic(dual(n5()), n5()));
}

TEST_CASE("predicates") {
  CHECK(Predicate::parse("lmd").evaluate(boolean_lattice(2)));
  CHECK_FALSE(Predicate::parse("lmd & is_lattice").evaluate(express_poset()));
  CHECK(Predicate::parse("!lmd | d2bar").evaluate(express_poset()));
  CHECK(Predicate::parse("representable(ALL,ALL)").evaluate(express_poset()));
  CHECK_FALSE(Predicate::parse("representable(3,3)").evaluate(d2poset()));
  CHECK(Predicate::parse("d2bar & !representable(3,3)").evaluate(d2poset()));
  CHECK(Predicate::parse("(is_lattice & !is_distributive)").evaluate(m3()));
  CHECK((Predicate::named("is_lattice") && !Predicate::named("is_distributive")).evaluate(n5()));
  CHECK(Predicate::representable(sig(3, 3)).evaluate(pn(4)));
  CHECK_THROWS_AS(Predicate::parse("lmd &"), Error);
  CHECK_THROWS_AS(Predicate::parse("bogus"), Error);
  CHECK_THROWS_AS(Predicate::parse("representable(1,3)"), Error);
}

TEST_CASE("search for D2bar without (3,3)-representability") {
  const auto out = find_counterexample(Predicate::named("d2bar"), Predicate::representable(sig(3, 3)), 7);
  REQUIRE(out.counterexample.has_value());
  const Poset& w = *out.counterexample;
  // Independent confirmation of the witness.
  CHECK(oracle::d2bar(w));
  CHECK_FALSE(oracle::representable(w, sig(3, 3)));
  // Sizes are exhausted in order, so nothing smaller exists.
  for (int n = 1; n < static_cast<int>(w.size()); ++n)
    for (const Poset& p : enumerate_small_posets(n)) CHECK_FALSE((oracle::d2bar(p) && !oracle::representable(p, sig(3, 3))));
  // The 7-element fixture is a witness too, so the minimum is at most 7.
  CHECK(w.size() <= 7);
  CHECK(oracle::d2bar(d2poset()));
  CHECK_FALSE(oracle::representable(d2poset(), sig(3, 3)));
  MESSAGE("smallest witness has " << w.size() << " elements");
}

TEST_CASE("searches that must come up empty") {
  const auto none = find_counterexample(Predicate::named("lmd"), Predicate::named("lmd"), 6);
  CHECK_FALSE(none.counterexample.has_value());
  CHECK(none.progress.completed_size == 6);

  // LMD posets are (ALL,ALL)-representable, hence (ALL,3)-representable.
  CHECK_FALSE(find_counterexample(Predicate::named("lmd"), Predicate::representable(sig(0, 3)), 6)
                  .counterexample.has_value());
}

TEST_CASE("search limits") {
  CHECK(code_of([] { find_counterexample(Predicate::named("lmd"), Predicate::named("d2bar"), 8); }) ==
        ErrorCode::CapExceeded);
  try {
    find_counterexample(Predicate::named("lmd"), Predicate::named("lmd"), 6, 20);
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
    CHECK(std::string(e.what()).find("n=") != std::string::npos);
  }
  std::vector<std::string> log;
  find_counterexample(Predicate::named("lmd"), Predicate::named("lmd"), 3, 1000, 7,
                      [&](const std::string& line) { log.push_back(line); });
  CHECK(log.size() == 3);
}

TEST_CASE("probe presets parse") {
  for (const auto& probe : probe_presets()) {
    CHECK_NOTHROW(Predicate::parse(probe.holds));
    CHECK_NOTHROW(Predicate::parse(probe.fails));
  }
}

TEST_CASE("(3,3) without (4,4) first appears at eight elements") {
  const auto out = find_counterexample(Predicate::representable(sig(3, 3)), Predicate::representable(sig(4, 4)), 8,
                                       1'000'000, 8);
  REQUIRE(out.counterexample.has_value());
  const Poset& w = *out.counterexample;
  CHECK(w.size() == 8);
  CHECK(oracle::representable(w, sig(3, 3)));
  CHECK_FALSE(oracle::representable(w, sig(4, 4)));
  CHECK(out.progress.completed_size == 7);
}
