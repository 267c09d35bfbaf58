#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "posrep/error.hpp"
#include "posrep/families.hpp"
#include "posrep/filters.hpp"

using namespace posrep;
using oracle::sig;

namespace {

std::vector<ElementSet> members(const std::vector<Filter>& fs) {
  std::vector<ElementSet> out;
  for (const auto& f : fs) out.push_back(f.members);
  return out;
}

const std::vector<Signature> kSigs = {sig(3, 3), sig(3, 0), sig(0, 3), sig(0, 0), sig(4, 2), sig(2, 4), sig(2, 2)};

}  // namespace

TEST_CASE("is_filter examples") {
  const Poset c = chain(3);
  CHECK_FALSE(is_filter(c, c.set_of({"c1", "c2"}), sig(3, 3)).has_value());

  const Poset d = d2poset();
  const auto v = is_filter(d, d.set_of({"a"}), sig(3, 3));
  REQUIRE(v.has_value());
  CHECK(v->kind == ViolationKind::NotUpClosed);
  CHECK(v->witness_set == d.set_of({"a"}));
  CHECK(v->witness_element == d.index_of("top"));

  // An up-set containing p but not q: the join p = a v b forces a or b in.
  const ElementSet upset = d.set_of({"p", "top"});
  const auto w = is_filter(d, upset, sig(3, 3));
  REQUIRE(w.has_value());
  CHECK(w->kind == ViolationKind::JoinNotPrime);
  CHECK(upset.contains(w->witness_element));
  CHECK_FALSE(w->witness_set.intersects(upset));
}

TEST_CASE("meet escape is reported with its antichain") {
  const Poset e = express_poset();
  const ElementSet s = e.set_of({"p", "join_qr"});
  const auto v = is_filter(e, s, sig(3, 3));
  REQUIRE(v.has_value());
  CHECK(v->kind == ViolationKind::MeetEscape);
  CHECK(v->witness_set == s);
  CHECK(v->witness_element == e.index_of("meet_p_qr"));
  // q v r = join_qr lies in the set while q and r do not.
  CHECK(is_filter(e, s, sig(2, 3))->kind == ViolationKind::JoinNotPrime);
  CHECK_FALSE(is_filter(e, s, sig(2, 2)).has_value());
}

TEST_CASE("is_filter agrees with the literal definition on every subset") {
  for (const Poset& p : oracle::mixed_corpus(40, 8, 101)) {
    for (const Signature& s : kSigs) {
      const FilterTables tables(p, s);
      for (std::uint64_t bits = 0; bits <= p.all().bits(); ++bits) {
        const ElementSet set(bits);
        const auto v = tables.check(set);
        if (oracle::is_filter(p, set, s) != !v.has_value()) {
          FAIL_CHECK("disagreement at " << s.to_string() << " on " << bits);
        }
        if (v && v->kind == ViolationKind::MeetEscape) {
          CHECK(v->witness_set.subset_of(set));
          CHECK_FALSE(set.contains(v->witness_element));
        }
        if (v && v->kind == ViolationKind::JoinNotPrime) {
          CHECK_FALSE(v->witness_set.intersects(set));
          CHECK(set.contains(v->witness_element));
        }
      }
    }
  }
}

TEST_CASE("enumerate_filters examples") {
  CHECK(enumerate_filters(antichain(3), sig(0, 0), FilterPolicy::All).size() == 8);
  CHECK(enumerate_filters(chain(3), sig(3, 3), FilterPolicy::All).size() == 4);
  const Poset d = d2poset();
  const Index p = d.index_of("p"), q = d.index_of("q");
  const auto fs = enumerate_filters(d, sig(3, 3), FilterPolicy::All);
  CHECK_FALSE(fs.empty());
  for (const auto& f : fs)
    if (f.members.contains(p)) CHECK(f.members.contains(q));
}

TEST_CASE("enumerate_filters equals the brute-force list, in lexicographic order") {
  for (const Poset& p : oracle::mixed_corpus(40, 8, 202)) {
    for (const Signature& s : kSigs) {
      const auto got = members(enumerate_filters(p, s, FilterPolicy::All));
      auto want = oracle::filters(p, s);
      std::sort(want.begin(), want.end(), LexLess{});
      CHECK(got == want);

      const auto canon = members(enumerate_filters(p, s, FilterPolicy::Canonical));
      std::vector<ElementSet> expected;
      const auto bot = p.bottom();
      for (ElementSet f : want)
        if (!f.empty() && !(bot && f.contains(*bot))) expected.push_back(f);
      CHECK(canon == expected);
    }
  }
}

TEST_CASE("principal up-sets are closed under existing meets") {
  for (const Poset& p : oracle::mixed_corpus(30, 10, 303)) {
    for (Index i = 0; i < p.size(); ++i) {
      const auto v = is_filter(p, p.up(i), sig(0, 2));
      CHECK_FALSE(v.has_value());
    }
  }
}

TEST_CASE("principal up-sets of the pn family are (ALL, n-1)-filters") {
  for (int n = 4; n <= 6; ++n) {
    const Poset p = pn(n);
    for (Index i = 0; i < p.size(); ++i)
      CHECK_FALSE(is_filter(p, p.up(i), sig(0, static_cast<unsigned>(n - 1))).has_value());
  }
}

TEST_CASE("complement_is_ideal") {
  const Poset c = chain(3);
  CHECK(complement_is_ideal(c, Filter{c.set_of({"c2"}), sig(3, 3)}));
  const Poset a = antichain(3);
  CHECK(complement_is_ideal(a, Filter{a.set_of({"a0"}), sig(3, 3)}));
  const Poset d = d2poset();
  const ElementSet f = d.set_of({"bot1", "a", "p", "q", "top"});
  CHECK_FALSE(is_filter(d, f, sig(3, 3)).has_value());
  CHECK(complement_is_ideal(d, Filter{f, sig(3, 3)}));
  CHECK_FALSE(is_filter(dual(d), d.set_of({"b", "bot2"}), sig(3, 3)).has_value());

  int checked = 0;
  for (const Poset& p : oracle::random_corpus(100, 8, 404)) {
    for (const Signature& s : {sig(3, 3), sig(0, 4), sig(4, 0)}) {
      for (const auto& f : enumerate_filters(p, s, FilterPolicy::All)) {
        CHECK(complement_is_ideal(p, f));
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("extend_to_filter examples") {
  const Poset d = d2poset();
  CHECK_FALSE(extend_to_filter(d, d.set_of({"p"}), d.index_of("q"), sig(3, 3)).has_value());

  const Poset c = chain(4);
  const auto f = extend_to_filter(c, c.set_of({"c1"}), std::nullopt, sig(3, 3));
  REQUIRE(f.has_value());
  CHECK(c.set_of({"c1", "c2", "c3"}).subset_of(f->members));

  const Poset a = antichain(3);
  const auto g = extend_to_filter(a, a.up(0), a.index_of("a1"), sig(3, 3));
  REQUIRE(g.has_value());
  CHECK(g->members == a.up(0));

  const Poset pi = prime_ideal_poset();
  const ElementSet gamma = pi.set_of(prime_ideal_gamma());
  const Index x14 = pi.index_of("{x1,x4}");
  CHECK_FALSE(extend_to_filter(pi, gamma, x14, sig(3, 3)).has_value());
  const auto free = extend_to_filter(pi, gamma, std::nullopt, sig(3, 3));
  REQUIRE(free.has_value());
  CHECK(free->members.contains(x14));
  bool listed = false;
  for (const auto& h : enumerate_filters(pi, sig(3, 3), FilterPolicy::All)) {
    if (gamma.subset_of(h.members)) CHECK(h.members.contains(x14));
    listed = listed || h.members == free->members;
  }
  CHECK(listed);
}

TEST_CASE("extend_to_filter is complete: it fails exactly when no filter fits") {
  std::mt19937_64 rng(77);
  int cases = 0;
  for (const Poset& p : oracle::mixed_corpus(60, 10, 505)) {
    for (const Signature& s : {sig(3, 3), sig(0, 3), sig(3, 0), sig(4, 4), sig(0, 0)}) {
      const auto all = members(enumerate_filters(p, s, FilterPolicy::All));
      for (int k = 0; k < 6; ++k) {
        const ElementSet seed(rng() & rng() & p.all().bits());
        std::optional<Index> forbidden;
        if (rng() % 4 != 0) forbidden = static_cast<Index>(rng() % p.size());
        const bool exists = std::any_of(all.begin(), all.end(), [&](ElementSet f) {
          return seed.subset_of(f) && !(forbidden && f.contains(*forbidden));
        });
        const auto got = extend_to_filter(p, seed, forbidden, s);
        CHECK(got.has_value() == exists);
        if (got) {
          CHECK(seed.subset_of(got->members));
          CHECK_FALSE((forbidden && got->members.contains(*forbidden)));
          CHECK(oracle::is_filter(p, got->members, s));
        }
        ++cases;
      }
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("budgets are enforced") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::SchemaError;
  };
  const Poset a = antichain(12);
  CHECK(code([&] { enumerate_filters(a, sig(0, 0), FilterPolicy::All, 10); }) == ErrorCode::BudgetExceeded);
  CHECK(code([&] { extend_to_filter(a, ElementSet{0}, std::nullopt, sig(0, 0), 0); }) ==
        ErrorCode::BudgetExceeded);
}

TEST_CASE("minimal constraint tables give the same verdicts as the full tables") {
  for (const Poset& p : oracle::mixed_corpus(30, 9, 606)) {
    const FilterTables t(p, sig(0, 0));
    CHECK(t.minimal_meets().size() <= t.meets().size());
    CHECK(t.minimal_joins().size() <= t.joins().size());
    for (const auto& c : t.minimal_meets()) {
      for (Index a : c.antichain) {
        ElementSet rest = c.antichain;
        rest.erase(a);
        if (rest.size() >= 2) CHECK(oracle::meet(p, rest) != std::optional<Index>(c.extremum));
      }
    }
  }
}
