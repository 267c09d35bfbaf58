#include "doctest.h"
#include "oracles.hpp"
#include "posrep/conditions.hpp"
#include "posrep/families.hpp"
#include "posrep/representation.hpp"
#include "posrep/search.hpp"

using namespace posrep;
using oracle::sig;

TEST_CASE("LMD examples") {
  const Poset e = express_poset();
  const auto r = check_lmd(e);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  const auto& w = *r.counterexample;
  CHECK(w.x == e.index_of("p"));
  CHECK(w.left == e.index_of("meet_p_qr"));
  CHECK(w.failure == TripleFailure::RightUndefined);
  CHECK_FALSE(w.xy.has_value());

  CHECK(check_lmd(boolean_lattice(3)).holds);
  CHECK(check_lmd(chain(4)).holds);
  CHECK_FALSE(check_lmd(m3()).holds);
}

TEST_CASE("D2bar examples") {
  CHECK(check_d2bar(express_poset()).holds);
  CHECK(check_d2bar(d2poset()).holds);
  const auto r = check_d2bar(n5());
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->failure == TripleFailure::Unequal);
}

TEST_CASE("conditions agree with the brute-force checks") {
  for (const Poset& p : oracle::mixed_corpus(150, 8, 2001)) {
    CHECK(check_lmd(p).holds == oracle::lmd(p));
    CHECK(check_d2bar(p).holds == oracle::d2bar(p));
  }
  CHECK(check_lmd(d2poset()).holds == oracle::lmd(d2poset()));
}

TEST_CASE("LMD implies D2bar") {
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : enumerate_small_posets(n))
      if (check_lmd(p).holds) CHECK(check_d2bar(p).holds);
}

TEST_CASE("D2bar does not give (3,3)-representability") {
  CHECK(check_d2bar(d2poset()).holds);
  CHECK_FALSE(decide_representable(d2poset(), sig(3, 3)).representable);
}

TEST_CASE("lattice_profile examples") {
  const auto b = lattice_profile(boolean_lattice(3));
  CHECK(b.is_lattice);
  CHECK(b.is_distributive);
  CHECK(b.join_irreducibles.size() == 3);

  const auto m = lattice_profile(m3());
  CHECK(m.is_lattice);
  CHECK_FALSE(m.is_distributive);
  CHECK_FALSE(m.distributive_identity);
  CHECK_FALSE(m.no_m3_n5);

  CHECK_FALSE(lattice_profile(n5()).is_distributive);
  CHECK_FALSE(lattice_profile(express_poset()).is_lattice);
  CHECK_FALSE(lattice_profile(antichain(2)).is_lattice);
}

TEST_CASE("finite lattices up to 7 elements") {
  int lattices = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Poset& p : enumerate_small_posets(n)) {
      const auto prof = lattice_profile(p);
      if (!prof.is_lattice) continue;
      ++lattices;
      CHECK(prof.distributive_identity == prof.no_m3_n5);
      CHECK(prof.is_distributive == decide_representable(p, sig(3, 3)).representable);
      CHECK(prof.is_distributive == check_lmd(p).holds);
      // Finite: join-irreducible means a single lower cover.
      CHECK(prof.join_irreducibles == prof.single_lower_cover);
      CHECK(prof.meet_irreducibles == prof.single_upper_cover);
      CHECK(prof.join_dense);
      CHECK(prof.meet_dense);
      // Finite distributive lattices satisfy both infinite laws.
      CHECK(prof.frame_law == prof.is_distributive);
      const auto c = completely_representable(p);
      CHECK(c.lattice_cross_checked);
      CHECK(c.representable == prof.is_distributive);
    }
  }
  // 1, 1, 1, 2, 5, 15, 53 lattices on 1..7 elements.
  CHECK(lattices == 78);
}

TEST_CASE("complete representability examples") {
  const auto pi = completely_representable(prime_ideal_poset());
  CHECK(pi.representable);
  CHECK_FALSE(pi.lattice_cross_checked);
  CHECK(completely_representable(express_poset()).representable);
  const auto m = completely_representable(m3());
  CHECK_FALSE(m.representable);
  CHECK(m.failing_pair.has_value());
  CHECK_FALSE(m.join_criterion);
}
