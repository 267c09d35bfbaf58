#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posrep/poset.hpp"
#include "posrep/representation.hpp"

namespace posrep {

/// Names a generator plus its parameters. Equal specs give identical posets.
struct FamilySpec {
  std::string family;
  std::map<std::string, std::int64_t> parameters;
  std::optional<std::uint64_t> seed;
  /// Edge probability for the random family.
  double probability = 0.5;
};

/// Families: pn, express, d2poset, prime_ideal, boolean, chain, antichain, m3, n5, random.
Poset generate(const FamilySpec& spec);

std::vector<std::string> family_names();

/// Convenience wrappers.
Poset pn(int n);
Poset express_poset();
Poset d2poset();
Poset prime_ideal_poset();
Poset boolean_lattice(int atoms);
Poset chain(int n);
Poset antichain(int n);
Poset m3();
Poset n5();
Poset random_poset(int n, double probability, std::uint64_t seed);

/// The four-point representation given for the express poset:
/// p -> {a,c,d}, q -> {b,d}, r -> {b,c} and the induced join/meet images.
Representation express_representation();
/// Each element of prime_ideal is itself a subset of {y, x1, x2, x3, x4}.
Representation prime_ideal_identity_representation();
/// The up-closed set {{y,x1},{x2,x3},{y,x4}} of prime_ideal, as labels.
std::vector<std::string> prime_ideal_gamma();

/// One machine-checkable claim attached to a fixture.
struct Claim {
  enum class Kind { Representable, Lmd, D2bar, CompletelyRepresentable, ExtensionFails };
  Kind kind;
  bool expected;
  Signature signature;                 ///< Representable only
  std::vector<std::string> seed;       ///< ExtensionFails only
  std::string forbidden;               ///< ExtensionFails only

  std::string describe() const;
};

/// Recorded claims for the named fixtures: express, pn, d2poset, prime_ideal.
/// `n` is required for pn. Throws UnknownFamily for anything else.
std::vector<Claim> fixture_expectations(const std::string& family, std::optional<int> n = std::nullopt);

}  // namespace posrep
