#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "posrep/filters.hpp"
#include "posrep/poset.hpp"

namespace posrep {

using PointSet = boost::dynamic_bitset<>;

/// A map h from the elements of a poset into the powerset of `ground`.
/// `images[i]` is h(i) as a bitset over ground points.
struct Representation {
  std::vector<std::string> ground;
  std::vector<PointSet> images;
  Signature signature;
};

/// Outcome for one ordered pair p, q with p not <= q.
struct PairOutcome {
  Index p;
  Index q;
  std::optional<ElementSet> witness;  ///< a filter containing p but not q
};

enum class DecisionMethod {
  PerPairSearch,    ///< one extension search per pair
  FullEnumeration,  ///< enumerate every filter, then scan
  Trivial,          ///< bound-2 signatures: point filters of a trivial representation
};

const char* to_string(DecisionMethod m);

struct SeparationReport {
  Signature signature;
  bool representable = false;
  DecisionMethod method = DecisionMethod::PerPairSearch;
  std::vector<PairOutcome> pairs;  ///< ordered by (p, q)

  std::vector<std::pair<Index, Index>> failures() const;
};

struct DecideOptions {
  DecisionMethod method = DecisionMethod::PerPairSearch;
  std::uint64_t budget = kDefaultBudget;
};

/// Decides (alpha, beta)-representability by looking for separating filters.
/// Signatures with a bound of 2 are answered by the trivial constructions.
SeparationReport decide_representable(const Poset& p, Signature sig, const DecideOptions& options = {});

/// h(p) = canonical filters containing p; points are named f0, f1, ...
std::optional<Representation> canonical_representation(const Poset& p, Signature sig,
                                                       std::uint64_t budget = kDefaultBudget);

enum class RepresentationViolationKind {
  OrderNotPreserved,   ///< p <= q but h(p) not inside h(q)
  OrderNotReflected,   ///< p not <= q but h(p) inside h(q)
  MeetNotIntersection,
  JoinNotUnion,
  TopNotGround,
  BottomNotEmpty,
};

const char* to_string(RepresentationViolationKind kind);

struct RepresentationViolation {
  RepresentationViolationKind kind;
  std::vector<Index> elements;     ///< the pair, the antichain, or the top/bottom element
  std::optional<Index> extremum;   ///< meet/join of `elements` for the set-operation kinds

  friend bool operator==(const RepresentationViolation&, const RepresentationViolation&) = default;
};

/// Every violation of the embedding conditions at h.signature. Empty means h is valid.
/// Throws UnknownElement when h is not total on p or images are not over `ground`.
std::vector<RepresentationViolation> verify_representation(const Poset& p, const Representation& h);

struct PointFilter {
  std::size_t point;
  ElementSet members;
  std::optional<FilterViolation> violation;
};

/// For each ground point x, {p : x in h(p)} together with its filter check at
/// h.signature. Throws InvalidParameter if h does not verify.
std::vector<PointFilter> point_filters(const Poset& p, const Representation& h);

enum class TrivialSide {
  Meets,  ///< p -> down-set of p, signature (ALL, 2)
  Joins,  ///< p -> {q : q not >= p}, signature (2, ALL)
};

/// The two representations that always exist. The bottom point (meets side) or
/// the top point (joins side) is dropped from the ground set so that top maps to
/// the ground set and bottom to the empty set.
Representation trivial_representation(const Poset& p, TrivialSide side);

struct SpectrumReport {
  /// 2, 3, ..., |P|, ALL after canonicalization.
  std::vector<Arity> bounds;
  /// representable[i][j] answers (bounds[i], bounds[j]).
  std::vector<std::vector<bool>> representable;
  /// Maximal representable signatures with both bounds >= 3. The bound-2 row
  /// and column are always representable and are left out.
  std::vector<Signature> frontier;
  /// Number of signatures that needed a separation search.
  std::size_t decided = 0;

  bool at(Signature sig) const;
};

SpectrumReport spectrum(const Poset& p, std::uint64_t budget = kDefaultBudget);

struct Envelope {
  Poset lattice;                 ///< inclusion order on `sets`
  std::vector<PointSet> sets;    ///< closure of the image under union and intersection
  std::vector<Index> embedding;  ///< element of p -> index into `sets`
};

/// Sublattice of the powerset generated by the image of h. Throws SizeExceeded
/// when the closure would exceed `max_elements`.
Envelope distributive_envelope(const Poset& p, const Representation& h, std::size_t max_elements = kMaxElements);

}  // namespace posrep
