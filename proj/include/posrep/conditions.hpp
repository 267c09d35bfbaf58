#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posrep/poset.hpp"
#include "posrep/representation.hpp"

namespace posrep {

/// Why a triple (x, y, z) violates a distributivity condition.
enum class TripleFailure {
  RightUndefined,  ///< x meet (y join z) exists, (x meet y) join (x meet z) does not
  Unequal,         ///< both sides exist and differ
};

const char* to_string(TripleFailure f);

struct TripleWitness {
  Index x, y, z;
  Index left;                  ///< x meet (y join z)
  std::optional<Index> xy;     ///< x meet y
  std::optional<Index> xz;     ///< x meet z
  std::optional<Index> right;  ///< (x meet y) join (x meet z)
  TripleFailure failure;
};

struct ConditionReport {
  std::string name;
  bool holds = true;
  std::optional<TripleWitness> counterexample;
};

/// Whenever x meet (y join z) exists, (x meet y) join (x meet z) exists and equals it.
ConditionReport check_lmd(const Poset& p);
/// Whenever both sides exist they are equal.
ConditionReport check_d2bar(const Poset& p);

struct LatticeProfile {
  bool is_lattice = false;
  // The fields below are only meaningful when is_lattice.
  bool distributive_identity = false;  ///< x meet (y join z) = (x meet y) join (x meet z) everywhere
  bool no_m3_n5 = false;               ///< no sublattice isomorphic to M3 or N5
  bool is_distributive = false;        ///< both tests agree and hold
  ElementSet join_irreducibles;        ///< j not the join of the elements strictly below it
  ElementSet meet_irreducibles;
  ElementSet single_lower_cover;       ///< elements with exactly one lower cover
  ElementSet single_upper_cover;
  bool join_dense = false;  ///< every element is the join of the join-irreducibles below it
  bool meet_dense = false;
  bool frame_law = false;    ///< p meet join(X) = join{p meet x} for all p and nonempty X
  bool coframe_law = false;  ///< the order dual of frame_law
};

/// Meet/join tables of a finite lattice; throws InvalidParameter if p is not one.
class LatticeOps {
 public:
  explicit LatticeOps(const Poset& p);
  /// nullopt unless every pair has a meet and a join.
  static std::optional<LatticeOps> of(const Poset& p);

  Index meet(Index a, Index b) const { return meet_[a * n_ + b]; }
  Index join(Index a, Index b) const { return join_[a * n_ + b]; }
  Index bottom() const { return bottom_; }
  Index top() const { return top_; }
  Index join_all(ElementSet s) const;  ///< join of the empty set is the bottom
  Index meet_all(ElementSet s) const;

 private:
  LatticeOps() = default;
  std::size_t n_ = 0;
  std::vector<Index> meet_;
  std::vector<Index> join_;
  Index bottom_ = 0;
  Index top_ = 0;
};

LatticeProfile lattice_profile(const Poset& p);

struct CompleteRepresentability {
  bool representable = false;        ///< decided at (ALL, ALL)
  std::optional<std::pair<Index, Index>> failing_pair;
  bool lattice_cross_checked = false;  ///< p is a lattice and the irreducible criteria were evaluated
  bool join_criterion = false;         ///< join-irreducibles join-dense and the frame law
  bool meet_criterion = false;         ///< meet-irreducibles meet-dense and the coframe law
};

/// (ALL, ALL)-representability. For lattices the verdict is also compared with
/// the irreducible-density criteria; a disagreement throws std::logic_error.
CompleteRepresentability completely_representable(const Poset& p, std::uint64_t budget = kDefaultBudget);

}  // namespace posrep
