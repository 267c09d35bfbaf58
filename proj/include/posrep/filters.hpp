#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posrep/poset.hpp"

namespace posrep {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// An up-set of a poset checked against a signature.
struct Filter {
  ElementSet members;
  Signature signature;

  friend bool operator==(const Filter&, const Filter&) = default;
};

enum class ViolationKind { NotUpClosed, MeetEscape, JoinNotPrime };

const char* to_string(ViolationKind kind);

/// A reproducible reason why a set is not a filter.
///
/// NotUpClosed: witness_set = {s}, witness_element = t with s <= t, s in S, t not in S.
/// MeetEscape:  witness_set = A inside S whose meet witness_element lies outside S.
/// JoinNotPrime: witness_set = A disjoint from S whose join witness_element lies in S.
struct FilterViolation {
  ViolationKind kind;
  ElementSet witness_set;
  Index witness_element;

  friend bool operator==(const FilterViolation&, const FilterViolation&) = default;
};

enum class FilterPolicy {
  All,        ///< every up-set passing the check, including the empty set and the carrier
  Canonical,  ///< drops the empty set and any filter containing the bottom element
};

/// Meet and join constraint tables of one poset at one (canonicalized) signature.
///
/// Holds a reference to the poset; the poset must outlive the tables.
class FilterTables {
 public:
  FilterTables(const Poset& poset, Signature signature);

  const Poset& poset() const { return *poset_; }
  const Signature& signature() const { return signature_; }

  /// Full constraint lists in lexicographic order.
  const std::vector<Constraint>& meets() const { return meets_; }
  const std::vector<Constraint>& joins() const { return joins_; }

  /// Inclusion-minimal constraints per extremum; equivalent for closure and primality.
  const std::vector<Constraint>& minimal_meets() const { return minimal_meets_; }
  const std::vector<Constraint>& minimal_joins() const { return minimal_joins_; }

  /// Minimal meet antichains grouped by their meet.
  const std::vector<std::vector<ElementSet>>& meets_by_extremum() const { return meets_by_extremum_; }

  /// First violation in order: up-closure, then meets, then joins (each lexicographic).
  std::optional<FilterViolation> check(ElementSet s) const;
  bool accepts(ElementSet s) const;

 private:
  const Poset* poset_;
  Signature signature_;
  std::vector<Constraint> meets_;
  std::vector<Constraint> joins_;
  std::vector<Constraint> minimal_meets_;
  std::vector<Constraint> minimal_joins_;
  std::vector<std::vector<ElementSet>> meets_by_extremum_;
};

/// Returns nullopt when `s` is a filter at `sig`, otherwise the first violation.
std::optional<FilterViolation> is_filter(const Poset& p, ElementSet s, Signature sig);

/// All filters at `sig` in ascending lexicographic order of member sets.
/// Throws BudgetExceeded after `max_upsets` complete up-sets have been examined.
std::vector<Filter> enumerate_filters(const Poset& p, Signature sig, FilterPolicy policy,
                                      std::uint64_t max_upsets = kDefaultBudget);
std::vector<Filter> enumerate_filters(const FilterTables& tables, FilterPolicy policy,
                                      std::uint64_t max_upsets = kDefaultBudget);

/// The complement of a filter is an ideal with the arities swapped.
bool complement_is_ideal(const Poset& p, const Filter& f);

/// Complete backtracking search for a filter containing `seed` (up-closed first)
/// and omitting `forbidden`. Meet constraints propagate, join constraints branch.
/// Throws BudgetExceeded after `max_nodes` search nodes.
std::optional<Filter> extend_to_filter(const Poset& p, ElementSet seed, std::optional<Index> forbidden,
                                       Signature sig, std::uint64_t max_nodes = kDefaultBudget);
std::optional<Filter> extend_to_filter(const FilterTables& tables, ElementSet seed,
                                       std::optional<Index> forbidden, std::uint64_t max_nodes = kDefaultBudget);

}  // namespace posrep
