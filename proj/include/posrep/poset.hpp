#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posrep/element_set.hpp"
#include "posrep/signature.hpp"

namespace posrep {

enum class BuildMode { Covers, Order };
enum class BoundSide { Lower, Upper };
enum class Bound { Meet, Join };

using LabelPair = std::pair<std::string, std::string>;

/// A finite partial order on dense indices 0..size()-1 with a label table.
///
/// The relation is stored as one up-set and one down-set word per element, so
/// `leq` is a single bit test. Posets are immutable once built.
class Poset {
 public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of `pairs` (each pair reads a <= b)
  /// and validates antisymmetry. Both modes close the relation; they differ only
  /// in how callers describe their input.
  static Poset build(std::vector<std::string> labels, const std::vector<LabelPair>& pairs,
                     BuildMode mode = BuildMode::Covers);
  /// `above[i]` lists indices j with i <= j (not necessarily closed).
  static Poset from_relation(std::vector<std::string> labels, const std::vector<ElementSet>& above);

  std::size_t size() const { return labels_.size(); }
  ElementSet all() const { return ElementSet::full(size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_.at(i); }
  std::optional<Index> find(std::string_view label) const;
  /// Throws UnknownLabel.
  Index index_of(std::string_view label) const;
  ElementSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(ElementSet s) const;

  bool leq(Index a, Index b) const { return up_[a].contains(b); }
  bool less(Index a, Index b) const { return a != b && leq(a, b); }
  bool comparable(Index a, Index b) const { return leq(a, b) || leq(b, a); }

  /// Principal up-set {x : i <= x}.
  ElementSet up(Index i) const { return up_[i]; }
  /// Principal down-set {x : x <= i}.
  ElementSet down(Index i) const { return down_[i]; }
  ElementSet upper_covers(Index i) const { return upper_covers_[i]; }
  ElementSet lower_covers(Index i) const { return lower_covers_[i]; }

  std::optional<Index> top() const;
  std::optional<Index> bottom() const;

  /// Cover pairs (a, b) with a < b and nothing strictly between, ordered by (a, b).
  std::vector<std::pair<Index, Index>> cover_pairs() const;
  std::size_t strict_relation_count() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  void derive_caches();

  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> upper_covers_;
  std::vector<ElementSet> lower_covers_;
  std::unordered_map<std::string, Index> index_;
};

/// An existing meet (or join) of an antichain of size >= 2.
struct Constraint {
  ElementSet antichain;
  Index extremum;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Same carrier with the order reversed.
Poset dual(const Poset& p);

/// Common lower (or upper) bounds of a nonempty set. Throws EmptySubset.
ElementSet bound_set(const Poset& p, ElementSet s, BoundSide side);

/// Meet or join of a nonempty set when it exists. Throws EmptySubset.
std::optional<Index> extremum(const Poset& p, ElementSet s, Bound kind);

/// Greatest element of `s` if any (least for Bound::Join reads "least upper").
std::optional<Index> greatest(const Poset& p, ElementSet s);
std::optional<Index> least(const Poset& p, ElementSet s);

ElementSet up_closure(const Poset& p, ElementSet s);
ElementSet down_closure(const Poset& p, ElementSet s);
bool is_up_closed(const Poset& p, ElementSet s);

ElementSet minimal_elements(const Poset& p, ElementSet s);
ElementSet maximal_elements(const Poset& p, ElementSet s);
bool is_antichain(const Poset& p, ElementSet s);

/// All (A, e) with A an antichain, 2 <= |A| < bound and e the meet (join) of A,
/// in lexicographic order of A. Non-antichain subsets are covered because
/// the meet of X equals the meet of its minimal elements (dually for joins).
std::vector<Constraint> antichain_constraints(const Poset& p, Arity bound, Bound kind);

}  // namespace posrep
