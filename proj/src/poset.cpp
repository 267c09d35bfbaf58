#include "posrep/poset.hpp"

#include "posrep/error.hpp"

namespace posrep {

Poset Poset::build(std::vector<std::string> labels, const std::vector<LabelPair>& pairs, BuildMode) {
  if (labels.size() > kMaxElements) {
    throw Error(ErrorCode::SizeExceeded,
                "poset has " + std::to_string(labels.size()) + " elements, limit is " + std::to_string(kMaxElements));
  }
  std::unordered_map<std::string, Index> index;
  for (Index i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) throw Error(ErrorCode::DuplicateLabel, labels[i]);
  }
  auto lookup = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) throw Error(ErrorCode::UnknownLabel, l);
    return it->second;
  };
  std::vector<ElementSet> above(labels.size());
  for (const auto& [a, b] : pairs) above[lookup(a)].insert(lookup(b));
  return from_relation(std::move(labels), above);
}

Poset Poset::from_relation(std::vector<std::string> labels, const std::vector<ElementSet>& above) {
  const std::size_t n = labels.size();
  if (n > kMaxElements) {
    throw Error(ErrorCode::SizeExceeded,
                "poset has " + std::to_string(n) + " elements, limit is " + std::to_string(kMaxElements));
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.up_.resize(n);
  for (Index i = 0; i < n; ++i) p.up_[i] = above.at(i) | ElementSet::singleton(i);
  // Warshall on bit rows.
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      if (p.up_[i].contains(k)) p.up_[i] |= p.up_[k];
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j : p.up_[i]) {
      if (j != i && p.up_[j].contains(i)) {
        throw Error(ErrorCode::CycleDetected, p.labels_[i] + " <= " + p.labels_[j] + " <= " + p.labels_[i]);
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.labels_[i], i).second) throw Error(ErrorCode::DuplicateLabel, p.labels_[i]);
  }
  p.derive_caches();
  return p;
}

void Poset::derive_caches() {
  const std::size_t n = size();
  down_.assign(n, ElementSet{});
  for (Index i = 0; i < n; ++i) {
    for (Index j : up_[i]) down_[j].insert(i);
  }
  upper_covers_.assign(n, ElementSet{});
  lower_covers_.assign(n, ElementSet{});
  for (Index i = 0; i < n; ++i) {
    const ElementSet strict = up_[i] - ElementSet::singleton(i);
    for (Index j : strict) {
      // j covers i iff no k with i < k < j.
      if ((strict & (down_[j] - ElementSet::singleton(j))).empty()) {
        upper_covers_[i].insert(j);
        lower_covers_[j].insert(i);
      }
    }
  }
}

std::optional<Index> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index Poset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::UnknownLabel, std::string(label));
}

ElementSet Poset::set_of(const std::vector<std::string>& labels) const {
  ElementSet s;
  for (const auto& l : labels) s.insert(index_of(l));
  return s;
}

std::vector<std::string> Poset::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (Index i : s) out.push_back(labels_[i]);
  return out;
}

std::optional<Index> Poset::top() const { return greatest(*this, all()); }
std::optional<Index> Poset::bottom() const { return least(*this, all()); }

std::vector<std::pair<Index, Index>> Poset::cover_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < size(); ++i) {
    for (Index j : upper_covers_[i]) out.emplace_back(i, j);
  }
  return out;
}

std::size_t Poset::strict_relation_count() const {
  std::size_t c = 0;
  for (const auto& u : up_) c += u.size() - 1;
  return c;
}

Poset dual(const Poset& p) {
  std::vector<ElementSet> above(p.size());
  for (Index i = 0; i < p.size(); ++i) above[i] = p.down(i);
  return Poset::from_relation(p.labels(), above);
}

ElementSet bound_set(const Poset& p, ElementSet s, BoundSide side) {
  if (s.empty()) throw Error(ErrorCode::EmptySubset, "bounds of the empty set are not defined");
  ElementSet bounds = p.all();
  for (Index i : s) bounds &= side == BoundSide::Lower ? p.down(i) : p.up(i);
  return bounds;
}

std::optional<Index> greatest(const Poset& p, ElementSet s) {
  for (Index i : s) {
    if (s.subset_of(p.down(i))) return i;
  }
  return std::nullopt;
}

std::optional<Index> least(const Poset& p, ElementSet s) {
  for (Index i : s) {
    if (s.subset_of(p.up(i))) return i;
  }
  return std::nullopt;
}

std::optional<Index> extremum(const Poset& p, ElementSet s, Bound kind) {
  if (kind == Bound::Meet) return greatest(p, bound_set(p, s, BoundSide::Lower));
  return least(p, bound_set(p, s, BoundSide::Upper));
}

ElementSet up_closure(const Poset& p, ElementSet s) {
  ElementSet out;
  for (Index i : s) out |= p.up(i);
  return out;
}

ElementSet down_closure(const Poset& p, ElementSet s) {
  ElementSet out;
  for (Index i : s) out |= p.down(i);
  return out;
}

bool is_up_closed(const Poset& p, ElementSet s) { return up_closure(p, s) == s; }

ElementSet minimal_elements(const Poset& p, ElementSet s) {
  ElementSet out;
  for (Index i : s) {
    if ((s & p.down(i)) == ElementSet::singleton(i)) out.insert(i);
  }
  return out;
}

ElementSet maximal_elements(const Poset& p, ElementSet s) {
  ElementSet out;
  for (Index i : s) {
    if ((s & p.up(i)) == ElementSet::singleton(i)) out.insert(i);
  }
  return out;
}

bool is_antichain(const Poset& p, ElementSet s) { return minimal_elements(p, s) == s; }

namespace {

struct ConstraintScan {
  const Poset& poset;
  Bound kind;
  unsigned limit;  // |A| < limit
  std::vector<Constraint>& out;

  // Pre-order DFS over antichains in increasing index order, so output is
  // lexicographic. `bounds` holds the common lower (upper) bounds of `members`;
  // once it is empty no extension has a meet (join).
  void extend(Index start, ElementSet members, ElementSet comparable, ElementSet bounds) {
    for (Index i = start; i < poset.size(); ++i) {
      if (comparable.contains(i)) continue;
      const ElementSet next_bounds = bounds & (kind == Bound::Meet ? poset.down(i) : poset.up(i));
      if (next_bounds.empty()) continue;
      const ElementSet next = members | ElementSet::singleton(i);
      if (next.size() >= 2) {
        auto e = kind == Bound::Meet ? greatest(poset, next_bounds) : least(poset, next_bounds);
        if (e) out.push_back({next, *e});
      }
      if (next.size() + 1 < limit) {
        extend(i + 1, next, comparable | poset.up(i) | poset.down(i), next_bounds);
      }
    }
  }
};

}  // namespace

std::vector<Constraint> antichain_constraints(const Poset& p, Arity bound, Bound kind) {
  std::vector<Constraint> out;
  const unsigned limit = bound.effective(p.size());
  if (limit <= 2) return out;
  ConstraintScan scan{p, kind, limit, out};
  scan.extend(0, ElementSet{}, ElementSet{}, p.all());
  return out;
}

}  // namespace posrep
