#include "posrep/filters.hpp"

#include <algorithm>
#include <unordered_map>

#include "posrep/error.hpp"

namespace posrep {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotUpClosed: return "not-up-closed";
    case ViolationKind::MeetEscape: return "meet-escape";
    case ViolationKind::JoinNotPrime: return "join-not-prime";
  }
  return "?";
}

namespace {

// A constraint (A, e) is redundant when some A \ {a} has the same extremum e:
// every B between a minimal A' and A then has extremum e as well.
std::vector<Constraint> minimal_constraints(const std::vector<Constraint>& all) {
  std::unordered_map<ElementSet, Index> extremum_of;
  extremum_of.reserve(all.size() * 2);
  for (const auto& c : all) extremum_of.emplace(c.antichain, c.extremum);
  std::vector<Constraint> out;
  for (const auto& c : all) {
    bool minimal = true;
    if (c.antichain.size() > 2) {
      for (Index a : c.antichain) {
        auto it = extremum_of.find(c.antichain - ElementSet::singleton(a));
        if (it != extremum_of.end() && it->second == c.extremum) {
          minimal = false;
          break;
        }
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

}  // namespace

FilterTables::FilterTables(const Poset& poset, Signature signature)
    : poset_(&poset),
      signature_(signature.canonical(poset.size())),
      meets_(antichain_constraints(poset, signature_.alpha, Bound::Meet)),
      joins_(antichain_constraints(poset, signature_.beta, Bound::Join)),
      minimal_meets_(minimal_constraints(meets_)),
      minimal_joins_(minimal_constraints(joins_)),
      meets_by_extremum_(poset.size()) {
  for (const auto& c : minimal_meets_) meets_by_extremum_[c.extremum].push_back(c.antichain);
}

std::optional<FilterViolation> FilterTables::check(ElementSet s) const {
  for (Index i : s) {
    const ElementSet escaped = poset_->up(i) - s;
    if (!escaped.empty()) return FilterViolation{ViolationKind::NotUpClosed, ElementSet::singleton(i), escaped.first()};
  }
  for (const auto& c : meets_) {
    if (c.antichain.subset_of(s) && !s.contains(c.extremum)) {
      return FilterViolation{ViolationKind::MeetEscape, c.antichain, c.extremum};
    }
  }
  for (const auto& c : joins_) {
    if (s.contains(c.extremum) && !c.antichain.intersects(s)) {
      return FilterViolation{ViolationKind::JoinNotPrime, c.antichain, c.extremum};
    }
  }
  return std::nullopt;
}

bool FilterTables::accepts(ElementSet s) const {
  if (!is_up_closed(*poset_, s)) return false;
  for (const auto& c : minimal_meets_) {
    if (c.antichain.subset_of(s) && !s.contains(c.extremum)) return false;
  }
  for (const auto& c : minimal_joins_) {
    if (s.contains(c.extremum) && !c.antichain.intersects(s)) return false;
  }
  return true;
}

std::optional<FilterViolation> is_filter(const Poset& p, ElementSet s, Signature sig) {
  return FilterTables(p, sig).check(s);
}

namespace {

class UpSetEnumeration {
 public:
  UpSetEnumeration(const FilterTables& tables, std::uint64_t max_upsets)
      : tables_(tables), poset_(tables.poset()), max_upsets_(max_upsets) {
    // Descending linear extension: x < y implies |up(y)| < |up(x)|.
    order_.resize(poset_.size());
    for (Index i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Index a, Index b) { return poset_.up(a).size() < poset_.up(b).size(); });
  }

  std::vector<ElementSet> run() {
    visit(0, ElementSet{});
    std::sort(found_.begin(), found_.end(), LexLess{});
    return std::move(found_);
  }

 private:
  void visit(std::size_t depth, ElementSet current) {
    if (depth == order_.size()) {
      if (++leaves_ > max_upsets_) {
        throw Error(ErrorCode::BudgetExceeded,
                    "up-set enumeration cap of " + std::to_string(max_upsets_) + " reached");
      }
      if (primes_hold(current)) found_.push_back(current);
      return;
    }
    const Index v = order_[depth];
    // Everything above v is already decided.
    const bool can_include = (poset_.up(v) - ElementSet::singleton(v)).subset_of(current);
    bool forced = false;
    for (ElementSet a : tables_.meets_by_extremum()[v]) {
      if (a.subset_of(current)) {
        forced = true;
        break;
      }
    }
    if (!forced) visit(depth + 1, current);
    if (can_include) visit(depth + 1, current | ElementSet::singleton(v));
  }

  bool primes_hold(ElementSet s) const {
    for (const auto& c : tables_.minimal_joins()) {
      if (s.contains(c.extremum) && !c.antichain.intersects(s)) return false;
    }
    return true;
  }

  const FilterTables& tables_;
  const Poset& poset_;
  std::uint64_t max_upsets_;
  std::uint64_t leaves_ = 0;
  std::vector<Index> order_;
  std::vector<ElementSet> found_;
};

}  // namespace

std::vector<Filter> enumerate_filters(const FilterTables& tables, FilterPolicy policy, std::uint64_t max_upsets) {
  const auto bottom = tables.poset().bottom();
  std::vector<Filter> out;
  for (ElementSet s : UpSetEnumeration(tables, max_upsets).run()) {
    if (policy == FilterPolicy::Canonical && (s.empty() || (bottom && s.contains(*bottom)))) continue;
    out.push_back({s, tables.signature()});
  }
  return out;
}

std::vector<Filter> enumerate_filters(const Poset& p, Signature sig, FilterPolicy policy, std::uint64_t max_upsets) {
  return enumerate_filters(FilterTables(p, sig), policy, max_upsets);
}

bool complement_is_ideal(const Poset& p, const Filter& f) {
  return !is_filter(dual(p), p.all() - f.members, f.signature.swapped()).has_value();
}

namespace {

struct Partial {
  ElementSet in;   // up-closed, committed members
  ElementSet out;  // down-closed, committed non-members
};

class ExtensionSearch {
 public:
  ExtensionSearch(const FilterTables& tables, std::uint64_t max_nodes)
      : tables_(tables), poset_(tables.poset()), max_nodes_(max_nodes) {}

  std::optional<ElementSet> run(Partial state) {
    if (++nodes_ > max_nodes_) {
      throw Error(ErrorCode::BudgetExceeded, "filter extension search exceeded " + std::to_string(max_nodes_) + " nodes");
    }
    if (!propagate(state)) return std::nullopt;

    const Constraint* branch = nullptr;
    ElementSet branch_options;
    for (const auto& c : tables_.minimal_joins()) {
      if (!state.in.contains(c.extremum) || c.antichain.intersects(state.in)) continue;
      const ElementSet options = c.antichain - state.out;
      if (branch == nullptr || options.size() < branch_options.size()) {
        branch = &c;
        branch_options = options;
      }
    }
    if (branch == nullptr) return state.in;

    ElementSet tried;
    for (Index a : branch_options) {
      Partial child{state.in | poset_.up(a), state.out | down_closure(poset_, tried)};
      if (auto found = run(child)) return found;
      tried.insert(a);
    }
    return std::nullopt;
  }

 private:
  // Unit propagation to a fixpoint. Returns false on contradiction.
  bool propagate(Partial& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      if (s.in.intersects(s.out)) return false;
      for (const auto& c : tables_.minimal_meets()) {
        const ElementSet missing = c.antichain - s.in;
        if (missing.empty()) {
          if (!s.in.contains(c.extremum)) {
            if (s.out.contains(c.extremum)) return false;
            s.in |= poset_.up(c.extremum);
            if (s.in.intersects(s.out)) return false;
            changed = true;
          }
        } else if (missing.size() == 1 && s.out.contains(c.extremum) && !s.out.contains(missing.first())) {
          s.out |= poset_.down(missing.first());
          if (s.in.intersects(s.out)) return false;
          changed = true;
        }
      }
      for (const auto& c : tables_.minimal_joins()) {
        if (s.in.contains(c.extremum)) {
          if (c.antichain.intersects(s.in)) continue;
          const ElementSet options = c.antichain - s.out;
          if (options.empty()) return false;
          if (options.size() == 1) {
            s.in |= poset_.up(options.first());
            if (s.in.intersects(s.out)) return false;
            changed = true;
          }
        } else if (!s.out.contains(c.extremum) && c.antichain.subset_of(s.out)) {
          s.out |= poset_.down(c.extremum);
          if (s.in.intersects(s.out)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  const FilterTables& tables_;
  const Poset& poset_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<Filter> extend_to_filter(const FilterTables& tables, ElementSet seed, std::optional<Index> forbidden,
                                       std::uint64_t max_nodes) {
  const Poset& p = tables.poset();
  Partial start{up_closure(p, seed), forbidden ? p.down(*forbidden) : ElementSet{}};
  auto found = ExtensionSearch(tables, max_nodes).run(start);
  if (!found) return std::nullopt;
  return Filter{*found, tables.signature()};
}

std::optional<Filter> extend_to_filter(const Poset& p, ElementSet seed, std::optional<Index> forbidden, Signature sig,
                                       std::uint64_t max_nodes) {
  return extend_to_filter(FilterTables(p, sig), seed, forbidden, max_nodes);
}

}  // namespace posrep
