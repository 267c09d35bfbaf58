#include "posrep/representation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "posrep/error.hpp"

namespace posrep {

const char* to_string(DecisionMethod m) {
  switch (m) {
    case DecisionMethod::PerPairSearch: return "per-pair-search";
    case DecisionMethod::FullEnumeration: return "full-enumeration";
    case DecisionMethod::Trivial: return "trivial";
  }
  return "?";
}

const char* to_string(RepresentationViolationKind kind) {
  switch (kind) {
    case RepresentationViolationKind::OrderNotPreserved: return "order-not-preserved";
    case RepresentationViolationKind::OrderNotReflected: return "order-not-reflected";
    case RepresentationViolationKind::MeetNotIntersection: return "meet-not-intersection";
    case RepresentationViolationKind::JoinNotUnion: return "join-not-union";
    case RepresentationViolationKind::TopNotGround: return "top-not-ground";
    case RepresentationViolationKind::BottomNotEmpty: return "bottom-not-empty";
  }
  return "?";
}

std::vector<std::pair<Index, Index>> SeparationReport::failures() const {
  std::vector<std::pair<Index, Index>> out;
  for (const auto& o : pairs) {
    if (!o.witness) out.emplace_back(o.p, o.q);
  }
  return out;
}

namespace {

bool is_bound_two(Arity a) { return !a.is_all() && a.value() == 2; }

// Point filter of ground point x: {p : x in h(p)}.
ElementSet preimage(const Representation& h, std::size_t x) {
  ElementSet s;
  for (Index i = 0; i < h.images.size(); ++i) {
    if (h.images[i].test(x)) s.insert(i);
  }
  return s;
}

SeparationReport decide_trivially(const Poset& p, Signature sig) {
  const Representation h =
      trivial_representation(p, is_bound_two(sig.alpha) ? TrivialSide::Joins : TrivialSide::Meets);
  SeparationReport report{sig, true, DecisionMethod::Trivial, {}};
  for (Index a = 0; a < p.size(); ++a) {
    for (Index b = 0; b < p.size(); ++b) {
      if (p.leq(a, b)) continue;
      const PointSet only_a = h.images[a] - h.images[b];
      PairOutcome o{a, b, std::nullopt};
      if (only_a.any()) o.witness = preimage(h, only_a.find_first());
      report.representable = report.representable && o.witness.has_value();
      report.pairs.push_back(o);
    }
  }
  return report;
}

}  // namespace

SeparationReport decide_representable(const Poset& p, Signature sig, const DecideOptions& options) {
  sig = sig.canonical(p.size());
  if (is_bound_two(sig.alpha) || is_bound_two(sig.beta)) return decide_trivially(p, sig);

  const FilterTables tables(p, sig);
  SeparationReport report{sig, true, options.method, {}};

  std::vector<ElementSet> known;  // filters found so far (or all filters)
  if (options.method == DecisionMethod::FullEnumeration) {
    for (const auto& f : enumerate_filters(tables, FilterPolicy::All, options.budget)) known.push_back(f.members);
  }
  // No filter holds a while omitting b; then the same holds for any a' <= a, b' >= b.
  std::vector<std::pair<Index, Index>> refuted;

  for (Index a = 0; a < p.size(); ++a) {
    for (Index b = 0; b < p.size(); ++b) {
      if (p.leq(a, b)) continue;
      PairOutcome o{a, b, std::nullopt};
      for (ElementSet f : known) {
        if (f.contains(a) && !f.contains(b)) {
          o.witness = f;
          break;
        }
      }
      if (!o.witness && options.method == DecisionMethod::PerPairSearch) {
        const bool implied = std::any_of(refuted.begin(), refuted.end(), [&](const auto& r) {
          return p.leq(a, r.first) && p.leq(r.second, b);
        });
        if (!implied) {
          if (auto f = extend_to_filter(tables, p.up(a), b, options.budget)) {
            o.witness = f->members;
            known.push_back(f->members);
          } else {
            refuted.emplace_back(a, b);
          }
        }
      }
      report.representable = report.representable && o.witness.has_value();
      report.pairs.push_back(o);
    }
  }
  return report;
}

std::optional<Representation> canonical_representation(const Poset& p, Signature sig, std::uint64_t budget) {
  sig = sig.canonical(p.size());
  if (!decide_representable(p, sig, {DecisionMethod::PerPairSearch, budget}).representable) return std::nullopt;
  const auto filters = enumerate_filters(p, sig, FilterPolicy::Canonical, budget);
  Representation h;
  h.signature = sig;
  for (std::size_t k = 0; k < filters.size(); ++k) h.ground.push_back("f" + std::to_string(k));
  h.images.assign(p.size(), PointSet(filters.size()));
  for (std::size_t k = 0; k < filters.size(); ++k) {
    for (Index i : filters[k].members) h.images[i].set(k);
  }
  if (!verify_representation(p, h).empty()) {
    throw std::logic_error("canonical representation failed verification at " + sig.to_string());
  }
  return h;
}

std::vector<RepresentationViolation> verify_representation(const Poset& p, const Representation& h) {
  using Kind = RepresentationViolationKind;
  if (h.images.size() != p.size()) {
    throw Error(ErrorCode::UnknownElement, "representation defines " + std::to_string(h.images.size()) +
                                               " images for " + std::to_string(p.size()) + " elements");
  }
  for (const auto& img : h.images) {
    if (img.size() != h.ground.size()) throw Error(ErrorCode::UnknownElement, "image not over the ground set");
  }
  std::vector<RepresentationViolation> out;
  for (Index a = 0; a < p.size(); ++a) {
    for (Index b = 0; b < p.size(); ++b) {
      if (a == b) continue;
      const bool contained = h.images[a].is_subset_of(h.images[b]);
      if (p.leq(a, b) && !contained) out.push_back({Kind::OrderNotPreserved, {a, b}, std::nullopt});
      if (!p.leq(a, b) && contained) out.push_back({Kind::OrderNotReflected, {a, b}, std::nullopt});
    }
  }
  const FilterTables tables(p, h.signature);
  for (const auto& c : tables.meets()) {
    PointSet meet(h.ground.size());
    meet.set();
    for (Index i : c.antichain) meet &= h.images[i];
    if (meet != h.images[c.extremum]) {
      out.push_back({Kind::MeetNotIntersection, {c.antichain.begin(), c.antichain.end()}, c.extremum});
    }
  }
  for (const auto& c : tables.joins()) {
    PointSet join(h.ground.size());
    for (Index i : c.antichain) join |= h.images[i];
    if (join != h.images[c.extremum]) {
      out.push_back({Kind::JoinNotUnion, {c.antichain.begin(), c.antichain.end()}, c.extremum});
    }
  }
  if (auto t = p.top(); t && !h.images[*t].all()) out.push_back({Kind::TopNotGround, {*t}, std::nullopt});
  if (auto b = p.bottom(); b && h.images[*b].any()) out.push_back({Kind::BottomNotEmpty, {*b}, std::nullopt});
  return out;
}

std::vector<PointFilter> point_filters(const Poset& p, const Representation& h) {
  if (!verify_representation(p, h).empty()) {
    throw Error(ErrorCode::InvalidParameter, "point filters requested for a representation that does not verify");
  }
  const FilterTables tables(p, h.signature);
  std::vector<PointFilter> out;
  for (std::size_t x = 0; x < h.ground.size(); ++x) {
    const ElementSet members = preimage(h, x);
    out.push_back({x, members, tables.check(members)});
  }
  return out;
}

Representation trivial_representation(const Poset& p, TrivialSide side) {
  Representation h;
  std::optional<Index> dropped;
  if (side == TrivialSide::Meets) {
    h.signature = {Arity::all(), Arity::finite(2)};
    dropped = p.bottom();
  } else {
    h.signature = {Arity::finite(2), Arity::all()};
    dropped = p.top();
  }
  std::vector<std::size_t> point_of(p.size(), 0);
  for (Index i = 0; i < p.size(); ++i) {
    if (dropped == i) continue;
    point_of[i] = h.ground.size();
    h.ground.push_back(p.label(i));
  }
  h.images.assign(p.size(), PointSet(h.ground.size()));
  for (Index i = 0; i < p.size(); ++i) {
    const ElementSet image = side == TrivialSide::Meets ? p.down(i) : p.all() - p.up(i);
    for (Index j : image) {
      if (dropped != j) h.images[i].set(point_of[j]);
    }
  }
  return h;
}

bool SpectrumReport::at(Signature sig) const {
  auto pos = [&](Arity a) {
    auto it = std::find(bounds.begin(), bounds.end(), a);
    if (it == bounds.end()) throw Error(ErrorCode::InvalidParameter, "signature not on the spectrum grid");
    return static_cast<std::size_t>(it - bounds.begin());
  };
  return representable[pos(sig.alpha)][pos(sig.beta)];
}

SpectrumReport spectrum(const Poset& p, std::uint64_t budget) {
  const std::size_t n = p.size();
  SpectrumReport report;
  for (unsigned k = 2; k <= n; ++k) report.bounds.push_back(Arity::finite(k));
  report.bounds.push_back(Arity::all());
  const std::size_t m = report.bounds.size();
  report.representable.assign(m, std::vector<bool>(m, false));

  // Two signatures with the same active constraints have the same answer.
  const auto meets = antichain_constraints(p, Arity::all(), Bound::Meet);
  const auto joins = antichain_constraints(p, Arity::all(), Bound::Join);
  auto active = [&](const std::vector<Constraint>& cs, Arity a) {
    const unsigned limit = a.effective(n);
    return static_cast<std::size_t>(
        std::count_if(cs.begin(), cs.end(), [&](const Constraint& c) { return c.antichain.size() < limit; }));
  };
  std::map<std::pair<std::size_t, std::size_t>, bool> by_class;

  std::vector<std::vector<int>> known(m, std::vector<int>(m, -1));
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      if (known[i][j] < 0) {
        const Arity a = report.bounds[i];
        const Arity b = report.bounds[j];
        bool yes;
        if (is_bound_two(a) || is_bound_two(b)) {
          yes = true;
        } else {
          const auto key = std::make_pair(active(meets, a), active(joins, b));
          auto it = by_class.find(key);
          if (it == by_class.end()) {
            yes = decide_representable(p, {a, b}, {DecisionMethod::PerPairSearch, budget}).representable;
            ++report.decided;
            it = by_class.emplace(key, yes).first;
          }
          yes = it->second;
        }
        // Yes propagates to weaker signatures, no to stronger ones.
        for (std::size_t x = 0; x < m; ++x) {
          for (std::size_t y = 0; y < m; ++y) {
            if (yes && x <= i && y <= j) known[x][y] = 1;
            if (!yes && x >= i && y >= j) known[x][y] = 0;
          }
        }
      }
      report.representable[i][j] = known[i][j] == 1;
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!report.representable[i][j] || is_bound_two(report.bounds[i]) || is_bound_two(report.bounds[j])) continue;
      bool maximal = true;
      for (std::size_t x = i; x < m && maximal; ++x) {
        for (std::size_t y = j; y < m; ++y) {
          if ((x != i || y != j) && report.representable[x][y]) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) report.frontier.push_back({report.bounds[i], report.bounds[j]});
    }
  }
  return report;
}

Envelope distributive_envelope(const Poset& p, const Representation& h, std::size_t max_elements) {
  std::set<PointSet> closed;
  std::vector<PointSet> pending;
  auto add = [&](const PointSet& s) {
    if (closed.insert(s).second) {
      if (closed.size() > max_elements) {
        throw Error(ErrorCode::SizeExceeded,
                    "union/intersection closure exceeds " + std::to_string(max_elements) + " sets");
      }
      pending.push_back(s);
    }
  };
  for (const auto& img : h.images) add(img);
  while (!pending.empty()) {
    const PointSet s = pending.back();
    pending.pop_back();
    const std::vector<PointSet> snapshot(closed.begin(), closed.end());
    for (const auto& t : snapshot) {
      add(s | t);
      add(s & t);
    }
  }

  Envelope env;
  env.sets.assign(closed.begin(), closed.end());
  std::stable_sort(env.sets.begin(), env.sets.end(),
                   [](const PointSet& a, const PointSet& b) { return a.count() < b.count(); });
  std::vector<std::string> labels;
  for (const auto& s : env.sets) {
    std::string label = "{";
    for (auto x = s.find_first(); x != PointSet::npos; x = s.find_next(x)) {
      if (label.size() > 1) label += ",";
      label += h.ground[x];
    }
    labels.push_back(label + "}");
  }
  std::vector<ElementSet> above(env.sets.size());
  for (Index i = 0; i < env.sets.size(); ++i) {
    for (Index j = 0; j < env.sets.size(); ++j) {
      if (env.sets[i].is_subset_of(env.sets[j])) above[i].insert(j);
    }
  }
  env.lattice = Poset::from_relation(std::move(labels), above);
  for (Index i = 0; i < p.size(); ++i) {
    env.embedding.push_back(static_cast<Index>(
        std::find(env.sets.begin(), env.sets.end(), h.images[i]) - env.sets.begin()));
  }
  return env;
}

}  // namespace posrep
