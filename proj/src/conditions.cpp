#include "posrep/conditions.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "posrep/error.hpp"

namespace posrep {

const char* to_string(TripleFailure f) {
  switch (f) {
    case TripleFailure::RightUndefined: return "right-undefined";
    case TripleFailure::Unequal: return "unequal";
  }
  return "?";
}

namespace {

// Binary meets and joins where they exist.
class PartialOps {
 public:
  explicit PartialOps(const Poset& p) : n_(p.size()), meet_(n_ * n_), join_(n_ * n_) {
    for (Index a = 0; a < n_; ++a) {
      for (Index b = 0; b < n_; ++b) {
        const ElementSet pair = ElementSet::singleton(a) | ElementSet::singleton(b);
        meet_[a * n_ + b] = extremum(p, pair, Bound::Meet);
        join_[a * n_ + b] = extremum(p, pair, Bound::Join);
      }
    }
  }
  std::optional<Index> meet(Index a, Index b) const { return meet_[a * n_ + b]; }
  std::optional<Index> join(Index a, Index b) const { return join_[a * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<std::optional<Index>> meet_;
  std::vector<std::optional<Index>> join_;
};

enum class Strictness { Lmd, D2bar };

ConditionReport check_triples(const Poset& p, Strictness mode) {
  ConditionReport report{mode == Strictness::Lmd ? "lmd" : "d2bar", true, std::nullopt};
  const PartialOps ops(p);
  const std::size_t n = p.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        const auto yz = ops.join(y, z);
        if (!yz) continue;
        const auto left = ops.meet(x, *yz);
        if (!left) continue;
        TripleWitness w{x, y, z, *left, ops.meet(x, y), ops.meet(x, z), std::nullopt, TripleFailure::Unequal};
        if (w.xy && w.xz) w.right = ops.join(*w.xy, *w.xz);
        if (!w.right) {
          if (mode == Strictness::D2bar) continue;
          w.failure = TripleFailure::RightUndefined;
        } else if (*w.right == *left) {
          continue;
        }
        report.holds = false;
        report.counterexample = w;
        return report;
      }
    }
  }
  return report;
}

}  // namespace

ConditionReport check_lmd(const Poset& p) { return check_triples(p, Strictness::Lmd); }
ConditionReport check_d2bar(const Poset& p) { return check_triples(p, Strictness::D2bar); }

std::optional<LatticeOps> LatticeOps::of(const Poset& p) {
  if (p.size() == 0) return std::nullopt;
  LatticeOps ops;
  ops.n_ = p.size();
  ops.meet_.resize(ops.n_ * ops.n_);
  ops.join_.resize(ops.n_ * ops.n_);
  for (Index a = 0; a < ops.n_; ++a) {
    for (Index b = 0; b < ops.n_; ++b) {
      const ElementSet pair = ElementSet::singleton(a) | ElementSet::singleton(b);
      const auto m = extremum(p, pair, Bound::Meet);
      const auto j = extremum(p, pair, Bound::Join);
      if (!m || !j) return std::nullopt;
      ops.meet_[a * ops.n_ + b] = *m;
      ops.join_[a * ops.n_ + b] = *j;
    }
  }
  ops.bottom_ = *p.bottom();
  ops.top_ = *p.top();
  return ops;
}

LatticeOps::LatticeOps(const Poset& p) {
  auto ops = of(p);
  if (!ops) throw Error(ErrorCode::InvalidParameter, "poset is not a lattice");
  *this = std::move(*ops);
}

Index LatticeOps::join_all(ElementSet s) const {
  Index acc = bottom_;
  for (Index i : s) acc = join(acc, i);
  return acc;
}

Index LatticeOps::meet_all(ElementSet s) const {
  Index acc = top_;
  for (Index i : s) acc = meet(acc, i);
  return acc;
}

namespace {

bool identity_holds(const LatticeOps& L, std::size_t n) {
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
      }
    }
  }
  return true;
}

bool has_m3_or_n5(const Poset& p, const LatticeOps& L) {
  const std::size_t n = p.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (p.comparable(a, b)) continue;
      for (Index c = 0; c < n; ++c) {
        if (c == a || c == b || p.comparable(b, c)) continue;
        // M3: three pairwise incomparable elements with common pairwise meet and join.
        if (!p.comparable(a, c)) {
          const Index o = L.meet(a, b);
          const Index i = L.join(a, b);
          if (L.meet(a, c) == o && L.meet(b, c) == o && L.join(a, c) == i && L.join(b, c) == i) return true;
        }
        // N5: a < c, b off to the side, {meet, a, c, b, join} closed.
        if (p.less(a, c) && L.join(a, b) == L.join(c, b) && L.meet(a, b) == L.meet(c, b)) return true;
      }
    }
  }
  return false;
}

// Every pair (join X, join {p meet x}) over nonempty X is reachable by adding
// one element at a time, so the reachable pairs are at most n^2.
bool frame_law_holds(const LatticeOps& L, std::size_t n, bool dual) {
  auto op = [&](Index a, Index b) { return dual ? L.meet(a, b) : L.join(a, b); };
  auto dist = [&](Index a, Index b) { return dual ? L.join(a, b) : L.meet(a, b); };
  for (Index p = 0; p < n; ++p) {
    std::set<std::pair<Index, Index>> seen;
    std::vector<std::pair<Index, Index>> work;
    for (Index x = 0; x < n; ++x) {
      if (seen.emplace(x, dist(p, x)).second) work.emplace_back(x, dist(p, x));
    }
    while (!work.empty()) {
      const auto [a, b] = work.back();
      work.pop_back();
      if (dist(p, a) != b) return false;
      for (Index y = 0; y < n; ++y) {
        const std::pair<Index, Index> next{op(a, y), op(b, dist(p, y))};
        if (seen.insert(next).second) work.push_back(next);
      }
    }
  }
  return true;
}

}  // namespace

LatticeProfile lattice_profile(const Poset& p) {
  LatticeProfile out;
  const auto ops = LatticeOps::of(p);
  if (!ops) return out;
  const LatticeOps& L = *ops;
  const std::size_t n = p.size();
  out.is_lattice = true;
  out.distributive_identity = identity_holds(L, n);
  out.no_m3_n5 = !has_m3_or_n5(p, L);
  if (out.distributive_identity != out.no_m3_n5) {
    throw std::logic_error("distributivity tests disagree");
  }
  out.is_distributive = out.distributive_identity;

  for (Index j = 0; j < n; ++j) {
    const ElementSet below = p.down(j) - ElementSet::singleton(j);
    const ElementSet above = p.up(j) - ElementSet::singleton(j);
    if (L.join_all(below) != j) out.join_irreducibles.insert(j);
    if (L.meet_all(above) != j) out.meet_irreducibles.insert(j);
    if (p.lower_covers(j).size() == 1) out.single_lower_cover.insert(j);
    if (p.upper_covers(j).size() == 1) out.single_upper_cover.insert(j);
  }
  out.join_dense = true;
  out.meet_dense = true;
  for (Index x = 0; x < n; ++x) {
    if (L.join_all(out.join_irreducibles & p.down(x)) != x) out.join_dense = false;
    if (L.meet_all(out.meet_irreducibles & p.up(x)) != x) out.meet_dense = false;
  }
  out.frame_law = frame_law_holds(L, n, false);
  out.coframe_law = frame_law_holds(L, n, true);
  return out;
}

CompleteRepresentability completely_representable(const Poset& p, std::uint64_t budget) {
  CompleteRepresentability out;
  const auto report = decide_representable(p, {Arity::all(), Arity::all()}, {DecisionMethod::PerPairSearch, budget});
  out.representable = report.representable;
  if (auto f = report.failures(); !f.empty()) out.failing_pair = f.front();
  const auto profile = lattice_profile(p);
  if (profile.is_lattice) {
    out.lattice_cross_checked = true;
    out.join_criterion = profile.join_dense && profile.frame_law;
    out.meet_criterion = profile.meet_dense && profile.coframe_law;
    if (out.join_criterion != out.representable || out.meet_criterion != out.representable) {
      throw std::logic_error("irreducible criteria disagree with the separation search");
    }
  }
  return out;
}

}  // namespace posrep
