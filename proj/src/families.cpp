#include "posrep/families.hpp"

#include <random>

#include "posrep/error.hpp"

namespace posrep {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParameter, what);
}

std::string set_label(const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s + "}";
}

// Subsets of {0..n-1} of size k in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::int64_t param(const FamilySpec& spec, const std::string& key) {
  auto it = spec.parameters.find(key);
  if (it == spec.parameters.end()) throw Error(ErrorCode::InvalidParameter, spec.family + " needs parameter " + key);
  return it->second;
}

}  // namespace

Poset pn(int n) {
  require(n >= 4, "pn needs n >= 4");
  std::vector<std::string> labels;
  std::vector<LabelPair> covers;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (const auto& s : combinations(n, n - 2)) {
    std::vector<std::string> members;
    for (int i : s) members.push_back(std::to_string(i + 1));
    const std::string y = "y" + set_label(members);
    labels.push_back(y);
    for (int i : s) covers.emplace_back("x" + std::to_string(i + 1), y);
  }
  labels.push_back("p");
  labels.push_back("q");
  for (int i = 1; i <= n; ++i) {
    covers.emplace_back("q", "x" + std::to_string(i));
    covers.emplace_back("x" + std::to_string(i), "p");
  }
  return Poset::build(std::move(labels), covers);
}

Poset express_poset() {
  return Poset::build({"p", "q", "r", "join_qr", "meet_p_qr"},
                      {{"meet_p_qr", "p"}, {"meet_p_qr", "join_qr"}, {"q", "join_qr"}, {"r", "join_qr"}});
}

Poset d2poset() {
  return Poset::build({"top", "a", "p", "b", "q", "bot1", "bot2"},
                      {{"bot1", "a"},
                       {"bot1", "p"},
                       {"bot1", "q"},
                       {"bot2", "b"},
                       {"bot2", "p"},
                       {"bot2", "q"},
                       {"a", "top"},
                       {"p", "top"},
                       {"b", "top"}});
}

namespace {

const std::vector<std::string> kPrimeIdealGround = {"y", "x1", "x2", "x3", "x4"};
// Members as indices into kPrimeIdealGround.
const std::vector<std::vector<int>> kPrimeIdealSets = {
    {1, 4}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1}, {2}, {3}, {4},
};

std::string prime_ideal_label(const std::vector<int>& members) {
  std::vector<std::string> names;
  for (int m : members) names.push_back(kPrimeIdealGround[m]);
  return set_label(names);
}

}  // namespace

Poset prime_ideal_poset() {
  std::vector<std::string> labels;
  std::vector<ElementSet> above(kPrimeIdealSets.size());
  for (std::size_t i = 0; i < kPrimeIdealSets.size(); ++i) {
    labels.push_back(prime_ideal_label(kPrimeIdealSets[i]));
    for (std::size_t j = 0; j < kPrimeIdealSets.size(); ++j) {
      bool inside = true;
      for (int m : kPrimeIdealSets[i]) {
        bool found = false;
        for (int k : kPrimeIdealSets[j]) found = found || k == m;
        inside = inside && found;
      }
      if (inside) above[i].insert(j);
    }
  }
  return Poset::from_relation(std::move(labels), above);
}

std::vector<std::string> prime_ideal_gamma() {
  return {prime_ideal_label({0, 1}), prime_ideal_label({2, 3}), prime_ideal_label({0, 4})};
}

Representation prime_ideal_identity_representation() {
  Representation h;
  h.ground = kPrimeIdealGround;
  h.signature = {Arity::all(), Arity::all()};
  for (const auto& members : kPrimeIdealSets) {
    PointSet s(h.ground.size());
    for (int m : members) s.set(m);
    h.images.push_back(s);
  }
  return h;
}

Representation express_representation() {
  // Points a, b, c, d; element order p, q, r, join_qr, meet_p_qr.
  Representation h;
  h.ground = {"a", "b", "c", "d"};
  h.signature = {Arity::all(), Arity::all()};
  auto set = [](std::initializer_list<int> pts) {
    PointSet s(4);
    for (int i : pts) s.set(i);
    return s;
  };
  h.images = {set({0, 2, 3}), set({1, 3}), set({1, 2}), set({1, 2, 3}), set({2, 3})};
  return h;
}

Poset boolean_lattice(int atoms) {
  require(atoms >= 0 && atoms <= 6, "boolean needs 0 <= n <= 6");
  const std::size_t size = std::size_t{1} << atoms;
  std::vector<std::string> labels;
  std::vector<ElementSet> above(size);
  for (std::size_t s = 0; s < size; ++s) {
    std::vector<std::string> names;
    for (int i = 0; i < atoms; ++i) {
      if ((s >> i) & 1U) names.push_back(std::to_string(i + 1));
    }
    labels.push_back(set_label(names));
    for (std::size_t t = 0; t < size; ++t) {
      if ((s & t) == s) above[s].insert(t);
    }
  }
  return Poset::from_relation(std::move(labels), above);
}

Poset chain(int n) {
  require(n >= 0, "chain needs n >= 0");
  std::vector<std::string> labels;
  std::vector<LabelPair> covers;
  for (int i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i > 0) covers.emplace_back(labels[i - 1], labels[i]);
  }
  return Poset::build(std::move(labels), covers);
}

Poset antichain(int n) {
  require(n >= 0, "antichain needs n >= 0");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return Poset::build(std::move(labels), {});
}

Poset m3() {
  return Poset::build({"bot", "a", "b", "c", "top"},
                      {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}});
}

Poset n5() {
  return Poset::build({"bot", "a", "b", "c", "top"},
                      {{"bot", "a"}, {"a", "c"}, {"c", "top"}, {"bot", "b"}, {"b", "top"}});
}

Poset random_poset(int n, double probability, std::uint64_t seed) {
  require(n >= 0 && static_cast<std::size_t>(n) <= kMaxElements, "random needs 0 <= n <= 64");
  require(probability >= 0.0 && probability <= 1.0, "random needs 0 <= prob <= 1");
  // Raw engine output keeps the stream identical across standard libraries.
  std::mt19937_64 rng(seed);
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<std::string> labels;
  std::vector<ElementSet> above(n);
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  // Edges only go forward in index order, so index order is a linear extension.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (uniform() < probability) above[i].insert(j);
    }
  }
  return Poset::from_relation(std::move(labels), above);
}

std::vector<std::string> family_names() {
  return {"pn", "express", "d2poset", "prime_ideal", "boolean", "chain", "antichain", "m3", "n5", "random"};
}

Poset generate(const FamilySpec& spec) {
  const auto& f = spec.family;
  if (f == "pn") return pn(static_cast<int>(param(spec, "n")));
  if (f == "express") return express_poset();
  if (f == "d2poset") return d2poset();
  if (f == "prime_ideal") return prime_ideal_poset();
  if (f == "boolean") return boolean_lattice(static_cast<int>(param(spec, "n")));
  if (f == "chain") return chain(static_cast<int>(param(spec, "n")));
  if (f == "antichain") return antichain(static_cast<int>(param(spec, "n")));
  if (f == "m3") return m3();
  if (f == "n5") return n5();
  if (f == "random") {
    if (!spec.seed) throw Error(ErrorCode::InvalidParameter, "random needs a seed");
    return random_poset(static_cast<int>(param(spec, "n")), spec.probability, *spec.seed);
  }
  throw Error(ErrorCode::UnknownFamily, f);
}

std::string Claim::describe() const {
  switch (kind) {
    case Kind::Representable: return std::string(expected ? "" : "not ") + "representable" + signature.to_string();
    case Kind::Lmd: return std::string("lmd:") + (expected ? "true" : "false");
    case Kind::D2bar: return std::string("d2bar:") + (expected ? "true" : "false");
    case Kind::CompletelyRepresentable:
      return std::string("completely_representable:") + (expected ? "true" : "false");
    case Kind::ExtensionFails: return "extension_fails:(" + set_label(seed) + "," + forbidden + ")";
  }
  return "?";
}

std::vector<Claim> fixture_expectations(const std::string& family, std::optional<int> n) {
  using K = Claim::Kind;
  const Signature complete{Arity::all(), Arity::all()};
  if (family == "express") {
    return {{K::Lmd, false, {}, {}, {}}, {K::Representable, true, complete, {}, {}}};
  }
  if (family == "d2poset") {
    return {{K::D2bar, true, {}, {}, {}},
            {K::Representable, false, {Arity::finite(3), Arity::finite(3)}, {}, {}}};
  }
  if (family == "prime_ideal") {
    return {{K::CompletelyRepresentable, true, {}, {}, {}},
            {K::ExtensionFails, true, {}, prime_ideal_gamma(), "{x1,x4}"}};
  }
  if (family == "pn") {
    if (!n) throw Error(ErrorCode::InvalidParameter, "pn expectations need n");
    require(*n >= 4, "pn needs n >= 4");
    const auto k = static_cast<unsigned>(*n);
    std::vector<Claim> out;
    for (unsigned m = 3; m < k; ++m) {
      out.push_back({K::Representable, true, {Arity::finite(m), Arity::finite(m)}, {}, {}});
    }
    for (unsigned a = 3; a <= k; ++a) {
      out.push_back({K::Representable, false, {Arity::finite(a), Arity::finite(k)}, {}, {}});
    }
    out.push_back({K::Representable, false, {Arity::all(), Arity::finite(k)}, {}, {}});
    out.push_back({K::Representable, true, {Arity::all(), Arity::finite(k - 1)}, {}, {}});
    return out;
  }
  throw Error(ErrorCode::UnknownFamily, family + " has no recorded expectations");
}

}  // namespace posrep
