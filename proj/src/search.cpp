#include "posrep/search.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <tuple>

#include "posrep/conditions.hpp"
#include "posrep/error.hpp"
#include "posrep/representation.hpp"

namespace posrep {

namespace {

std::vector<std::size_t> refine_colors(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> color(n, 0);
  std::size_t classes = 0;
  for (;;) {
    using Key = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
    std::vector<Key> sig(n);
    for (Index i = 0; i < n; ++i) {
      std::vector<std::size_t> below, above;
      for (Index j : p.down(i) - ElementSet::singleton(i)) below.push_back(color[j]);
      for (Index j : p.up(i) - ElementSet::singleton(i)) above.push_back(color[j]);
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[i] = {color[i], std::move(below), std::move(above)};
    }
    std::vector<Key> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Index i = 0; i < n; ++i) {
      color[i] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
    }
    if (distinct.size() == classes) return color;
    classes = distinct.size();
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Poset& p) : p_(p), n_(p.size()), color_(refine_colors(p)) {
    slot_color_ = color_;
    std::sort(slot_color_.begin(), slot_color_.end());
    order_.reserve(n_);
    code_.reserve(2 * n_);
  }

  CanonicalForm run() {
    place(0, ElementSet{});
    return best_;
  }

 private:
  // Fills position k; prunes once the code prefix exceeds the best complete code.
  void place(std::size_t k, ElementSet used) {
    if (k == n_) {
      if (!have_best_ || code_ < best_.code) {
        best_ = {order_, code_};
        have_best_ = true;
      }
      return;
    }
    for (Index v = 0; v < n_; ++v) {
      if (used.contains(v) || color_[v] != slot_color_[k]) continue;
      std::uint64_t below = 0, above = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (p_.less(order_[j], v)) below |= std::uint64_t{1} << j;
        if (p_.less(v, order_[j])) above |= std::uint64_t{1} << j;
      }
      code_.push_back(below);
      code_.push_back(above);
      order_.push_back(v);
      if (!have_best_ || !prefix_worse()) place(k + 1, used | ElementSet::singleton(v));
      order_.pop_back();
      code_.pop_back();
      code_.pop_back();
    }
  }

  bool prefix_worse() const {
    return std::lexicographical_compare(best_.code.begin(), best_.code.begin() + static_cast<std::ptrdiff_t>(code_.size()),
                                        code_.begin(), code_.end());
  }

  const Poset& p_;
  std::size_t n_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> slot_color_;
  std::vector<Index> order_;
  std::vector<std::uint64_t> code_;
  CanonicalForm best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const Poset& p) { return Canonizer(p).run(); }

Poset canonical_poset(const Poset& p) {
  const CanonicalForm form = canonical_form(p);
  const std::size_t n = p.size();
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[form.order[k]] = k;
  std::vector<std::string> labels;
  std::vector<ElementSet> above(n);
  for (std::size_t k = 0; k < n; ++k) {
    labels.push_back(std::to_string(k));
    for (Index j : p.up(form.order[k])) above[k].insert(position[j]);
  }
  return Poset::from_relation(std::move(labels), above);
}

bool isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::vector<Poset> enumerate_small_posets(int n, int cap) {
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "size must be >= 0");
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded,
                "exhaustive enumeration capped at " + std::to_string(cap) + " elements, asked for " + std::to_string(n));
  }
  static std::mutex mutex;
  static std::vector<std::vector<Poset>> cache{{Poset{}}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= n) {
    const auto& smaller = cache.back();
    const std::size_t m = cache.size() - 1;
    std::map<std::vector<std::uint64_t>, Poset> classes;
    // Every poset arises from a smaller one by adding a maximal element over a down-set.
    for (const Poset& q : smaller) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        const ElementSet ideal(bits);
        if (down_closure(q, ideal) != ideal) continue;
        std::vector<std::string> labels = q.labels();
        labels.push_back(std::to_string(m));
        std::vector<ElementSet> above(m + 1);
        for (Index i = 0; i < m; ++i) above[i] = q.up(i);
        for (Index i : ideal) above[i].insert(m);
        const Poset candidate = Poset::from_relation(std::move(labels), above);
        auto form = canonical_form(candidate);
        if (!classes.count(form.code)) classes.emplace(form.code, canonical_poset(candidate));
      }
    }
    std::vector<Poset> next;
    for (auto& [code, poset] : classes) next.push_back(std::move(poset));
    cache.push_back(std::move(next));
  }
  return cache[n];
}

Predicate::Predicate(std::string text, std::function<bool(const Poset&)> eval)
    : text_(std::move(text)), eval_(std::move(eval)) {}

bool Predicate::evaluate(const Poset& p) const { return eval_(p); }

Predicate Predicate::representable(Signature sig) {
  return Predicate("representable(" + sig.alpha.to_string() + "," + sig.beta.to_string() + ")",
                   [sig](const Poset& p) { return decide_representable(p, sig).representable; });
}

Predicate Predicate::named(const std::string& name) {
  if (name == "lmd") return Predicate(name, [](const Poset& p) { return check_lmd(p).holds; });
  if (name == "d2bar") return Predicate(name, [](const Poset& p) { return check_d2bar(p).holds; });
  if (name == "is_lattice") return Predicate(name, [](const Poset& p) { return lattice_profile(p).is_lattice; });
  if (name == "is_distributive") {
    return Predicate(name, [](const Poset& p) {
      const auto profile = lattice_profile(p);
      return profile.is_lattice && profile.is_distributive;
    });
  }
  if (name == "completely_representable") {
    return Predicate(name, [](const Poset& p) { return completely_representable(p).representable; });
  }
  throw Error(ErrorCode::InvalidParameter, "unknown predicate '" + name + "'");
}

Predicate operator&&(const Predicate& a, const Predicate& b) {
  return Predicate("(" + a.text_ + "&" + b.text_ + ")",
                   [a, b](const Poset& p) { return a.evaluate(p) && b.evaluate(p); });
}

Predicate operator||(const Predicate& a, const Predicate& b) {
  return Predicate("(" + a.text_ + "|" + b.text_ + ")",
                   [a, b](const Poset& p) { return a.evaluate(p) || b.evaluate(p); });
}

Predicate operator!(const Predicate& a) {
  return Predicate("!" + a.text_, [a](const Poset& p) { return !a.evaluate(p); });
}

namespace {

class PredicateParser {
 public:
  explicit PredicateParser(const std::string& text) : text_(text) {}

  Predicate parse() {
    Predicate p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  Predicate expr() {
    Predicate p = term();
    while (accept('|')) p = p || term();
    return p;
  }
  Predicate term() {
    Predicate p = factor();
    while (accept('&')) p = p && factor();
    return p;
  }
  Predicate factor() {
    if (accept('!')) return !factor();
    if (accept('(')) {
      Predicate p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    const std::string name = word();
    if (name == "representable") {
      if (!accept('(')) fail("expected '(' after representable");
      const Arity a = Arity::parse(word());
      if (!accept(',')) fail("expected ','");
      const Arity b = Arity::parse(word());
      if (!accept(')')) fail("expected ')'");
      return Predicate::representable({a, b});
    }
    return Predicate::named(name);
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::InvalidParameter,
                "predicate '" + text_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Predicate Predicate::parse(const std::string& text) { return PredicateParser(text).parse(); }

SearchOutcome find_counterexample(const Predicate& holds, const Predicate& fails, int max_n, std::uint64_t budget,
                                  int cap, const std::function<void(const std::string&)>& progress_log) {
  SearchOutcome outcome;
  for (int n = 1; n <= max_n; ++n) {
    const auto posets = enumerate_small_posets(n, cap);
    for (const Poset& p : posets) {
      if (outcome.progress.evaluated >= budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "evaluated " + std::to_string(outcome.progress.evaluated) + " posets; exhausted through n=" +
                        std::to_string(outcome.progress.completed_size));
      }
      ++outcome.progress.evaluated;
      if (holds.evaluate(p) && !fails.evaluate(p)) {
        outcome.counterexample = p;
        if (progress_log) progress_log("found n=" + std::to_string(n) + " after " +
                                       std::to_string(outcome.progress.evaluated) + " posets");
        return outcome;
      }
    }
    outcome.progress.completed_size = n;
    if (progress_log) {
      progress_log("n=" + std::to_string(n) + " classes=" + std::to_string(posets.size()) +
                   " evaluated=" + std::to_string(outcome.progress.evaluated) + " none");
    }
  }
  return outcome;
}

std::vector<Probe> probe_presets() {
  return {
      {"lmd-all-binary", "lmd", "representable(ALL,3)"},
      {"d2bar-ternary", "d2bar", "representable(3,3)"},
      {"ternary-not-quaternary", "representable(3,3)", "representable(4,4)"},
  };
}

}  // namespace posrep
