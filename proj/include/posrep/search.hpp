#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "posrep/poset.hpp"
#include "posrep/signature.hpp"

namespace posrep {

inline constexpr int kDefaultEnumerationCap = 7;

/// Canonical form of a poset: the relabeling and its strict-order code.
struct CanonicalForm {
  std::vector<Index> order;        ///< order[k] = original index placed at position k
  /// Two words per position k: bits j < k with p_j < p_k, then bits j < k with p_k < p_j.
  std::vector<std::uint64_t> code;

  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) { return a.code <=> b.code; }
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.code == b.code; }
};

/// Isomorphism-invariant code: color refinement on up/down degrees, then a
/// pruned backtracking search over orderings within color cells.
CanonicalForm canonical_form(const Poset& p);

/// The poset relabeled by canonical position with labels "0", "1", ...
Poset canonical_poset(const Poset& p);

bool isomorphic(const Poset& a, const Poset& b);

/// One representative per isomorphism class on n elements, in canonical-code order.
/// Throws CapExceeded when n > cap.
std::vector<Poset> enumerate_small_posets(int n, int cap = kDefaultEnumerationCap);

/// A named predicate over posets, possibly a boolean combination.
/// Grammar: expr := term ('|' term)*, term := factor ('&' factor)*,
/// factor := '!' factor | '(' expr ')' | atom, atom := name | representable(a,b).
/// Atom names: lmd, d2bar, is_lattice, is_distributive, completely_representable.
class Predicate {
 public:
  static Predicate parse(const std::string& text);
  static Predicate representable(Signature sig);
  static Predicate named(const std::string& name);

  bool evaluate(const Poset& p) const;
  const std::string& text() const { return text_; }

  friend Predicate operator&&(const Predicate& a, const Predicate& b);
  friend Predicate operator||(const Predicate& a, const Predicate& b);
  friend Predicate operator!(const Predicate& a);

 private:
  Predicate(std::string text, std::function<bool(const Poset&)> eval);
  std::string text_;
  std::function<bool(const Poset&)> eval_;
};

struct SearchProgress {
  int completed_size = 0;        ///< every poset of this size or smaller was examined
  std::uint64_t evaluated = 0;   ///< posets examined
};

struct SearchOutcome {
  std::optional<Poset> counterexample;
  SearchProgress progress;
};

/// First poset (by size, then canonical code) with `holds` true and `fails` false.
/// Throws BudgetExceeded after `budget` evaluations; the message carries the high-water mark.
SearchOutcome find_counterexample(const Predicate& holds, const Predicate& fails, int max_n,
                                  std::uint64_t budget = 1'000'000, int cap = kDefaultEnumerationCap,
                                  const std::function<void(const std::string&)>& progress_log = {});

/// Named probes of open questions; each reports "no counterexample up to n" at most.
struct Probe {
  std::string name;
  std::string holds;
  std::string fails;
};
std::vector<Probe> probe_presets();

}  // namespace posrep
