#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace posrep {

/// An arity bound: either a finite cardinal k >= 2 (sets of size < k) or ALL.
///
/// On a poset with n elements every subset has size <= n, so any bound above n
/// behaves like ALL; `canonical(n)` performs that collapse. The infinite
/// cardinals (omega) and the "complete" marker C are parsed as ALL.
class Arity {
 public:
  static Arity all() { return Arity(0); }
  static Arity finite(unsigned k);
  /// Accepts a decimal integer >= 2, "ALL", "omega", "ω", or "C".
  static Arity parse(std::string_view text);

  bool is_all() const { return value_ == 0; }
  /// Finite bound; only meaningful when !is_all().
  unsigned value() const { return value_; }

  /// Numeric bound on a carrier of size n: constraint sets must have size < effective(n).
  unsigned effective(std::size_t n) const;
  Arity canonical(std::size_t n) const;
  std::string to_string() const;

  friend bool operator==(Arity, Arity) = default;
  friend std::strong_ordering operator<=>(Arity a, Arity b);

 private:
  explicit Arity(unsigned v) : value_(v) {}
  unsigned value_;
};

/// The pair (alpha, beta): meets of fewer than alpha elements, joins of fewer than beta.
struct Signature {
  Arity alpha = Arity::all();
  Arity beta = Arity::all();

  Signature canonical(std::size_t n) const { return {alpha.canonical(n), beta.canonical(n)}; }
  Signature swapped() const { return {beta, alpha}; }
  /// Componentwise order; (a,b) <= (a',b') means (a',b')-representability implies (a,b).
  bool weaker_or_equal(const Signature& other) const {
    return alpha <= other.alpha && beta <= other.beta;
  }
  std::string to_string() const { return "(" + alpha.to_string() + "," + beta.to_string() + ")"; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

}  // namespace posrep
