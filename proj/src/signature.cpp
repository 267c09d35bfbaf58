#include "posrep/signature.hpp"

#include <charconv>

#include "posrep/error.hpp"

namespace posrep {

Arity Arity::finite(unsigned k) {
  if (k < 2) throw Error(ErrorCode::InvalidParameter, "arity bound must be >= 2, got " + std::to_string(k));
  return Arity(k);
}

Arity Arity::parse(std::string_view text) {
  if (text == "ALL" || text == "all" || text == "omega" || text == "ω" || text == "C") return all();
  unsigned k = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, k);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::InvalidParameter, "bad arity '" + std::string(text) + "' (expected integer >= 2 or ALL)");
  }
  return finite(k);
}

unsigned Arity::effective(std::size_t n) const {
  const auto cap = static_cast<unsigned>(n + 1);
  return is_all() || value_ > cap ? cap : value_;
}

Arity Arity::canonical(std::size_t n) const {
  if (is_all() || value_ >= n + 1) return all();
  return *this;
}

std::string Arity::to_string() const { return is_all() ? "ALL" : std::to_string(value_); }

std::strong_ordering operator<=>(Arity a, Arity b) {
  if (a.is_all() || b.is_all()) return a.is_all() <=> b.is_all();
  return a.value_ <=> b.value_;
}

}  // namespace posrep
