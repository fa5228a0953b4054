#include "qmaps/chain.hpp"

#include <charconv>

#include "qmaps/error.hpp"

namespace qmaps {

std::string Extended::to_string() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "inf";
    case Kind::Finite:
      break;
  }
  return std::to_string(value_);
}

Extended Extended::from_string(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw UnknownName("not an extended integer: '" + std::string(text) + "'");
  return Extended(v);
}

void ChainQuantale::require(Extended a) const {
  if (!contains(a)) throw Error(a.to_string() + " is outside the carrier of " + name());
}

Extended ChainQuantale::mult(Extended a, Extended b) const {
  require(a);
  require(b);
  if (a.kind() == Extended::Kind::PosInf || b.kind() == Extended::Kind::PosInf) return Extended::pos_inf();
  if (!a.finite() || !b.finite()) return Extended::neg_inf();
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a.value(), b.value(), &sum)) throw Error("extended integer overflow in &");
  return Extended(sum);
}

Extended ChainQuantale::residuum(Extended a, Extended b) const {
  require(a);
  require(b);
  // Numerically smallest r with a + r ≥ b on the extended line.
  Extended r;
  if (b.kind() == Extended::Kind::NegInf || a.kind() == Extended::Kind::PosInf) {
    r = Extended::neg_inf();
  } else if (a.kind() == Extended::Kind::NegInf || b.kind() == Extended::Kind::PosInf) {
    r = Extended::pos_inf();
  } else {
    std::int64_t diff = 0;
    if (__builtin_sub_overflow(b.value(), a.value(), &diff)) throw Error("extended integer overflow in →");
    r = Extended(diff);
  }
  if (flavor_ == Flavor::Lawvere && r < Extended(0)) return Extended(0);
  return r;
}

Extended ChainQuantale::parse(std::string_view text) const {
  Extended e = Extended::from_string(text);
  if (!contains(e)) throw UnknownName(std::string(text) + " is outside the carrier of " + name());
  return e;
}

}  // namespace qmaps
