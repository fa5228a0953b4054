#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace qmaps {

/// An exact extended integer: -inf, a finite 64-bit value, or +inf.
class Extended {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr Extended() = default;
  constexpr Extended(std::int64_t v) : kind_(Kind::Finite), value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr Extended neg_inf() { return Extended(Kind::NegInf); }
  static constexpr Extended pos_inf() { return Extended(Kind::PosInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool finite() const { return kind_ == Kind::Finite; }
  /// Only meaningful when finite().
  constexpr std::int64_t value() const { return value_; }

  /// Numeric comparison (not the quantale order).
  friend constexpr bool operator==(Extended a, Extended b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend constexpr bool operator<(Extended a, Extended b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.kind_ == Kind::Finite && a.value_ < b.value_;
  }
  friend constexpr bool operator<=(Extended a, Extended b) { return !(b < a); }

  std::string to_string() const;
  /// Accepts a decimal integer, "inf", "+inf", "-inf". Throws UnknownName.
  static Extended from_string(std::string_view text);

 private:
  constexpr explicit Extended(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  std::int64_t value_ = 0;
};

/// The extended real line ([-inf, inf], +, 0) ordered by ≥, restricted to exact
/// integers; or its sub-quantale [0, inf] when `lawvere` is set.
///
/// ⊥ = +inf absorbs everything under &, so (-inf) + (+inf) = +inf. Only element
/// level operations are offered; there is no finite carrier to classify.
class ChainQuantale {
 public:
  using value_type = Extended;

  enum class Flavor : std::uint8_t { Extended, Lawvere };

  explicit ChainQuantale(Flavor flavor) : flavor_(flavor) {}

  static ChainQuantale extended() { return ChainQuantale(Flavor::Extended); }
  static ChainQuantale lawvere() { return ChainQuantale(Flavor::Lawvere); }

  Flavor flavor() const { return flavor_; }
  std::string name() const { return flavor_ == Flavor::Extended ? "extended-chain" : "lawvere-chain"; }

  Extended bottom() const { return Extended::pos_inf(); }
  Extended top() const { return flavor_ == Flavor::Extended ? Extended::neg_inf() : Extended(0); }
  Extended unit() const { return Extended(0); }

  bool contains(Extended a) const { return flavor_ == Flavor::Extended || Extended(0) <= a; }

  /// Quantale order: a ≤ b iff a ≥ b numerically.
  bool leq(Extended a, Extended b) const { return b <= a; }
  Extended join(Extended a, Extended b) const { return b < a ? b : a; }
  Extended meet(Extended a, Extended b) const { return a < b ? b : a; }
  /// Throws Error on 64-bit overflow or on operands outside the carrier.
  Extended mult(Extended a, Extended b) const;
  Extended residuum(Extended a, Extended b) const;

  std::string format(Extended a) const { return a.to_string(); }
  /// Throws UnknownName on malformed text or values outside the carrier.
  Extended parse(std::string_view text) const;

  bool operator==(const ChainQuantale& other) const { return flavor_ == other.flavor_; }

 private:
  void require(Extended a) const;

  Flavor flavor_;
};

using ChainPtr = std::shared_ptr<const ChainQuantale>;

}  // namespace qmaps
