#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qmaps {

/// Handle to an element of a finite quantale: an ordinal into its carrier.
/// The handle carries no owner; relations check that their operands share a quantale.
struct Element {
  std::uint16_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Raw description of a finite quantale, indexed by carrier ordinals.
///
/// The order may be given as generating ≤ pairs (reflexive-transitive closure is
/// taken), as a full join table, or both; when both are present they must agree.
struct QuantaleSpec {
  std::string name;
  std::vector<std::string> labels;
  std::size_t unit = 0;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::vector<std::size_t> join_table;  // row-major n*n, empty when absent
  std::vector<std::size_t> mult_table;  // row-major n*n
};

/// A validated non-trivial commutative unital quantale on a finite carrier.
///
/// Every table is dense and precomputed, so all element operations are lookups.
/// Instances are immutable and usually shared through QuantalePtr.
class Quantale {
 public:
  using value_type = Element;

  /// Validates every axiom exhaustively. Throws AxiomViolation or TrivialQuantale.
  static Quantale build(const QuantaleSpec& spec);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::vector<Element> elements() const;

  const std::string& label(Element e) const;
  std::optional<Element> find(std::string_view label) const;
  /// Throws UnknownName.
  Element element(std::string_view label) const;

  std::string format(Element e) const { return label(e); }
  Element parse(std::string_view text) const { return element(text); }

  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  Element unit() const noexcept { return unit_; }

  bool leq(Element a, Element b) const { return leq_[at(a, b)] != 0; }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  Element join(Element a, Element b) const { return Element{join_[at(a, b)]}; }
  Element meet(Element a, Element b) const { return Element{meet_[at(a, b)]}; }
  Element mult(Element a, Element b) const { return Element{mult_[at(a, b)]}; }
  /// a → b, the largest r with a & r ≤ b.
  Element residuum(Element a, Element b) const { return Element{residuum_[at(a, b)]}; }

  /// Structural equality: labels, unit, order and multiplication. The name is ignored.
  bool operator==(const Quantale& other) const;

 private:
  Quantale() = default;

  std::size_t at(Element a, Element b) const {
    const std::size_t n = labels_.size();
    if (a.index >= n || b.index >= n) [[unlikely]] out_of_range();
    return std::size_t{a.index} * n + b.index;
  }
  [[noreturn]] void out_of_range() const;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::uint16_t> leq_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> mult_;
  std::vector<std::uint16_t> residuum_;
  Element bottom_{};
  Element top_{};
  Element unit_{};
};

using QuantalePtr = std::shared_ptr<const Quantale>;

inline QuantalePtr make_quantale(const QuantaleSpec& spec) {
  return std::make_shared<const Quantale>(Quantale::build(spec));
}

inline constexpr std::uint64_t kDefaultSearchCap = 50'000'000;

struct Classification {
  bool integral = false;
  bool divisible = false;
  bool lean = false;
  bool weakly_lean = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// k = ⊤.
bool is_integral(const Quantale& q);
/// d ≤ q implies d = p & q for some p (exhaustive witness search).
bool is_divisible(const Quantale& q);
bool is_lean(const Quantale& q);
/// Throws BudgetExceeded when the family search visits more than `search_cap` nodes.
bool is_weakly_lean(const Quantale& q, std::uint64_t search_cap = kDefaultSearchCap);
Classification classify(const Quantale& q, std::uint64_t search_cap = kDefaultSearchCap);

/// A pair (p, q) violating one of the two lean conditions, if any.
std::optional<std::pair<Element, Element>> lean_violation(const Quantale& q);

/// A family of pairs (p_i, q_i) violating the weakly-lean implication, if any.
///
/// Arbitrary index families reduce to sets of distinct pairs with ⊥ < p&q ≤ k:
/// a repeated index forces p&q = ⊥ through the cross condition, and deleting
/// pairs with p&q = ⊥ keeps the hypothesis join while shrinking the conclusion.
/// The empty family has hypothesis join ⊥ ≠ k and never triggers.
std::optional<std::vector<std::pair<Element, Element>>> weakly_lean_violation(
    const Quantale& q, std::uint64_t search_cap = kDefaultSearchCap);

}  // namespace qmaps
