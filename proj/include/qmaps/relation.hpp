#pragma once

#include <concepts>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmaps/error.hpp"
#include "qmaps/finite_set.hpp"

namespace qmaps {

/// What Q-Rel needs from a commutative unital quantale: constants, the order,
/// binary joins and meets, the multiplication and its residuum.
template <class Q>
concept QuantaleBackend = requires(const Q& q, const typename Q::value_type& a, std::string_view text) {
  typename Q::value_type;
  requires std::equality_comparable<typename Q::value_type>;
  { q.bottom() } -> std::convertible_to<typename Q::value_type>;
  { q.top() } -> std::convertible_to<typename Q::value_type>;
  { q.unit() } -> std::convertible_to<typename Q::value_type>;
  { q.leq(a, a) } -> std::convertible_to<bool>;
  { q.join(a, a) } -> std::convertible_to<typename Q::value_type>;
  { q.meet(a, a) } -> std::convertible_to<typename Q::value_type>;
  { q.mult(a, a) } -> std::convertible_to<typename Q::value_type>;
  { q.residuum(a, a) } -> std::convertible_to<typename Q::value_type>;
  { q.format(a) } -> std::convertible_to<std::string>;
  { q.parse(text) } -> std::convertible_to<typename Q::value_type>;
  { q.name() } -> std::convertible_to<std::string>;
};

/// Two quantale handles denote the same quantale: identical object or equal tables.
template <QuantaleBackend Q>
bool same_quantale(const std::shared_ptr<const Q>& a, const std::shared_ptr<const Q>& b) {
  return a == b || (a && b && *a == *b);
}

/// A Q-relation φ: X ⇸ Y, i.e. a total function X × Y → Q.
///
/// Entries are stored densely in row-major order over X × Y. Values are immutable.
template <QuantaleBackend Q>
class Relation {
 public:
  using quantale_type = Q;
  using value_type = typename Q::value_type;
  using QuantaleHandle = std::shared_ptr<const Q>;

  /// The all-⊥ relation.
  Relation(QuantaleHandle q, FiniteSet source, FiniteSet target)
      : quantale_(std::move(q)), source_(std::move(source)), target_(std::move(target)) {
    entries_.assign(source_.size() * target_.size(), quantale_->bottom());
  }

  /// `entries[x * |Y| + y]` is φ(x, y).
  Relation(QuantaleHandle q, FiniteSet source, FiniteSet target, std::vector<value_type> entries)
      : quantale_(std::move(q)), source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    if (entries_.size() != source_.size() * target_.size())
      throw SetMismatch("relation needs " + std::to_string(source_.size() * target_.size()) + " entries, got " +
                        std::to_string(entries_.size()));
  }

  /// φ(x, y) = f(x, y) over indices.
  template <class F>
    requires std::invocable<F&, std::size_t, std::size_t>
  static Relation generate(QuantaleHandle q, FiniteSet source, FiniteSet target, F&& f) {
    std::vector<value_type> entries;
    entries.reserve(source.size() * target.size());
    for (std::size_t x = 0; x < source.size(); ++x)
      for (std::size_t y = 0; y < target.size(); ++y) entries.push_back(f(x, y));
    return Relation(std::move(q), std::move(source), std::move(target), std::move(entries));
  }

  const Q& quantale() const noexcept { return *quantale_; }
  const QuantaleHandle& quantale_handle() const noexcept { return quantale_; }
  const FiniteSet& source() const noexcept { return source_; }
  const FiniteSet& target() const noexcept { return target_; }
  std::span<const value_type> entries() const noexcept { return entries_; }

  const value_type& operator()(std::size_t x, std::size_t y) const { return entries_[x * target_.size() + y]; }
  const value_type& at(std::string_view x, std::string_view y) const {
    auto xi = source_.index_of(x);
    auto yi = target_.index_of(y);
    if (!xi || !yi) throw UnknownName("no entry (" + std::string(x) + ", " + std::string(y) + ")");
    return (*this)(*xi, *yi);
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && same_quantale(a.quantale_, b.quantale_) &&
           a.entries_ == b.entries_;
  }

 private:
  QuantaleHandle quantale_;
  FiniteSet source_;
  FiniteSet target_;
  std::vector<value_type> entries_;
};

namespace detail {

template <QuantaleBackend Q>
void require_same_quantale(const Relation<Q>& a, const Relation<Q>& b) {
  if (!same_quantale(a.quantale_handle(), b.quantale_handle()))
    throw QuantaleMismatch("relations over different quantales: " + std::string(a.quantale().name()) + " vs " +
                           std::string(b.quantale().name()));
}

inline void require_same_set(const FiniteSet& a, const FiniteSet& b, std::string_view what) {
  if (!(a == b)) throw SetMismatch(std::string(what) + ": " + a.to_string() + " vs " + b.to_string());
}

}  // namespace detail

/// id_X(x, y) = k if x = y, ⊥ otherwise.
template <QuantaleBackend Q>
Relation<Q> identity(std::shared_ptr<const Q> q, const FiniteSet& set) {
  const auto k = q->unit();
  const auto bot = q->bottom();
  return Relation<Q>::generate(q, set, set, [&](std::size_t x, std::size_t y) { return x == y ? k : bot; });
}

/// (ψ∘φ)(x, z) = ⋁_y ψ(y, z) & φ(x, y). Empty middle sets give the all-⊥ relation.
template <QuantaleBackend Q>
Relation<Q> compose(const Relation<Q>& psi, const Relation<Q>& phi) {
  detail::require_same_quantale(psi, phi);
  detail::require_same_set(phi.target(), psi.source(), "compose: target(φ) ≠ source(ψ)");
  const Q& q = phi.quantale();
  const std::size_t middle = phi.target().size();
  return Relation<Q>::generate(phi.quantale_handle(), phi.source(), psi.target(), [&](std::size_t x, std::size_t z) {
    auto acc = q.bottom();
    for (std::size_t y = 0; y < middle; ++y) acc = q.join(acc, q.mult(psi(y, z), phi(x, y)));
    return acc;
  });
}

/// ξ↙φ: Y ⇸ Z for ξ: X ⇸ Z, φ: X ⇸ Y; (ξ↙φ)(y, z) = ⋀_x φ(x, y) → ξ(x, z).
template <QuantaleBackend Q>
Relation<Q> left_residual(const Relation<Q>& xi, const Relation<Q>& phi) {
  detail::require_same_quantale(xi, phi);
  detail::require_same_set(xi.source(), phi.source(), "left_residual: source(ξ) ≠ source(φ)");
  const Q& q = phi.quantale();
  const std::size_t n = phi.source().size();
  return Relation<Q>::generate(phi.quantale_handle(), phi.target(), xi.target(), [&](std::size_t y, std::size_t z) {
    auto acc = q.top();
    for (std::size_t x = 0; x < n; ++x) acc = q.meet(acc, q.residuum(phi(x, y), xi(x, z)));
    return acc;
  });
}

/// ψ↘ξ: X ⇸ Y for ψ: Y ⇸ Z, ξ: X ⇸ Z; (ψ↘ξ)(x, y) = ⋀_z ψ(y, z) → ξ(x, z).
template <QuantaleBackend Q>
Relation<Q> right_residual(const Relation<Q>& psi, const Relation<Q>& xi) {
  detail::require_same_quantale(psi, xi);
  detail::require_same_set(psi.target(), xi.target(), "right_residual: target(ψ) ≠ target(ξ)");
  const Q& q = psi.quantale();
  const std::size_t n = psi.target().size();
  return Relation<Q>::generate(psi.quantale_handle(), xi.source(), psi.source(), [&](std::size_t x, std::size_t y) {
    auto acc = q.top();
    for (std::size_t z = 0; z < n; ++z) acc = q.meet(acc, q.residuum(psi(y, z), xi(x, z)));
    return acc;
  });
}

/// φ^op(y, x) = φ(x, y).
template <QuantaleBackend Q>
Relation<Q> opposite(const Relation<Q>& phi) {
  return Relation<Q>::generate(phi.quantale_handle(), phi.target(), phi.source(),
                               [&](std::size_t y, std::size_t x) { return phi(x, y); });
}

/// Pointwise order φ ≤ ψ.
template <QuantaleBackend Q>
bool leq(const Relation<Q>& phi, const Relation<Q>& psi) {
  detail::require_same_quantale(phi, psi);
  detail::require_same_set(phi.source(), psi.source(), "leq: sources differ");
  detail::require_same_set(phi.target(), psi.target(), "leq: targets differ");
  const Q& q = phi.quantale();
  auto a = phi.entries();
  auto b = psi.entries();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!q.leq(a[i], b[i])) return false;
  return true;
}

namespace detail {
template <QuantaleBackend Q, class Op>
Relation<Q> pointwise(const Relation<Q>& phi, const Relation<Q>& psi, Op op, std::string_view what) {
  require_same_quantale(phi, psi);
  require_same_set(phi.source(), psi.source(), std::string(what) + ": sources differ");
  require_same_set(phi.target(), psi.target(), std::string(what) + ": targets differ");
  return Relation<Q>::generate(phi.quantale_handle(), phi.source(), phi.target(),
                               [&](std::size_t x, std::size_t y) { return op(phi(x, y), psi(x, y)); });
}
}  // namespace detail

template <QuantaleBackend Q>
Relation<Q> join(const Relation<Q>& phi, const Relation<Q>& psi) {
  const Q& q = phi.quantale();
  return detail::pointwise(phi, psi, [&](auto a, auto b) { return q.join(a, b); }, "join");
}

template <QuantaleBackend Q>
Relation<Q> meet(const Relation<Q>& phi, const Relation<Q>& psi) {
  const Q& q = phi.quantale();
  return detail::pointwise(phi, psi, [&](auto a, auto b) { return q.meet(a, b); }, "meet");
}

/// ψ ⨿ φ: X⨿Z ⇸ Y⨿W for φ: X ⇸ Y and ψ: Z ⇸ W. Block diagonal, cross blocks ⊥.
template <QuantaleBackend Q>
Relation<Q> disjoint_union(const Relation<Q>& psi, const Relation<Q>& phi) {
  detail::require_same_quantale(psi, phi);
  const std::size_t nx = phi.source().size();
  const std::size_t ny = phi.target().size();
  const auto bot = phi.quantale().bottom();
  return Relation<Q>::generate(phi.quantale_handle(), disjoint_union(phi.source(), psi.source()),
                               disjoint_union(phi.target(), psi.target()), [&](std::size_t a, std::size_t b) {
                                 if (a < nx && b < ny) return phi(a, b);
                                 if (a >= nx && b >= ny) return psi(a - nx, b - ny);
                                 return bot;
                               });
}

}  // namespace qmaps
