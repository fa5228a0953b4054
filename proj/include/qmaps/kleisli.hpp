#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qmaps/error.hpp"
#include "qmaps/finite_set.hpp"
#include "qmaps/qmap.hpp"

namespace qmaps {

/// The label of ⋆ in X₊: the shortest run of '*' not already used in X, so
/// nested pointings (X₊)₊ get "*", "**", ... by depth.
inline std::string star_label(const FiniteSet& set) {
  std::string star = "*";
  while (set.contains(star)) star += '*';
  return star;
}

/// X₊ = X ⨿ {⋆}, with ⋆ last.
inline FiniteSet plus(const FiniteSet& set) {
  std::vector<std::string> labels = set.labels();
  labels.push_back(star_label(set));
  return FiniteSet(std::move(labels));
}

/// The singleton {⋆}.
inline FiniteSet point() { return FiniteSet{"*"}; }

/// ι_X: X ⇸ X₊, the graph of the inclusion.
template <QuantaleBackend Q>
QMap<Q> unit_map(std::shared_ptr<const Q> q, const FiniteSet& set) {
  return graph(std::move(q), inclusion(set, plus(set)));
}

/// τ_X: {⋆} ⇸ X₊, the graph of ⋆ ↦ ⋆.
template <QuantaleBackend Q>
QMap<Q> tau(std::shared_ptr<const Q> q, const FiniteSet& set) {
  return graph(std::move(q), CrispMap(point(), plus(set), {set.size()}));
}

/// m_X: (X₊)₊ ⇸ X₊, the graph of the map collapsing both stars.
template <QuantaleBackend Q>
QMap<Q> multiplication(std::shared_ptr<const Q> q, const FiniteSet& set) {
  const FiniteSet inner = plus(set);
  const FiniteSet outer = plus(inner);
  std::vector<std::size_t> assignment;
  for (std::size_t i = 0; i < outer.size(); ++i) assignment.push_back(i < inner.size() ? i : set.size());
  return graph(std::move(q), CrispMap(outer, inner, std::move(assignment)));
}

/// φ₊ = φ ⨿ id_{⋆}: X₊ ⇸ Y₊.
template <QuantaleBackend Q>
Relation<Q> plus_relation(const Relation<Q>& phi) {
  const std::size_t nx = phi.source().size();
  const std::size_t ny = phi.target().size();
  const auto& q = phi.quantale();
  return Relation<Q>::generate(phi.quantale_handle(), plus(phi.source()), plus(phi.target()),
                               [&](std::size_t x, std::size_t y) {
                                 if (x < nx && y < ny) return phi(x, y);
                                 return (x == nx && y == ny) ? q.unit() : q.bottom();
                               });
}

/// T on Q-maps: ζ ↦ ζ₊.
template <QuantaleBackend Q>
QMap<Q> plus_map(const QMap<Q>& zeta) {
  return promote(plus_relation(zeta.relation()));
}

/// A partial Q-map X ⇝ Y: a Q-map ζ: X ⇸ Y₊. ζ(x, ⋆) is the degree to which x has no image.
template <QuantaleBackend Q>
class PartialQMap {
 public:
  using value_type = typename Q::value_type;

  /// Requires target(ζ) = base_target₊.
  PartialQMap(QMap<Q> map, FiniteSet base_target) : map_(std::move(map)), base_target_(std::move(base_target)) {
    if (!(map_.target() == plus(base_target_)))
      throw SetMismatch("partial map target " + map_.target().to_string() + " is not " +
                        plus(base_target_).to_string());
  }

  const QMap<Q>& map() const noexcept { return map_; }
  const Relation<Q>& relation() const noexcept { return map_.relation(); }
  const FiniteSet& source() const noexcept { return map_.source(); }
  const FiniteSet& base_target() const noexcept { return base_target_; }
  std::size_t star() const noexcept { return base_target_.size(); }
  const value_type& operator()(std::size_t x, std::size_t y) const { return map_.relation()(x, y); }

  friend bool operator==(const PartialQMap& a, const PartialQMap& b) {
    return a.base_target_ == b.base_target_ && a.map_ == b.map_;
  }

 private:
  QMap<Q> map_;
  FiniteSet base_target_;
};

/// η⋄ζ for ζ: X ⇝ Y and η: Y ⇝ Z:
///   (η⋄ζ)(x, z) = ⋁_y η(y, z) & ζ(x, y),
///   (η⋄ζ)(x, ⋆) = (⋁_y η(y, ⋆) & ζ(x, y)) ∨ ζ(x, ⋆).
template <QuantaleBackend Q>
PartialQMap<Q> kleisli_compose(const PartialQMap<Q>& eta, const PartialQMap<Q>& zeta) {
  detail::require_same_set(zeta.base_target(), eta.source(), "kleisli_compose: Y mismatch");
  detail::require_same_quantale(eta.relation(), zeta.relation());
  const Q& q = zeta.map().quantale();
  const std::size_t ny = zeta.base_target().size();
  const std::size_t nz = eta.base_target().size();
  auto rel = Relation<Q>::generate(zeta.map().quantale_handle(), zeta.source(), plus(eta.base_target()),
                                   [&](std::size_t x, std::size_t z) {
                                     auto acc = q.bottom();
                                     for (std::size_t y = 0; y < ny; ++y) acc = q.join(acc, q.mult(eta(y, z), zeta(x, y)));
                                     if (z == nz) acc = q.join(acc, zeta(x, zeta.star()));
                                     return acc;
                                   });
  return PartialQMap<Q>(promote(rel), eta.base_target());
}

/// m_Z ∘ η₊ ∘ ζ, the Kleisli composite built from the monad structure.
template <QuantaleBackend Q>
Relation<Q> kleisli_compose_via_monad(const PartialQMap<Q>& eta, const PartialQMap<Q>& zeta) {
  const auto& handle = zeta.map().quantale_handle();
  return compose(multiplication(handle, eta.base_target()).relation(),
                 compose(plus_relation(eta.relation()), zeta.relation()));
}

/// A total Q-map as a partial one: the ⋆ column is ⊥.
template <QuantaleBackend Q>
PartialQMap<Q> embed_total(const QMap<Q>& zeta) {
  return PartialQMap<Q>(extend_codomain(zeta, plus(zeta.target())), zeta.target());
}

/// The Kleisli identity on X, i.e. ι_X.
template <QuantaleBackend Q>
PartialQMap<Q> kleisli_identity(std::shared_ptr<const Q> q, const FiniteSet& set) {
  return PartialQMap<Q>(unit_map(std::move(q), set), set);
}

/// Kζ: (X₊, τ_X) → (Y₊, τ_Y); ζ on X × Y₊, k at (⋆, ⋆), ⊥ on the rest of the ⋆ row.
/// This is m_Y ∘ ζ₊.
template <QuantaleBackend Q>
QMap<Q> comparison_K(const PartialQMap<Q>& zeta) {
  const Q& q = zeta.map().quantale();
  const std::size_t nx = zeta.source().size();
  const std::size_t star = zeta.star();
  auto rel = Relation<Q>::generate(zeta.map().quantale_handle(), plus(zeta.source()), plus(zeta.base_target()),
                                   [&](std::size_t x, std::size_t y) {
                                     if (x < nx) return zeta(x, y);
                                     return y == star ? q.unit() : q.bottom();
                                   });
  return promote(rel);
}

/// A T-algebra (X, μ), stored as its coslice object μ: {⋆} ⇸ X.
template <QuantaleBackend Q>
class TAlgebra {
 public:
  /// Requires source(μ) = {⋆}.
  explicit TAlgebra(QMap<Q> point_map) : point_(std::move(point_map)) {
    if (!(point_.source() == point())) throw SetMismatch("T-algebra point must have source {*}");
  }

  /// The free algebra (X₊, τ_X).
  static TAlgebra free(std::shared_ptr<const Q> q, const FiniteSet& set) { return TAlgebra(tau(std::move(q), set)); }

  /// Recovers (X, μ) from a structure map X₊ ⇸ X with μ∘ι_X = id_X. Throws Error otherwise.
  static TAlgebra from_structure(const QMap<Q>& structure, const FiniteSet& carrier) {
    detail::require_same_set(structure.source(), plus(carrier), "structure map source");
    detail::require_same_set(structure.target(), carrier, "structure map target");
    const auto& handle = structure.quantale_handle();
    if (!(compose(structure.relation(), unit_map(handle, carrier).relation()) == identity(handle, carrier)))
      throw Error("structure map does not split the unit: μ∘ι_X ≠ id_X");
    const std::size_t star = carrier.size();
    auto rel = Relation<Q>::generate(handle, point(), carrier,
                                     [&](std::size_t, std::size_t y) { return structure.relation()(star, y); });
    return TAlgebra(promote(rel));
  }

  const FiniteSet& carrier() const noexcept { return point_.target(); }
  const QMap<Q>& point_map() const noexcept { return point_; }

  /// μ: X₊ ⇸ X with μ(x, y) = id_X(x, y) and μ(⋆, y) = point(⋆, y).
  QMap<Q> structure() const {
    const Q& q = point_.quantale();
    const std::size_t n = carrier().size();
    auto rel = Relation<Q>::generate(point_.quantale_handle(), plus(carrier()), carrier(),
                                     [&](std::size_t x, std::size_t y) {
                                       if (x == n) return point_.relation()(0, y);
                                       return x == y ? q.unit() : q.bottom();
                                     });
    return promote(rel);
  }

 private:
  QMap<Q> point_;
};

/// An isomorphism between a T-algebra (X, μ) and the free algebra on X∖{e}.
template <QuantaleBackend Q>
struct FreeAlgebraIso {
  std::size_t group_identity = 0;  // index of e in X
  FiniteSet reduced;               // X∖{e}
  QMap<Q> to_free;                 // ζ: X ⇸ (X∖{e})₊
  QMap<Q> from_free;               // η: (X∖{e})₊ ⇸ X
};

namespace detail {
template <QuantaleBackend Q>
void require_equal(const Relation<Q>& lhs, const Relation<Q>& rhs, const std::string& equation) {
  if (lhs == rhs) return;
  std::string witness = "shape";
  if (lhs.source() == rhs.source() && lhs.target() == rhs.target()) {
    for (std::size_t a = 0; a < lhs.source().size(); ++a)
      for (std::size_t b = 0; b < lhs.target().size(); ++b)
        if (!(lhs(a, b) == rhs(a, b))) {
          witness = "(" + lhs.source().label(a) + ", " + lhs.target().label(b) + ")";
          a = lhs.source().size();
          break;
        }
  }
  throw VerificationFailed(equation, witness);
}
}  // namespace detail

/// Puts the cyclic group ℤ_n on X (x·a = x + a mod n in carrier order, e = first
/// element) and builds
///   ζ(x, a) = μ*(x·a, ⋆), ζ(x, ⋆) = μ*(x, ⋆),
///   η(a, x) = μ(⋆, x·a),  η(⋆, x) = μ(⋆, x).
/// Verifies η∘ζ = id_X, ζ∘η = id, ζ∘μ = τ_{X∖{e}} and η∘τ_{X∖{e}} = μ;
/// any failure raises VerificationFailed.
template <QuantaleBackend Q>
FreeAlgebraIso<Q> free_algebra_iso(const TAlgebra<Q>& algebra) {
  const FiniteSet& carrier = algebra.carrier();
  const std::size_t n = carrier.size();
  if (n == 0) throw Error("a T-algebra carrier is never empty");
  const auto& handle = algebra.point_map().quantale_handle();
  const auto& mu = algebra.point_map().relation();
  const auto& mu_adj = algebra.point_map().adjoint();
  auto product = [n](std::size_t x, std::size_t a) { return (x + a) % n; };

  std::vector<std::string> rest(carrier.labels().begin() + 1, carrier.labels().end());
  const FiniteSet reduced(std::move(rest));
  const FiniteSet reduced_plus = plus(reduced);
  const std::size_t star = reduced.size();

  auto zeta = Relation<Q>::generate(handle, carrier, reduced_plus, [&](std::size_t x, std::size_t a) {
    return a == star ? mu_adj(x, 0) : mu_adj(product(x, a + 1), 0);
  });
  auto eta = Relation<Q>::generate(handle, reduced_plus, carrier, [&](std::size_t a, std::size_t x) {
    return a == star ? mu(0, x) : mu(0, product(x, a + 1));
  });

  detail::require_equal(compose(eta, zeta), identity(handle, carrier), "η∘ζ = id_X");
  detail::require_equal(compose(zeta, eta), identity(handle, reduced_plus), "ζ∘η = id_(X∖{e})₊");
  const auto tau_reduced = tau(handle, reduced).relation();
  detail::require_equal(compose(zeta, mu), tau_reduced, "ζ∘μ = τ_(X∖{e})");
  detail::require_equal(compose(eta, tau_reduced), mu, "η∘τ_(X∖{e}) = μ");

  auto to_free = try_promote(zeta);
  auto from_free = try_promote(eta);
  if (!to_free) throw VerificationFailed("ζ is a Q-map", carrier.to_string());
  if (!from_free) throw VerificationFailed("η is a Q-map", reduced_plus.to_string());
  return FreeAlgebraIso<Q>{0, reduced, std::move(*to_free), std::move(*from_free)};
}

}  // namespace qmaps
