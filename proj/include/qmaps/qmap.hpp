#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmaps/error.hpp"
#include "qmaps/finite_set.hpp"
#include "qmaps/relation.hpp"

namespace qmaps {

/// The only possible right adjoint of φ: X ⇸ Y, namely φ↘id_Y: Y ⇸ X.
template <QuantaleBackend Q>
Relation<Q> right_adjoint_candidate(const Relation<Q>& phi) {
  return right_residual(phi, identity(phi.quantale_handle(), phi.target()));
}

namespace detail {
// First x with k ≰ (adjoint∘φ)(x, x); only the diagonal can fail id_X ≤ adjoint∘φ.
template <QuantaleBackend Q>
std::optional<std::size_t> adjunction_failure(const Relation<Q>& phi, const Relation<Q>& adjoint) {
  const Q& q = phi.quantale();
  const std::size_t ny = phi.target().size();
  for (std::size_t x = 0; x < phi.source().size(); ++x) {
    auto acc = q.bottom();
    for (std::size_t y = 0; y < ny; ++y) acc = q.join(acc, q.mult(adjoint(y, x), phi(x, y)));
    if (!q.leq(q.unit(), acc)) return x;
  }
  return std::nullopt;
}
}  // namespace detail

/// A Q-map ζ: X ⇸ Y together with its cached right adjoint ζ*.
///
/// Only obtainable through promote(), so ζ ⊣ ζ* always holds.
template <QuantaleBackend Q>
class QMap {
 public:
  const Relation<Q>& relation() const noexcept { return relation_; }
  const Relation<Q>& adjoint() const noexcept { return adjoint_; }
  const FiniteSet& source() const noexcept { return relation_.source(); }
  const FiniteSet& target() const noexcept { return relation_.target(); }
  const Q& quantale() const noexcept { return relation_.quantale(); }
  const auto& quantale_handle() const noexcept { return relation_.quantale_handle(); }

  friend bool operator==(const QMap& a, const QMap& b) { return a.relation_ == b.relation_; }

  template <QuantaleBackend R>
  friend std::optional<QMap<R>> try_promote(const Relation<R>& phi);

 private:
  QMap(Relation<Q> relation, Relation<Q> adjoint) : relation_(std::move(relation)), adjoint_(std::move(adjoint)) {}

  Relation<Q> relation_;
  Relation<Q> adjoint_;
};

template <QuantaleBackend Q>
std::optional<QMap<Q>> try_promote(const Relation<Q>& phi) {
  Relation<Q> adjoint = right_adjoint_candidate(phi);
  if (detail::adjunction_failure(phi, adjoint)) return std::nullopt;
  return QMap<Q>(phi, std::move(adjoint));
}

/// id_X ≤ φ* ∘ φ, where φ* is the adjoint candidate (φ ∘ φ* ≤ id_Y always holds).
template <QuantaleBackend Q>
bool is_qmap(const Relation<Q>& phi) {
  return !detail::adjunction_failure(phi, right_adjoint_candidate(phi)).has_value();
}

/// Throws NotAMap naming a source element where the adjunction fails.
template <QuantaleBackend Q>
QMap<Q> promote(const Relation<Q>& phi) {
  Relation<Q> adjoint = right_adjoint_candidate(phi);
  if (auto x = detail::adjunction_failure(phi, adjoint)) throw NotAMap(phi.source().label(*x));
  return *try_promote(phi);
}

/// ζ* = ζ^op.
template <QuantaleBackend Q>
bool is_symmetric(const QMap<Q>& zeta) {
  return zeta.adjoint() == opposite(zeta.relation());
}

/// A total function between crisp finite sets.
class CrispMap {
 public:
  /// `assignment[i]` is the index in `target` of the image of source element i.
  CrispMap(FiniteSet source, FiniteSet target, std::vector<std::size_t> assignment);

  const FiniteSet& source() const noexcept { return source_; }
  const FiniteSet& target() const noexcept { return target_; }
  std::size_t operator()(std::size_t x) const { return assignment_.at(x); }
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }

  friend bool operator==(const CrispMap&, const CrispMap&) = default;

 private:
  FiniteSet source_;
  FiniteSet target_;
  std::vector<std::size_t> assignment_;
};

/// Inclusion of `subset` into `superset` by label. Throws NotASubset.
CrispMap inclusion(const FiniteSet& subset, const FiniteSet& superset);

/// The graph f_∘: k on {(x, f(x))}, ⊥ elsewhere.
template <QuantaleBackend Q>
Relation<Q> graph_relation(std::shared_ptr<const Q> q, const CrispMap& f) {
  const auto k = q->unit();
  const auto bot = q->bottom();
  return Relation<Q>::generate(q, f.source(), f.target(),
                               [&](std::size_t x, std::size_t y) { return f(x) == y ? k : bot; });
}

template <QuantaleBackend Q>
QMap<Q> graph(std::shared_ptr<const Q> q, const CrispMap& f) {
  return promote(graph_relation(std::move(q), f));
}

/// The crisp map whose graph is ζ, if one exists.
///
/// For each x the image is the unique y with ζ(x, y) = ζ*(y, x) = k; the whole
/// matrix must then coincide with the graph. No leanness is assumed.
template <QuantaleBackend Q>
std::optional<CrispMap> try_as_crisp_map(const QMap<Q>& zeta) {
  const Q& q = zeta.quantale();
  const auto& rel = zeta.relation();
  const auto& adj = zeta.adjoint();
  std::vector<std::size_t> assignment;
  for (std::size_t x = 0; x < zeta.source().size(); ++x) {
    std::optional<std::size_t> image;
    for (std::size_t y = 0; y < zeta.target().size(); ++y) {
      if (rel(x, y) == q.unit() && adj(y, x) == q.unit()) {
        if (image) return std::nullopt;
        image = y;
      }
    }
    if (!image) return std::nullopt;
    assignment.push_back(*image);
  }
  CrispMap f(zeta.source(), zeta.target(), std::move(assignment));
  if (!(graph_relation(zeta.quantale_handle(), f) == rel)) return std::nullopt;
  return f;
}

/// Throws NotGraph.
template <QuantaleBackend Q>
CrispMap as_crisp_map(const QMap<Q>& zeta) {
  if (auto f = try_as_crisp_map(zeta)) return *f;
  throw NotGraph("Q-map " + zeta.source().to_string() + " ⇸ " + zeta.target().to_string() +
                 " is not the graph of a crisp map");
}

/// ζ_s(x, y) = ζ(x, y) ∧ ζ*(y, x).
template <QuantaleBackend Q>
Relation<Q> symmetrize(const QMap<Q>& zeta) {
  return meet(zeta.relation(), opposite(zeta.adjoint()));
}

/// The unique Q-map X ⇸ Z agreeing with ζ (and ζ*) on Y ⊆ Z; new columns are ⊥.
/// Throws NotASubset.
template <QuantaleBackend Q>
QMap<Q> extend_codomain(const QMap<Q>& zeta, const FiniteSet& superset) {
  const CrispMap incl = inclusion(zeta.target(), superset);
  std::vector<std::optional<std::size_t>> from(superset.size());
  for (std::size_t y = 0; y < incl.source().size(); ++y) from[incl(y)] = y;
  const auto bot = zeta.quantale().bottom();
  const auto& rel = zeta.relation();
  auto extended = Relation<Q>::generate(zeta.quantale_handle(), zeta.source(), superset,
                                        [&](std::size_t x, std::size_t z) { return from[z] ? rel(x, *from[z]) : bot; });
  return promote(extended);
}

/// ζ|W for W ⊆ X. Throws NotASubset.
template <QuantaleBackend Q>
QMap<Q> restrict_domain(const QMap<Q>& zeta, const FiniteSet& subset) {
  const CrispMap incl = inclusion(subset, zeta.source());
  const auto& rel = zeta.relation();
  auto restricted = Relation<Q>::generate(zeta.quantale_handle(), subset, zeta.target(),
                                          [&](std::size_t w, std::size_t y) { return rel(incl(w), y); });
  return promote(restricted);
}

/// ζ∘ζ* = id_Y.
template <QuantaleBackend Q>
bool is_surjective(const QMap<Q>& zeta) {
  return compose(zeta.relation(), zeta.adjoint()) == identity(zeta.quantale_handle(), zeta.target());
}

/// (ζ*∘ζ)(x, x) = k and ζ(x, z) & ζ*(y, x) = ⊥ for all x and y ≠ z.
template <QuantaleBackend Q>
bool satisfies_diagonal_lemma(const QMap<Q>& zeta) {
  const Q& q = zeta.quantale();
  const auto& rel = zeta.relation();
  const auto& adj = zeta.adjoint();
  const std::size_t ny = zeta.target().size();
  for (std::size_t x = 0; x < zeta.source().size(); ++x) {
    auto diag = q.bottom();
    for (std::size_t y = 0; y < ny; ++y) diag = q.join(diag, q.mult(adj(y, x), rel(x, y)));
    if (!(diag == q.unit())) return false;
    for (std::size_t y = 0; y < ny; ++y)
      for (std::size_t z = 0; z < ny; ++z)
        if (y != z && !(q.mult(rel(x, z), adj(y, x)) == q.bottom())) return false;
  }
  return true;
}

/// η∘ζ as Q-maps; the adjoint of the composite is ζ*∘η*.
template <QuantaleBackend Q>
QMap<Q> compose(const QMap<Q>& eta, const QMap<Q>& zeta) {
  return promote(compose(eta.relation(), zeta.relation()));
}

template <QuantaleBackend Q>
QMap<Q> identity_map(std::shared_ptr<const Q> q, const FiniteSet& set) {
  return promote(identity(std::move(q), set));
}

}  // namespace qmaps
