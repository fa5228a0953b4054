#pragma once

// Naive reference implementations used as oracles. They only rely on the
// quantale's order, join and multiplication tables and never on the library
// routines they are compared against.

#include <functional>
#include <optional>
#include <vector>

#include "qmaps/enumerate.hpp"
#include "qmaps/zoo.hpp"

namespace oracle {

using qmaps::Element;
using qmaps::FiniteRelation;
using qmaps::FiniteSet;
using qmaps::Quantale;
using qmaps::QuantalePtr;

inline QuantalePtr zoo(const std::string& name) { return qmaps::builtin(name).quantale; }

/// Relation from labels, one inner vector per source element.
inline FiniteRelation make(const QuantalePtr& q, const FiniteSet& x, const FiniteSet& y,
                           const std::vector<std::vector<std::string>>& by_source) {
  std::vector<Element> entries;
  for (const auto& row : by_source)
    for (const auto& label : row) entries.push_back(q->element(label));
  return FiniteRelation(q, x, y, entries);
}

inline Element join_all(const Quantale& q, const std::vector<Element>& xs) {
  Element acc = q.bottom();
  for (auto x : xs) acc = q.join(acc, x);
  return acc;
}

/// ⋁{r : a & r ≤ b}.
inline Element residuum(const Quantale& q, Element a, Element b) {
  std::vector<Element> below;
  for (auto r : q.elements())
    if (q.leq(q.mult(a, r), b)) below.push_back(r);
  return join_all(q, below);
}

/// (ψ∘φ)(x, z) = ⋁_y ψ(y, z) & φ(x, y), straight from the definition.
inline FiniteRelation compose(const FiniteRelation& psi, const FiniteRelation& phi) {
  const Quantale& q = phi.quantale();
  std::vector<Element> entries;
  for (std::size_t x = 0; x < phi.source().size(); ++x)
    for (std::size_t z = 0; z < psi.target().size(); ++z) {
      std::vector<Element> terms;
      for (std::size_t y = 0; y < phi.target().size(); ++y) terms.push_back(q.mult(psi(y, z), phi(x, y)));
      entries.push_back(join_all(q, terms));
    }
  return FiniteRelation(phi.quantale_handle(), phi.source(), psi.target(), entries);
}

inline bool leq(const FiniteRelation& a, const FiniteRelation& b) {
  for (std::size_t x = 0; x < a.source().size(); ++x)
    for (std::size_t y = 0; y < a.target().size(); ++y)
      if (!a.quantale().leq(a(x, y), b(x, y))) return false;
  return true;
}

inline FiniteRelation diagonal(const QuantalePtr& q, const FiniteSet& set) {
  std::vector<Element> entries;
  for (std::size_t x = 0; x < set.size(); ++x)
    for (std::size_t y = 0; y < set.size(); ++y) entries.push_back(x == y ? q->unit() : q->bottom());
  return FiniteRelation(q, set, set, entries);
}

/// Every relation X ⇸ Y, row-major odometer with the first entry most significant.
inline std::vector<FiniteRelation> all_relations(const QuantalePtr& q, const FiniteSet& x, const FiniteSet& y) {
  const std::size_t cells = x.size() * y.size();
  const auto elems = q->elements();
  std::vector<FiniteRelation> out;
  std::vector<std::size_t> digits(cells, 0);
  while (true) {
    std::vector<Element> entries;
    for (auto d : digits) entries.push_back(elems[d]);
    out.emplace_back(q, x, y, entries);
    std::size_t i = cells;
    while (i > 0 && ++digits[i - 1] == elems.size()) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// The right adjoint of φ found by exhaustive search: ψ with id ≤ ψ∘φ and φ∘ψ ≤ id.
inline std::optional<FiniteRelation> brute_adjoint(const FiniteRelation& phi) {
  const auto q = phi.quantale_handle();
  const auto id_x = diagonal(q, phi.source());
  const auto id_y = diagonal(q, phi.target());
  for (const auto& psi : all_relations(q, phi.target(), phi.source()))
    if (leq(id_x, compose(psi, phi)) && leq(compose(phi, psi), id_y)) return psi;
  return std::nullopt;
}

/// The weakly-lean condition over every family of distinct pairs, including
/// pairs whose product is ⊥, enumerated as cliques of the cross-⊥ relation.
inline bool weakly_lean(const Quantale& q) {
  std::vector<std::pair<Element, Element>> pairs;
  for (auto p : q.elements())
    for (auto r : q.elements()) pairs.emplace_back(p, r);
  const std::size_t n = pairs.size();
  auto cross = [&](std::size_t i, std::size_t j) {
    return q.mult(pairs[i].first, pairs[j].second) == q.bottom() && q.mult(pairs[j].first, pairs[i].second) == q.bottom();
  };
  std::vector<std::size_t> chosen;
  bool ok = true;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!ok) return;
    if (!chosen.empty()) {
      Element hyp = q.bottom();
      Element concl = q.bottom();
      for (auto i : chosen) {
        hyp = q.join(hyp, q.mult(pairs[i].first, pairs[i].second));
        const Element m = q.meet(pairs[i].first, pairs[i].second);
        concl = q.join(concl, q.mult(m, m));
      }
      if (hyp == q.unit() && !q.leq(q.unit(), concl)) ok = false;
    }
    for (std::size_t j = from; j < n && ok; ++j) {
      bool fits = true;
      for (auto i : chosen) fits = fits && cross(i, j);
      if (!fits) continue;
      chosen.push_back(j);
      grow(j + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return ok;
}

inline bool lean(const Quantale& q) {
  const auto k = q.unit();
  for (auto p : q.elements())
    for (auto r : q.elements()) {
      if (q.join(p, r) == k && q.mult(p, r) == q.bottom() && p != k && r != k) return false;
      if ((q.mult(p, r) == k) != (p == k && r == k)) return false;
    }
  return true;
}

}  // namespace oracle
