#include "qmaps/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <random>

#include "qmaps/error.hpp"

namespace qmaps {

namespace {

std::string brief(const FiniteRelation& r) {
  std::string out = r.source().to_string() + "->" + r.target().to_string() + " [";
  for (std::size_t x = 0; x < r.source().size(); ++x) {
    if (x) out += "; ";
    for (std::size_t y = 0; y < r.target().size(); ++y) out += (y ? " " : "") + r.quantale().label(r(x, y));
  }
  return out + "]";
}

// Runs one instance of a law; a thrown library error counts as a failure.
void check(LawCheck& law, const std::function<bool()>& holds, const std::function<std::string()>& describe) {
  ++law.instances;
  bool ok = false;
  std::string detail;
  try {
    ok = holds();
  } catch (const Error& e) {
    detail = std::string(" (") + e.what() + ")";
  }
  if (ok) return;
  if (law.failures++ == 0) law.first_failure = describe() + detail;
}

FiniteSet set_of(std::size_t n) { return FiniteSet::numbered(n, "x"); }

}  // namespace

bool all_passed(const std::vector<LawCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

std::vector<FinitePartialQMap> enumerate_partial_maps(const QuantalePtr& q, const FiniteSet& source,
                                                      const FiniteSet& base_target, std::uint64_t max_matrices) {
  std::vector<FinitePartialQMap> out;
  for (auto& zeta : enumerate_qmaps(q, source, plus(base_target), max_matrices))
    out.emplace_back(std::move(zeta), base_target);
  return out;
}

std::vector<LawCheck> verify_monad_laws(const QuantalePtr& q, std::size_t max_set, std::uint64_t max_matrices) {
  LawCheck left{"m_X∘ι_(X₊) = id_(X₊)"};
  LawCheck right{"m_X∘(ι_X)₊ = id_(X₊)"};
  LawCheck assoc{"m_X∘m_(X₊) = m_X∘(m_X)₊"};
  LawCheck unit_nat{"ζ₊∘ι_X = ι_Y∘ζ"};
  LawCheck mult_nat{"m_Y∘(ζ₊)₊ = ζ₊∘m_X"};
  LawCheck coproduct{"ζ⨿η is a Q-map with adjoint ζ*⨿η*"};

  for (std::size_t n = 0; n <= max_set; ++n) {
    const FiniteSet x = set_of(n);
    const FiniteSet xp = plus(x);
    const auto m = multiplication(q, x).relation();
    const auto id = identity(q, xp);
    check(left, [&] { return compose(m, unit_map(q, xp).relation()) == id; }, [&] { return "|X| = " + std::to_string(n); });
    check(right, [&] { return compose(m, plus_relation(unit_map(q, x).relation())) == id; },
          [&] { return "|X| = " + std::to_string(n); });
    check(assoc,
          [&] {
            return compose(m, multiplication(q, xp).relation()) == compose(m, plus_relation(m));
          },
          [&] { return "|X| = " + std::to_string(n); });
  }

  std::vector<std::vector<std::vector<FiniteQMap>>> maps(max_set + 1, std::vector<std::vector<FiniteQMap>>(max_set + 1));
  for (std::size_t a = 0; a <= max_set; ++a)
    for (std::size_t b = 0; b <= max_set; ++b) maps[a][b] = enumerate_qmaps(q, set_of(a), set_of(b), max_matrices);

  for (std::size_t a = 0; a <= max_set; ++a)
    for (std::size_t b = 0; b <= max_set; ++b)
      for (const auto& zeta : maps[a][b]) {
        const auto& rel = zeta.relation();
        const auto zp = plus_relation(rel);
        check(unit_nat, [&] { return compose(zp, unit_map(q, set_of(a)).relation()) == compose(unit_map(q, set_of(b)).relation(), rel); },
              [&] { return brief(rel); });
        check(mult_nat,
              [&] {
                return compose(multiplication(q, set_of(b)).relation(), plus_relation(zp)) ==
                       compose(zp, multiplication(q, set_of(a)).relation());
              },
              [&] { return brief(rel); });
      }

  for (std::size_t a = 0; a <= max_set; ++a)
    for (std::size_t b = 0; b <= max_set; ++b)
      for (std::size_t c = 0; c <= max_set; ++c)
        for (std::size_t d = 0; d <= max_set; ++d)
          for (const auto& zeta : maps[a][b])
            for (const auto& eta : maps[c][d])
              check(coproduct,
                    [&] {
                      auto sum = try_promote(disjoint_union(eta.relation(), zeta.relation()));
                      return sum && sum->adjoint() == disjoint_union(eta.adjoint(), zeta.adjoint());
                    },
                    [&] { return brief(zeta.relation()) + " ⨿ " + brief(eta.relation()); });

  return {left, right, assoc, unit_nat, mult_nat, coproduct};
}

std::vector<LawCheck> verify_kleisli_laws(const QuantalePtr& q, std::size_t max_set, std::uint64_t max_matrices) {
  LawCheck left_unit{"ι_Y⋄ζ = ζ"};
  LawCheck right_unit{"ζ⋄ι_X = ζ"};
  LawCheck assoc{"(θ⋄η)⋄ζ = θ⋄(η⋄ζ)"};
  LawCheck monadic{"η⋄ζ = m_Z∘η₊∘ζ"};
  LawCheck k_functor{"K(η⋄ζ) = K(η)∘K(ζ)"};
  LawCheck k_identity{"K(ι_X) = id_(X₊)"};
  LawCheck k_tau{"K(ζ)∘τ_X = τ_Y"};
  LawCheck embed{"embed(η∘ζ) = embed(η)⋄embed(ζ)"};
  LawCheck full{"⊥ star column and row ⇒ ζ comes from a Q-map"};
  LawCheck undefined{"ζ(x,⋆) & ζ*(y,x) = ⊥"};

  const std::size_t s = max_set + 1;
  std::vector<std::vector<std::vector<FinitePartialQMap>>> partial(s, std::vector<std::vector<FinitePartialQMap>>(s));
  std::vector<std::vector<std::vector<FiniteQMap>>> total(s, std::vector<std::vector<FiniteQMap>>(s));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      partial[a][b] = enumerate_partial_maps(q, set_of(a), set_of(b), max_matrices);
      total[a][b] = enumerate_qmaps(q, set_of(a), set_of(b), max_matrices);
    }

  for (std::size_t a = 0; a < s; ++a) {
    const auto iota = kleisli_identity(q, set_of(a));
    check(k_identity, [&] { return comparison_K(iota).relation() == identity(q, plus(set_of(a))); },
          [&] { return "|X| = " + std::to_string(a); });
    for (std::size_t b = 0; b < s; ++b) {
      const auto iota_b = kleisli_identity(q, set_of(b));
      for (const auto& zeta : partial[a][b]) {
        auto show = [&] { return brief(zeta.relation()); };
        check(left_unit, [&] { return kleisli_compose(iota_b, zeta) == zeta; }, show);
        check(right_unit, [&] { return kleisli_compose(zeta, iota) == zeta; }, show);
        check(k_tau,
              [&] {
                return compose(comparison_K(zeta).relation(), tau(q, set_of(a)).relation()) == tau(q, set_of(b)).relation();
              },
              show);
        check(undefined,
              [&] {
                const auto& adj = zeta.map().adjoint();
                for (std::size_t x = 0; x < a; ++x)
                  for (std::size_t y = 0; y < b; ++y)
                    if (q->mult(zeta(x, zeta.star()), adj(y, x)) != q->bottom()) return false;
                return true;
              },
              show);
        bool star_free = true;
        for (std::size_t x = 0; x < a; ++x)
          if (zeta(x, zeta.star()) != q->bottom() || zeta.map().adjoint()(zeta.star(), x) != q->bottom()) star_free = false;
        if (star_free)
          check(full,
                [&] {
                  auto cut = FiniteRelation::generate(q, set_of(a), set_of(b),
                                                      [&](std::size_t x, std::size_t y) { return zeta(x, y); });
                  auto map = try_promote(cut);
                  return map && embed_total(*map) == zeta;
                },
                show);
      }
    }
  }

  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b)
      for (std::size_t c = 0; c < s; ++c) {
        for (const auto& zeta : partial[a][b])
          for (const auto& eta : partial[b][c]) {
            auto show = [&] { return brief(eta.relation()) + " ⋄ " + brief(zeta.relation()); };
            check(monadic, [&] { return kleisli_compose(eta, zeta).relation() == kleisli_compose_via_monad(eta, zeta); }, show);
            check(k_functor,
                  [&] {
                    return comparison_K(kleisli_compose(eta, zeta)).relation() ==
                           compose(comparison_K(eta).relation(), comparison_K(zeta).relation());
                  },
                  show);
          }
        for (const auto& zeta : total[a][b])
          for (const auto& eta : total[b][c])
            check(embed, [&] { return embed_total(compose(eta, zeta)) == kleisli_compose(embed_total(eta), embed_total(zeta)); },
                  [&] { return brief(eta.relation()) + " ∘ " + brief(zeta.relation()); });
        for (std::size_t d = 0; d < s; ++d)
          for (const auto& zeta : partial[a][b])
            for (const auto& eta : partial[b][c]) {
              const auto eta_zeta = kleisli_compose(eta, zeta);
              for (const auto& theta : partial[c][d])
                check(assoc, [&] { return kleisli_compose(kleisli_compose(theta, eta), zeta) == kleisli_compose(theta, eta_zeta); },
                      [&] { return brief(theta.relation()) + " ⋄ " + brief(eta.relation()) + " ⋄ " + brief(zeta.relation()); });
            }
      }

  return {left_unit, right_unit, assoc, monadic, k_functor, k_identity, k_tau, embed, full, undefined};
}

std::vector<LawCheck> verify_free_algebras(const QuantalePtr& q, std::size_t max_set, std::uint64_t max_matrices) {
  LawCheck iso{"free_algebra_iso: η∘ζ = id, ζ∘η = id, ζ∘μ = τ, η∘τ = μ"};
  LawCheck structure{"structure map determines the point"};
  for (std::size_t n = 1; n <= max_set; ++n) {
    const FiniteSet x = set_of(n);
    for (const auto& mu : enumerate_qmaps(q, point(), x, max_matrices)) {
      const TAlgebra<Quantale> algebra(mu);
      check(iso, [&] { free_algebra_iso(algebra); return true; }, [&] { return brief(mu.relation()); });
      check(structure, [&] { return TAlgebra<Quantale>::from_structure(algebra.structure(), x).point_map() == mu; },
            [&] { return brief(mu.relation()); });
    }
  }
  return {iso, structure};
}

std::vector<FinitePartition> sample_partitions(const QuantalePtr& q, std::size_t max_set, std::size_t count,
                                               std::uint64_t seed, std::uint64_t max_attempts) {
  if (max_set == 0) throw Error("partition sampling needs max_set ≥ 1");
  std::mt19937_64 rng(seed);
  const auto elems = q->elements();
  std::vector<FinitePartition> found;
  for (std::uint64_t attempt = 0; found.size() < count; ++attempt) {
    if (attempt == max_attempts)
      throw BudgetExceeded("found " + std::to_string(found.size()) + " of " + std::to_string(count) +
                           " partitions in " + std::to_string(max_attempts) + " attempts");
    const std::size_t nx = 1 + rng() % max_set;
    const std::size_t nb = 1 + rng() % (nx + 1);
    std::vector<FinitePartition::Block> blocks(nb, FinitePartition::Block(nx));
    for (auto& block : blocks)
      for (auto& e : block) e = elems[rng() % elems.size()];
    try {
      found.emplace_back(q, set_of(nx), FiniteSet::numbered(nb, "S"), std::move(blocks));
    } catch (const InvalidPartition&) {
    }
  }
  return found;
}

std::vector<FinitePartition> enumerate_partitions(const QuantalePtr& q, std::size_t max_set, std::size_t max_blocks,
                                                  std::uint64_t max_tables) {
  const auto elems = q->elements();
  std::vector<FinitePartition> out;
  std::uint64_t visited = 0;
  for (std::size_t nx = 1; nx <= max_set; ++nx) {
    // every block X → Q with ⋁_x Sx = k, in lexicographic order
    std::vector<FinitePartition::Block> candidates;
    std::vector<std::size_t> digits(nx, 0);
    while (true) {
      FinitePartition::Block block(nx);
      Element cover = q->bottom();
      for (std::size_t x = 0; x < nx; ++x) {
        block[x] = elems[digits[x]];
        cover = q->join(cover, block[x]);
      }
      if (cover == q->unit()) candidates.push_back(std::move(block));
      std::size_t i = nx;
      while (i > 0 && ++digits[i - 1] == elems.size()) digits[--i] = 0;
      if (i == 0) break;
    }
    std::vector<std::size_t> chosen;
    auto disjoint = [&](std::size_t a, std::size_t b) {
      for (std::size_t x = 0; x < nx; ++x)
        if (q->mult(candidates[a][x], candidates[b][x]) != q->bottom()) return false;
      return true;
    };
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      if (++visited > max_tables)
        throw BudgetExceeded("partition search for |X| = " + std::to_string(nx) + " exceeds " +
                             std::to_string(max_tables) + " block families");
      if (!chosen.empty()) {
        std::vector<FinitePartition::Block> blocks;
        for (auto c : chosen) blocks.push_back(candidates[c]);
        try {
          out.emplace_back(q, set_of(nx), FiniteSet::numbered(chosen.size(), "S"), std::move(blocks));
        } catch (const InvalidPartition&) {
        }
      }
      if (chosen.size() == max_blocks) return;
      for (std::size_t j = from; j < candidates.size(); ++j) {
        bool fits = true;
        for (auto c : chosen) fits = fits && disjoint(c, j);
        if (!fits) continue;
        chosen.push_back(j);
        grow(j + 1);
        chosen.pop_back();
      }
    };
    grow(0);
  }
  return out;
}

std::size_t distinct_count(const std::vector<FinitePartition>& sample) {
  std::set<std::pair<std::vector<std::string>, std::vector<FinitePartition::Block>>> seen;
  for (const auto& sigma : sample) {
    auto blocks = sigma.blocks();
    std::sort(blocks.begin(), blocks.end());
    seen.emplace(sigma.underlying().labels(), std::move(blocks));
  }
  return seen.size();
}

}  // namespace qmaps
