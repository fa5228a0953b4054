#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qmaps/enumerate.hpp"
#include "qmaps/kleisli.hpp"
#include "qmaps/partition.hpp"

namespace qmaps {

using FinitePartialQMap = PartialQMap<Quantale>;
using FinitePartition = QPartition<Quantale>;

/// Outcome of checking one law over a family of instances.
struct LawCheck {
  std::string law;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when failures == 0

  bool passed() const { return failures == 0; }
};

bool all_passed(const std::vector<LawCheck>& checks);

/// Default enumeration cap for Kleisli drivers; partial maps at |X|, |Y| ≤ 2 over
/// a 4-element quantale need 4⁶ candidates.
inline constexpr std::uint64_t kKleisliBudget = 65'536;

/// All partial Q-maps X ⇝ Y, i.e. Q-maps X ⇸ Y₊, in lexicographic order.
std::vector<FinitePartialQMap> enumerate_partial_maps(const QuantalePtr& q, const FiniteSet& source,
                                                      const FiniteSet& base_target,
                                                      std::uint64_t max_matrices = kKleisliBudget);

/// Unit laws, associativity and naturality of (T, m, ι) for |X|, |Y| ≤ max_set.
std::vector<LawCheck> verify_monad_laws(const QuantalePtr& q, std::size_t max_set,
                                        std::uint64_t max_matrices = kKleisliBudget);

/// Kleisli unit laws and associativity, agreement of ⋄ with m_Z∘η₊∘ζ, functoriality
/// of the total embedding and of K, K(ζ)∘τ_X = τ_Y, and ζ(x,⋆) & ζ*(y,x) = ⊥,
/// over every partial map between sets of size ≤ max_set.
std::vector<LawCheck> verify_kleisli_laws(const QuantalePtr& q, std::size_t max_set,
                                          std::uint64_t max_matrices = kKleisliBudget);

/// free_algebra_iso on every T-algebra {⋆} ⇸ X with 1 ≤ |X| ≤ max_set, plus the
/// structure-map round trip.
std::vector<LawCheck> verify_free_algebras(const QuantalePtr& q, std::size_t max_set,
                                           std::uint64_t max_matrices = kKleisliBudget);

/// `count` valid Q-partitions found by rejection sampling random membership
/// tables with 1 ≤ |X| ≤ max_set and 1 ≤ |Σ| ≤ |X| + 1. Accepted tables may
/// repeat. Draws come from mt19937_64 seeded with `seed`; throws
/// BudgetExceeded after `max_attempts`.
std::vector<FinitePartition> sample_partitions(const QuantalePtr& q, std::size_t max_set, std::size_t count,
                                               std::uint64_t seed, std::uint64_t max_attempts = 50'000'000);

/// Every Q-partition with 1 ≤ |X| ≤ max_set and 1 ≤ |Σ| ≤ max_blocks, once per set of
/// blocks, with blocks in lexicographic order of their membership vectors.
/// Throws BudgetExceeded after `max_tables` partial block families.
std::vector<FinitePartition> enumerate_partitions(const QuantalePtr& q, std::size_t max_set, std::size_t max_blocks,
                                                  std::uint64_t max_tables = 1'000'000);

/// Number of distinct partitions in `sample`, ignoring block order and labels.
std::size_t distinct_count(const std::vector<FinitePartition>& sample);

}  // namespace qmaps
