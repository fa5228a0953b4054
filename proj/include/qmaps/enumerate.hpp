#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmaps/qmap.hpp"
#include "qmaps/quantale.hpp"

namespace qmaps {

using FiniteRelation = Relation<Quantale>;
using FiniteQMap = QMap<Quantale>;

/// Limits for exhaustive searches. The defaults keep every profile at ≤ 5⁴ = 625 matrices.
struct EnumerationBudget {
  std::size_t max_set = 2;
  std::size_t max_quantale = 5;
  std::uint64_t max_matrices = 625;
};

/// |Q|^(|X|·|Y|), saturating at UINT64_MAX.
std::uint64_t candidate_count(const Quantale& q, std::size_t source_size, std::size_t target_size);

/// Visits every relation X ⇸ Y in lexicographic order of the row-major entry
/// vector (first entry most significant, elements in carrier order).
/// Throws BudgetExceeded when there are more than `max_matrices` candidates.
void for_each_relation(const QuantalePtr& q, const FiniteSet& source, const FiniteSet& target,
                       std::uint64_t max_matrices, const std::function<void(const FiniteRelation&)>& visit);

/// All Q-maps X ⇸ Y in lexicographic order. Throws BudgetExceeded.
std::vector<FiniteQMap> enumerate_qmaps(const QuantalePtr& q, const FiniteSet& source, const FiniteSet& target,
                                        std::uint64_t max_matrices = EnumerationBudget{}.max_matrices);

/// Census of one profile |X| × |Y|.
struct ProfileReport {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::uint64_t total_relations = 0;
  std::uint64_t qmap_count = 0;
  std::uint64_t symmetric_count = 0;
  std::uint64_t graph_count = 0;
  /// Q-maps breaking (ζ*∘ζ)(x,x) = k or off-diagonal annihilation; always 0 for a sound build.
  std::uint64_t diagonal_lemma_failures = 0;
  /// First (lexicographic) asymmetric resp. non-graph Q-map, when the theorem's property fails.
  std::optional<FiniteRelation> witness;
};

enum class Theorem { SymmetricIffWeaklyLean, GraphsIffLean };

/// How a harness verdict relates to the quantale predicate.
enum class Agreement {
  Agree,         // predicate true and property verified, or predicate false and witness found
  Inconclusive,  // predicate false but no witness within the budget
  Contradiction  // predicate true yet a witness exists
};

struct TheoremReport {
  std::string quantale;
  Theorem theorem = Theorem::SymmetricIffWeaklyLean;
  bool predicate = false;  // is_weakly_lean resp. is_lean
  EnumerationBudget budget;
  std::vector<ProfileReport> profiles;

  bool property_holds() const;
  std::optional<FiniteRelation> first_witness() const;
  Agreement agreement() const;
  std::uint64_t diagonal_lemma_failures() const;
};

/// Every Q-map at |X|, |Y| ≤ max_set is symmetric iff Q is weakly lean. Throws BudgetExceeded.
TheoremReport check_symmetric_iff_weakly_lean(const QuantalePtr& q, const EnumerationBudget& budget = {});

/// Every Q-map at |X|, |Y| ≤ max_set is a graph iff Q is lean. Throws BudgetExceeded.
TheoremReport check_graphs_iff_lean(const QuantalePtr& q, const EnumerationBudget& budget = {});

std::string to_string(Theorem t);
std::string to_string(Agreement a);

}  // namespace qmaps
