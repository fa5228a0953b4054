#include "qmaps/enumerate.hpp"

#include "qmaps/error.hpp"

namespace qmaps {

std::uint64_t candidate_count(const Quantale& q, std::size_t source_size, std::size_t target_size) {
  std::uint64_t count = 1;
  const std::size_t cells = source_size * target_size;
  for (std::size_t i = 0; i < cells; ++i) {
    if (__builtin_mul_overflow(count, static_cast<std::uint64_t>(q.size()), &count)) return UINT64_MAX;
  }
  return count;
}

void for_each_relation(const QuantalePtr& q, const FiniteSet& source, const FiniteSet& target,
                       std::uint64_t max_matrices, const std::function<void(const FiniteRelation&)>& visit) {
  const std::uint64_t total = candidate_count(*q, source.size(), target.size());
  if (total > max_matrices)
    throw BudgetExceeded(std::to_string(q->size()) + "^(" + std::to_string(source.size()) + "·" +
                         std::to_string(target.size()) + ") candidate matrices exceed the budget of " +
                         std::to_string(max_matrices));
  const std::size_t cells = source.size() * target.size();
  const auto n = static_cast<std::uint16_t>(q->size());
  std::vector<Element> entries(cells, Element{0});
  while (true) {
    visit(FiniteRelation(q, source, target, entries));
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++entries[i].index < n) break;
      entries[i].index = 0;
      if (i == 0) return;
    }
    if (cells == 0) return;
  }
}

std::vector<FiniteQMap> enumerate_qmaps(const QuantalePtr& q, const FiniteSet& source, const FiniteSet& target,
                                        std::uint64_t max_matrices) {
  std::vector<FiniteQMap> maps;
  for_each_relation(q, source, target, max_matrices, [&](const FiniteRelation& phi) {
    if (auto zeta = try_promote(phi)) maps.push_back(std::move(*zeta));
  });
  return maps;
}

namespace {

struct Survey {
  std::vector<ProfileReport> symmetric;
  std::vector<ProfileReport> graphs;
};

Survey survey(const QuantalePtr& q, const EnumerationBudget& budget) {
  if (q->size() > budget.max_quantale)
    throw BudgetExceeded("quantale " + q->name() + " has " + std::to_string(q->size()) +
                         " elements, above the budget of " + std::to_string(budget.max_quantale));
  Survey out;
  for (std::size_t m = 0; m <= budget.max_set; ++m) {
    for (std::size_t n = 0; n <= budget.max_set; ++n) {
      ProfileReport base;
      base.source_size = m;
      base.target_size = n;
      ProfileReport sym = base;
      ProfileReport gr = base;
      const FiniteSet source = FiniteSet::numbered(m, "x");
      const FiniteSet target = FiniteSet::numbered(n, "y");
      for_each_relation(q, source, target, budget.max_matrices, [&](const FiniteRelation& phi) {
        ++base.total_relations;
        auto zeta = try_promote(phi);
        if (!zeta) return;
        ++base.qmap_count;
        if (!satisfies_diagonal_lemma(*zeta)) ++base.diagonal_lemma_failures;
        if (is_symmetric(*zeta)) {
          ++base.symmetric_count;
        } else if (!sym.witness) {
          sym.witness = phi;
        }
        if (try_as_crisp_map(*zeta)) {
          ++base.graph_count;
        } else if (!gr.witness) {
          gr.witness = phi;
        }
      });
      for (ProfileReport* r : {&sym, &gr}) {
        r->total_relations = base.total_relations;
        r->qmap_count = base.qmap_count;
        r->symmetric_count = base.symmetric_count;
        r->graph_count = base.graph_count;
        r->diagonal_lemma_failures = base.diagonal_lemma_failures;
      }
      out.symmetric.push_back(std::move(sym));
      out.graphs.push_back(std::move(gr));
    }
  }
  return out;
}

}  // namespace

bool TheoremReport::property_holds() const {
  for (const auto& p : profiles)
    if (p.witness) return false;
  return true;
}

std::optional<FiniteRelation> TheoremReport::first_witness() const {
  for (const auto& p : profiles)
    if (p.witness) return p.witness;
  return std::nullopt;
}

Agreement TheoremReport::agreement() const {
  const bool holds = property_holds();
  if (predicate) return holds ? Agreement::Agree : Agreement::Contradiction;
  return holds ? Agreement::Inconclusive : Agreement::Agree;
}

std::uint64_t TheoremReport::diagonal_lemma_failures() const {
  std::uint64_t total = 0;
  for (const auto& p : profiles) total += p.diagonal_lemma_failures;
  return total;
}

TheoremReport check_symmetric_iff_weakly_lean(const QuantalePtr& q, const EnumerationBudget& budget) {
  TheoremReport report;
  report.quantale = q->name();
  report.theorem = Theorem::SymmetricIffWeaklyLean;
  report.predicate = is_weakly_lean(*q);
  report.budget = budget;
  report.profiles = survey(q, budget).symmetric;
  return report;
}

TheoremReport check_graphs_iff_lean(const QuantalePtr& q, const EnumerationBudget& budget) {
  TheoremReport report;
  report.quantale = q->name();
  report.theorem = Theorem::GraphsIffLean;
  report.predicate = is_lean(*q);
  report.budget = budget;
  report.profiles = survey(q, budget).graphs;
  return report;
}

std::string to_string(Theorem t) {
  return t == Theorem::SymmetricIffWeaklyLean ? "symmetric-iff-weakly-lean" : "graphs-iff-lean";
}

std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree:
      return "agree";
    case Agreement::Inconclusive:
      return "inconclusive";
    case Agreement::Contradiction:
      return "contradiction";
  }
  return "unknown";
}

}  // namespace qmaps
