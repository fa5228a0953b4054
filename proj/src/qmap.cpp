#include "qmaps/qmap.hpp"

namespace qmaps {

CrispMap::CrispMap(FiniteSet source, FiniteSet target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.size()) throw Error("crisp map must assign every source element");
  for (std::size_t y : assignment_)
    if (y >= target_.size()) throw Error("crisp map image outside its target");
}

CrispMap inclusion(const FiniteSet& subset, const FiniteSet& superset) {
  std::vector<std::size_t> assignment;
  assignment.reserve(subset.size());
  for (const auto& label : subset.labels()) {
    auto i = superset.index_of(label);
    if (!i) throw NotASubset(subset.to_string() + " is not a subset of " + superset.to_string());
    assignment.push_back(*i);
  }
  return CrispMap(subset, superset, std::move(assignment));
}

}  // namespace qmaps
