#include "qmaps/finite_set.hpp"

#include <set>

#include "qmaps/error.hpp"

namespace qmaps {

FiniteSet::FiniteSet(std::vector<std::string> labels) {
  std::set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error("duplicate set label '" + l + "'");
  if (!labels.empty()) labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

FiniteSet FiniteSet::numbered(std::size_t size, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return FiniteSet(std::move(labels));
}

std::optional<std::size_t> FiniteSet::index_of(std::string_view label) const {
  const auto& ls = labels();
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] == label) return i;
  return std::nullopt;
}

std::string FiniteSet::to_string() const {
  std::string out = "{";
  const auto& ls = labels();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i != 0) out += ',';
    out += ls[i];
  }
  return out + "}";
}

FiniteSet disjoint_union(const FiniteSet& left, const FiniteSet& right) {
  std::vector<std::string> labels = left.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  used.insert(right.labels().begin(), right.labels().end());
  std::set<std::string> taken(labels.begin(), labels.end());
  for (const auto& l : right.labels()) {
    std::string tagged = l;
    if (taken.count(tagged) != 0) {
      do tagged += '\'';
      while (used.count(tagged) != 0);
    }
    used.insert(tagged);
    taken.insert(tagged);
    labels.push_back(std::move(tagged));
  }
  return FiniteSet(std::move(labels));
}

}  // namespace qmaps
