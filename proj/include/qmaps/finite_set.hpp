#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmaps {

/// A crisp finite set given by distinct labels. Equality compares labels in order.
/// Copies share the label storage.
class FiniteSet {
 public:
  FiniteSet() = default;
  /// Throws Error on duplicate labels.
  explicit FiniteSet(std::vector<std::string> labels);
  FiniteSet(std::initializer_list<std::string> labels) : FiniteSet(std::vector<std::string>(labels)) {}

  /// {prefix0, prefix1, ...}.
  static FiniteSet numbered(std::size_t size, std::string_view prefix);

  std::size_t size() const noexcept { return labels().size(); }
  bool empty() const noexcept { return labels().empty(); }
  const std::string& label(std::size_t i) const { return labels().at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_ ? *labels_ : kNoLabels; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  bool contains(std::string_view label) const { return index_of(label).has_value(); }

  std::string to_string() const;

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
    return a.labels_ == b.labels_ || a.labels() == b.labels();
  }

 private:
  static inline const std::vector<std::string> kNoLabels{};
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// X ⨿ Z: the labels of `left` followed by those of `right`. A right label that
/// collides with an earlier one is tagged with trailing primes until unique.
FiniteSet disjoint_union(const FiniteSet& left, const FiniteSet& right);

}  // namespace qmaps
