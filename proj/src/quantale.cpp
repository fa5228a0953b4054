#include "qmaps/quantale.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "qmaps/error.hpp"

namespace qmaps {
namespace {

using Table = std::vector<std::uint16_t>;

// Boolean matrix helper with (i, j) addressing over an n-element carrier.
struct Square {
  std::size_t n;
  std::vector<std::uint8_t> bits;

  explicit Square(std::size_t size) : n(size), bits(size * size, 0) {}
  bool get(std::size_t i, std::size_t j) const { return bits[i * n + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v = true) { bits[i * n + j] = v ? 1 : 0; }
};

Square order_from_pairs(const QuantaleSpec& spec) {
  const std::size_t n = spec.labels.size();
  Square leq(n);
  for (std::size_t i = 0; i < n; ++i) leq.set(i, i);
  for (auto [a, b] : spec.order) {
    if (a >= n || b >= n) throw AxiomViolation("order pair in range", {std::to_string(a), std::to_string(b)});
    leq.set(a, b);
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq.get(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (leq.get(k, j)) leq.set(i, j);
  return leq;
}

Square order_from_join_table(const QuantaleSpec& spec) {
  const std::size_t n = spec.labels.size();
  const auto& jt = spec.join_table;
  if (jt.size() != n * n) throw AxiomViolation("join table is total", {std::to_string(jt.size()) + " entries"});
  auto j = [&](std::size_t a, std::size_t b) { return jt[a * n + b]; };
  const auto& L = spec.labels;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (j(a, b) >= n) throw AxiomViolation("join table in range", {L[a], L[b]});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (j(a, a) != a) throw AxiomViolation("join idempotent", {L[a]});
    for (std::size_t b = 0; b < n; ++b) {
      if (j(a, b) != j(b, a)) throw AxiomViolation("join commutative", {L[a], L[b]});
      for (std::size_t c = 0; c < n; ++c)
        if (j(j(a, b), c) != j(a, j(b, c))) throw AxiomViolation("join associative", {L[a], L[b], L[c]});
    }
  }
  Square leq(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq.set(a, b, j(a, b) == b);
  return leq;
}

// Least element of `candidates` under `leq`, if it is below every candidate.
std::optional<std::size_t> least_of(const Square& leq, const std::vector<std::size_t>& candidates) {
  for (std::size_t c : candidates) {
    if (std::all_of(candidates.begin(), candidates.end(), [&](std::size_t d) { return leq.get(c, d); })) return c;
  }
  return std::nullopt;
}

std::optional<std::size_t> greatest_of(const Square& leq, const std::vector<std::size_t>& candidates) {
  for (std::size_t c : candidates) {
    if (std::all_of(candidates.begin(), candidates.end(), [&](std::size_t d) { return leq.get(d, c); })) return c;
  }
  return std::nullopt;
}

}  // namespace

void Quantale::out_of_range() const { throw Error("element index out of range for quantale " + name_); }

std::vector<Element> Quantale::elements() const {
  std::vector<Element> out(labels_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Element{static_cast<std::uint16_t>(i)};
  return out;
}

const std::string& Quantale::label(Element e) const {
  if (e.index >= labels_.size()) throw Error("element index out of range for quantale " + name_);
  return labels_[e.index];
}

std::optional<Element> Quantale::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return Element{static_cast<std::uint16_t>(i)};
  return std::nullopt;
}

Element Quantale::element(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw UnknownName("no element '" + std::string(label) + "' in quantale " + name_);
}

bool Quantale::operator==(const Quantale& other) const {
  return labels_ == other.labels_ && unit_ == other.unit_ && leq_ == other.leq_ && mult_ == other.mult_;
}

Quantale Quantale::build(const QuantaleSpec& spec) {
  const std::size_t n = spec.labels.size();
  if (n < 2) throw TrivialQuantale("quantale " + spec.name + " needs at least two elements (⊥ < k)");
  if (n > UINT16_MAX) throw Error("carrier too large");
  {
    std::set<std::string> seen;
    for (const auto& l : spec.labels)
      if (!seen.insert(l).second) throw AxiomViolation("distinct element labels", {l});
  }
  const auto& L = spec.labels;
  if (spec.unit >= n) throw AxiomViolation("unit in carrier", {std::to_string(spec.unit)});

  Square leq(n);
  const bool has_join = !spec.join_table.empty();
  if (has_join) {
    leq = order_from_join_table(spec);
    if (!spec.order.empty()) {
      Square from_pairs = order_from_pairs(spec);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (from_pairs.get(a, b) != leq.get(a, b)) throw AxiomViolation("order agrees with join table", {L[a], L[b]});
    }
  } else {
    leq = order_from_pairs(spec);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq.get(a, b) && leq.get(b, a)) throw AxiomViolation("order antisymmetric", {L[a], L[b]});

  Quantale q;
  q.name_ = spec.name;
  q.labels_ = spec.labels;
  q.leq_.assign(n * n, 0);
  q.join_.assign(n * n, 0);
  q.meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) q.leq_[a * n + b] = leq.get(a, b) ? 1 : 0;

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  auto bottom = least_of(leq, all);
  auto top = greatest_of(leq, all);
  if (!bottom) throw AxiomViolation("least element exists", {});
  if (!top) throw AxiomViolation("greatest element exists", {});

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> upper, lower;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq.get(a, c) && leq.get(b, c)) upper.push_back(c);
        if (leq.get(c, a) && leq.get(c, b)) lower.push_back(c);
      }
      auto j = least_of(leq, upper);
      auto m = greatest_of(leq, lower);
      if (!j) throw AxiomViolation("binary join exists", {L[a], L[b]});
      if (!m) throw AxiomViolation("binary meet exists", {L[a], L[b]});
      q.join_[a * n + b] = static_cast<std::uint16_t>(*j);
      q.meet_[a * n + b] = static_cast<std::uint16_t>(*m);
    }
  }
  if (has_join) {
    for (std::size_t i = 0; i < n * n; ++i)
      if (spec.join_table[i] != q.join_[i]) throw AxiomViolation("join table is the least upper bound", {L[i / n], L[i % n]});
  }
  q.bottom_ = Element{static_cast<std::uint16_t>(*bottom)};
  q.top_ = Element{static_cast<std::uint16_t>(*top)};
  q.unit_ = Element{static_cast<std::uint16_t>(spec.unit)};

  if (q.bottom_ == q.unit_) throw TrivialQuantale("quantale " + spec.name + " has ⊥ = k");

  if (spec.mult_table.size() != n * n)
    throw AxiomViolation("multiplication table is total", {std::to_string(spec.mult_table.size()) + " entries"});
  q.mult_.assign(n * n, 0);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (spec.mult_table[i] >= n) throw AxiomViolation("multiplication table in range", {L[i / n], L[i % n]});
    q.mult_[i] = static_cast<std::uint16_t>(spec.mult_table[i]);
  }

  const auto els = q.elements();
  const Element bot = q.bottom_;
  const Element k = q.unit_;
  for (Element a : els) {
    if (q.mult(a, k) != a) throw AxiomViolation("k is a unit", {L[a.index]});
    if (q.mult(a, bot) != bot) throw AxiomViolation("a & ⊥ = ⊥ (empty join)", {L[a.index]});
    for (Element b : els) {
      if (q.mult(a, b) != q.mult(b, a)) throw AxiomViolation("& commutative", {L[a.index], L[b.index]});
      for (Element c : els) {
        if (q.mult(q.mult(a, b), c) != q.mult(a, q.mult(b, c)))
          throw AxiomViolation("& associative", {L[a.index], L[b.index], L[c.index]});
        if (q.mult(a, q.join(b, c)) != q.join(q.mult(a, b), q.mult(a, c)))
          throw AxiomViolation("& distributes over joins", {L[a.index], L[b.index], L[c.index]});
      }
    }
  }

  q.residuum_.assign(n * n, 0);
  for (Element a : els) {
    for (Element b : els) {
      Element r = bot;
      for (Element c : els)
        if (q.leq(q.mult(a, c), b)) r = q.join(r, c);
      q.residuum_[q.at(a, b)] = r.index;
    }
  }
  for (Element a : els)
    for (Element b : els)
      for (Element c : els)
        if (q.leq(q.mult(a, b), c) != q.leq(a, q.residuum(b, c)))
          throw AxiomViolation("residuation p & q ≤ r ⇔ p ≤ q → r", {L[a.index], L[b.index], L[c.index]});
  return q;
}

bool is_integral(const Quantale& q) { return q.unit() == q.top(); }

bool is_divisible(const Quantale& q) {
  const auto els = q.elements();
  for (Element target : els) {
    for (Element d : els) {
      if (!q.leq(d, target)) continue;
      bool found = std::any_of(els.begin(), els.end(), [&](Element p) { return q.mult(p, target) == d; });
      if (!found) return false;
    }
  }
  return true;
}

std::optional<std::pair<Element, Element>> lean_violation(const Quantale& q) {
  const Element k = q.unit();
  const Element bot = q.bottom();
  for (Element a : q.elements()) {
    for (Element b : q.elements()) {
      if (q.join(a, b) == k && q.mult(a, b) == bot && a != k && b != k) return std::pair{a, b};
      if ((q.mult(a, b) == k) != (a == k && b == k)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

bool is_lean(const Quantale& q) { return !lean_violation(q).has_value(); }

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int tz = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(tz));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct FamilySearch {
  const Quantale& q;
  std::uint64_t cap;
  std::uint64_t visited = 0;
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<Element> product;
  std::vector<Element> conclusion;
  std::vector<Bitset> compatible_after;  // j > i compatible with i
  std::vector<std::size_t> chosen;

  bool search(const Bitset& candidates, Element hypothesis, Element concl) {
    if (++visited > cap) throw BudgetExceeded("weakly-lean family search exceeded its node cap");
    const Element k = q.unit();
    if (hypothesis == k) return !q.leq(k, concl);
    Element reachable = hypothesis;
    candidates.for_each([&](std::size_t i) { reachable = q.join(reachable, product[i]); });
    if (reachable != k) return false;
    bool found = false;
    candidates.for_each([&](std::size_t i) {
      if (found) return;
      chosen.push_back(i);
      if (search(candidates & compatible_after[i], q.join(hypothesis, product[i]), q.join(concl, conclusion[i])))
        found = true;
      else
        chosen.pop_back();
    });
    return found;
  }
};

}  // namespace

std::optional<std::vector<std::pair<Element, Element>>> weakly_lean_violation(const Quantale& q,
                                                                              std::uint64_t search_cap) {
  const Element k = q.unit();
  const Element bot = q.bottom();
  FamilySearch s{q, search_cap};
  for (Element a : q.elements()) {
    for (Element b : q.elements()) {
      const Element prod = q.mult(a, b);
      if (prod == bot || !q.leq(prod, k)) continue;
      const Element m = q.meet(a, b);
      s.pairs.emplace_back(a, b);
      s.product.push_back(prod);
      s.conclusion.push_back(q.mult(m, m));
    }
  }
  const std::size_t count = s.pairs.size();
  Bitset all(count);
  for (std::size_t i = 0; i < count; ++i) all.set(i);
  s.compatible_after.assign(count, Bitset(count));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const auto [pi, qi] = s.pairs[i];
      const auto [pj, qj] = s.pairs[j];
      if (q.mult(pi, qj) == bot && q.mult(pj, qi) == bot) s.compatible_after[i].set(j);
    }
  }
  if (!s.search(all, bot, bot)) return std::nullopt;
  std::vector<std::pair<Element, Element>> family;
  for (std::size_t i : s.chosen) family.push_back(s.pairs[i]);
  return family;
}

bool is_weakly_lean(const Quantale& q, std::uint64_t search_cap) {
  return !weakly_lean_violation(q, search_cap).has_value();
}

Classification classify(const Quantale& q, std::uint64_t search_cap) {
  return Classification{is_integral(q), is_divisible(q), is_lean(q), is_weakly_lean(q, search_cap)};
}

}  // namespace qmaps
