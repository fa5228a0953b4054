#include <doctest.h>

#include "oracle.hpp"
#include "qmaps/error.hpp"
#include "qmaps/quantale.hpp"
#include "qmaps/zoo.hpp"

using namespace qmaps;

namespace {

QuantaleSpec boolean_spec() {
  QuantaleSpec s;
  s.name = "2";
  s.labels = {"0", "1"};
  s.unit = 1;
  s.order = {{0, 1}};
  s.mult_table = {0, 0, 0, 1};
  return s;
}

QuantaleSpec c3_spec() {
  QuantaleSpec s;
  s.name = "C3";
  s.labels = {"bot", "k", "top"};
  s.unit = 1;
  s.order = {{0, 1}, {1, 2}};
  s.mult_table = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  return s;
}

std::vector<QuantalePtr> finite_zoo() {
  std::vector<QuantalePtr> out;
  for (const auto& name : standard_zoo())
    if (auto q = builtin(name).quantale) out.push_back(q);
  out.push_back(builtin("powerset(4)").quantale);
  return out;
}

}  // namespace

TEST_SUITE("quantale") {
  TEST_CASE("C3 spec builds with derived constants") {
    const Quantale q = Quantale::build(c3_spec());
    CHECK(q.size() == 3);
    CHECK(q.label(q.bottom()) == "bot");
    CHECK(q.label(q.top()) == "top");
    CHECK(q.label(q.unit()) == "k");
    CHECK(q.mult(q.top(), q.top()) == q.top());
    CHECK(q.mult(q.unit(), q.top()) == q.top());
  }

  TEST_CASE("two-element chain with & = ∧ is the Boolean quantale") {
    const Quantale q = Quantale::build(boolean_spec());
    CHECK(is_integral(q));
    CHECK(is_divisible(q));
    CHECK(is_lean(q));
    CHECK(is_weakly_lean(q));
  }

  TEST_CASE("order given as a join table is cross-checked against ≤ pairs") {
    QuantaleSpec s = c3_spec();
    s.join_table = {0, 1, 2, 1, 1, 2, 2, 2, 2};
    CHECK(Quantale::build(s) == Quantale::build(c3_spec()));
    s.order.clear();
    CHECK(Quantale::build(s) == Quantale::build(c3_spec()));
    s.order = {{0, 2}, {2, 1}};
    CHECK_THROWS_AS(Quantale::build(s), AxiomViolation);
  }

  TEST_CASE("M3 distributivity: a & (a ∨ b) = (a & a) ∨ (a & b) = ⊤") {
    const auto q = oracle::zoo("M3");
    const auto a = q->element("a");
    const auto b = q->element("b");
    CHECK(q->join(a, b) == q->top());
    CHECK(q->mult(a, q->join(a, b)) == q->join(q->mult(a, a), q->mult(a, b)));
    CHECK(q->mult(a, q->join(a, b)) == q->top());
    for (auto x : q->elements())
      for (auto y : q->elements())
        for (auto z : q->elements()) CHECK(q->mult(x, q->join(y, z)) == q->join(q->mult(x, y), q->mult(x, z)));
  }

  TEST_CASE("degenerate and unlawful specs are rejected") {
    QuantaleSpec s = boolean_spec();
    SUBCASE("unit = bottom") {
      s.unit = 0;
      s.mult_table = {0, 0, 0, 0};
      CHECK_THROWS_AS(Quantale::build(s), TrivialQuantale);
    }
    SUBCASE("one element") {
      s.labels = {"0"};
      s.order.clear();
      s.unit = 0;
      s.mult_table = {0};
      CHECK_THROWS_AS(Quantale::build(s), TrivialQuantale);
    }
    SUBCASE("empty carrier") {
      s.labels.clear();
      s.order.clear();
      s.unit = 0;
      s.mult_table.clear();
      CHECK_THROWS_AS(Quantale::build(s), TrivialQuantale);
    }
    SUBCASE("not commutative") {
      QuantaleSpec c = c3_spec();
      c.mult_table = {0, 0, 0, 0, 1, 2, 0, 1, 2};
      CHECK_THROWS_AS(Quantale::build(c), AxiomViolation);
    }
    SUBCASE("bottom not absorbing") {
      QuantaleSpec c = c3_spec();
      c.mult_table = {0, 0, 1, 0, 1, 2, 1, 2, 2};
      CHECK_THROWS_AS(Quantale::build(c), AxiomViolation);
    }
    SUBCASE("not distributive over joins") {
      // M3 lattice with a & a = top, a & b = bot, b & b = top breaks a & (a ∨ b)
      QuantaleSpec m;
      m.labels = {"bot", "k", "a", "b", "top"};
      m.unit = 1;
      m.order = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
      m.mult_table.assign(25, 0);
      auto set = [&](std::size_t x, std::size_t y, std::size_t v) { m.mult_table[x * 5 + y] = m.mult_table[y * 5 + x] = v; };
      for (std::size_t x = 0; x < 5; ++x) set(1, x, x);
      set(2, 2, 4);
      set(3, 3, 4);
      set(2, 3, 0);
      set(2, 4, 4);
      set(3, 4, 4);
      set(4, 4, 4);
      CHECK_THROWS_AS(Quantale::build(m), AxiomViolation);
    }
    SUBCASE("not a lattice") {
      QuantaleSpec m;
      m.labels = {"bot", "k", "a", "b"};
      m.unit = 1;
      m.order = {{0, 1}, {0, 2}, {0, 3}};
      m.mult_table.assign(16, 0);
      CHECK_THROWS_AS(Quantale::build(m), AxiomViolation);
    }
    SUBCASE("table with wrong size") {
      s.mult_table = {0, 0, 1};
      CHECK_THROWS_AS(Quantale::build(s), AxiomViolation);
    }
  }

  TEST_CASE("residuum: k → q = q") {
    for (const auto& q : finite_zoo())
      for (auto x : q->elements()) CHECK(q->residuum(q->unit(), x) == x);
  }

  TEST_CASE("residuum in M3: a → b = a") {
    const auto q = oracle::zoo("M3");
    const auto a = q->element("a");
    const auto b = q->element("b");
    CHECK(oracle::residuum(*q, a, b) == a);
    CHECK(q->residuum(a, b) == a);
  }

  TEST_CASE("residuum agrees with the join oracle and the Galois property") {
    for (const auto& q : finite_zoo()) {
      CAPTURE(q->name());
      for (auto p : q->elements())
        for (auto x : q->elements()) {
          CHECK(q->residuum(p, x) == oracle::residuum(*q, p, x));
          CHECK(q->leq(q->mult(p, q->residuum(p, x)), x));
          for (auto r : q->elements()) CHECK(q->leq(q->mult(p, r), x) == q->leq(r, q->residuum(p, x)));
        }
    }
  }

  TEST_CASE("meets are greatest lower bounds") {
    for (const auto& q : finite_zoo())
      for (auto a : q->elements())
        for (auto b : q->elements()) {
          const auto m = q->meet(a, b);
          CHECK(q->leq(m, a));
          CHECK(q->leq(m, b));
          for (auto r : q->elements())
            if (q->leq(r, a) && q->leq(r, b)) CHECK(q->leq(r, m));
        }
  }

  TEST_CASE("classification examples") {
    CHECK_FALSE(is_integral(*oracle::zoo("C3")));
    CHECK(is_integral(*oracle::zoo("F1")));
    CHECK(is_divisible(*oracle::zoo("F2")));
    CHECK_FALSE(is_divisible(*oracle::zoo("C3")));
    CHECK(is_lean(*oracle::zoo("C3")));
    CHECK_FALSE(is_lean(*oracle::zoo("F1")));
    CHECK(is_lean(*oracle::zoo("F2")));
    CHECK_FALSE(is_weakly_lean(*oracle::zoo("M3")));
    CHECK(is_weakly_lean(*oracle::zoo("F1")));
    CHECK(is_weakly_lean(*oracle::zoo("free-Z2")));
    CHECK_FALSE(is_lean(*oracle::zoo("free-Z2")));
  }

  TEST_CASE("C3 is not divisible: k ≤ ⊤ has no p with p & ⊤ = k") {
    const auto q = oracle::zoo("C3");
    for (auto p : q->elements()) CHECK(q->mult(p, q->top()) != q->unit());
  }

  TEST_CASE("lean and weakly lean agree with brute-force oracles") {
    for (const auto& q : finite_zoo()) {
      if (q->size() > 8) continue;
      CAPTURE(q->name());
      CHECK(is_lean(*q) == oracle::lean(*q));
      CHECK(is_weakly_lean(*q) == oracle::weakly_lean(*q));
    }
  }

  TEST_CASE("violation witnesses are genuine") {
    for (const auto& q : finite_zoo()) {
      CAPTURE(q->name());
      if (auto v = lean_violation(*q)) {
        auto [p, r] = *v;
        const bool first = q->join(p, r) == q->unit() && q->mult(p, r) == q->bottom() && p != q->unit() && r != q->unit();
        const bool second = (q->mult(p, r) == q->unit()) != (p == q->unit() && r == q->unit());
        CHECK((first || second));
      }
      if (auto fam = weakly_lean_violation(*q)) {
        Element hyp = q->bottom();
        Element concl = q->bottom();
        for (std::size_t i = 0; i < fam->size(); ++i) {
          auto [p, r] = (*fam)[i];
          hyp = q->join(hyp, q->mult(p, r));
          const auto m = q->meet(p, r);
          concl = q->join(concl, q->mult(m, m));
          for (std::size_t j = 0; j < fam->size(); ++j)
            if (i != j) CHECK(q->mult(p, (*fam)[j].second) == q->bottom());
        }
        CHECK(hyp == q->unit());
        CHECK_FALSE(q->leq(q->unit(), concl));
      }
    }
  }

  TEST_CASE("complementary pairs summing to k are idempotent") {
    for (const auto& q : finite_zoo())
      for (auto p : q->elements())
        for (auto r : q->elements())
          if (q->join(p, r) == q->unit() && q->mult(p, r) == q->bottom()) {
            CHECK(q->mult(p, p) == p);
            CHECK(q->mult(r, r) == r);
          }
  }

  TEST_CASE("implications across the zoo") {
    for (const auto& q : finite_zoo()) {
      CAPTURE(q->name());
      const auto c = classify(*q);
      if (c.lean) CHECK(c.weakly_lean);
      if (c.integral) CHECK(c.weakly_lean);
      if (c.divisible) CHECK(c.integral);
    }
  }

  TEST_CASE("search cap is enforced") {
    CHECK_THROWS_AS(is_weakly_lean(*oracle::zoo("powerset(3)"), 1), BudgetExceeded);
  }

  TEST_CASE("format and parse round trip; unknown labels throw") {
    const auto q = oracle::zoo("F1");
    for (auto e : q->elements()) CHECK(q->parse(q->format(e)) == e);
    CHECK_THROWS_AS(q->element("nope"), UnknownName);
  }
}
