#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "qmaps/enumerate.hpp"
#include "qmaps/error.hpp"
#include "qmaps/qmap.hpp"

using namespace qmaps;
using oracle::make;

namespace {

const FiniteSet kStar{"*"};
const FiniteSet kXY{"x", "y"};

std::vector<FiniteSet> sets_up_to_two() { return {FiniteSet{}, FiniteSet{"a"}, FiniteSet{"a", "b"}}; }

std::vector<CrispMap> all_functions(const FiniteSet& x, const FiniteSet& y) {
  std::vector<CrispMap> out;
  if (y.empty() && !x.empty()) return out;
  std::vector<std::size_t> digits(x.size(), 0);
  while (true) {
    out.emplace_back(x, y, digits);
    std::size_t i = digits.size();
    while (i > 0 && ++digits[i - 1] == y.size()) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace

TEST_SUITE("qmap") {
  TEST_CASE("M3: ζ = (a, ⊥) has ζ* = (b, ⊥) ≠ ζ^op") {
    const auto q = oracle::zoo("M3");
    const auto zeta = make(q, kStar, kXY, {{"a", "bot"}});
    REQUIRE(is_qmap(zeta));
    const auto z = promote(zeta);
    CHECK(z.adjoint() == make(q, kXY, kStar, {{"b"}, {"bot"}}));
    CHECK_FALSE(z.adjoint() == opposite(zeta));
    CHECK_FALSE(is_symmetric(z));
    CHECK(oracle::brute_adjoint(zeta) == z.adjoint());
  }

  TEST_CASE("C3: the all-⊥ relation has candidate ⊤ and is not a map") {
    const auto q = oracle::zoo("C3");
    const auto none = make(q, kStar, kStar, {{"bot"}});
    CHECK(right_adjoint_candidate(none) == make(q, kStar, kStar, {{"top"}}));
    CHECK_FALSE(is_qmap(none));
    CHECK_FALSE(oracle::brute_adjoint(none).has_value());
    CHECK_THROWS_AS(promote(none), NotAMap);
  }

  TEST_CASE("C3: (⊤) is not a map but (k) is") {
    const auto q = oracle::zoo("C3");
    CHECK_FALSE(is_qmap(make(q, kStar, kStar, {{"top"}})));
    CHECK(is_qmap(make(q, kStar, kStar, {{"k"}})));
  }

  TEST_CASE("adjoints agree with exhaustive search") {
    for (const char* name : {"C3", "F1", "M3", "free-Z2"}) {
      const auto q = oracle::zoo(name);
      CAPTURE(name);
      for (const auto& x : sets_up_to_two())
        for (const auto& y : sets_up_to_two()) {
          if (x.size() * y.size() == 4 && q->size() > 4) continue;
          for (const auto& phi : oracle::all_relations(q, x, y)) {
            const auto brute = oracle::brute_adjoint(phi);
            CHECK(is_qmap(phi) == brute.has_value());
            if (brute) CHECK(promote(phi).adjoint() == *brute);
          }
        }
    }
  }

  TEST_CASE("every Q-map satisfies the diagonal property") {
    for (const char* name : {"C3", "F1", "F2", "M3", "M3prime", "free-Z2", "lukasiewicz(2)"})
      for (const auto& x : sets_up_to_two())
        for (const auto& y : sets_up_to_two())
          for (const auto& zeta : enumerate_qmaps(oracle::zoo(name), x, y)) CHECK(satisfies_diagonal_lemma(zeta));
  }

  TEST_CASE("enumeration counts") {
    SUBCASE("C3 1×1: only (k)") {
      const auto maps = enumerate_qmaps(oracle::zoo("C3"), kStar, kStar);
      REQUIRE(maps.size() == 1);
      CHECK(maps[0].relation() == make(oracle::zoo("C3"), kStar, kStar, {{"k"}}));
    }
    SUBCASE("lean quantales have exactly |Y|^|X| maps") {
      for (const char* name : {"C3", "F2", "powerset(1)", "M3prime"})
        for (const auto& x : sets_up_to_two())
          for (const auto& y : sets_up_to_two()) {
            std::size_t expected = 1;
            for (std::size_t i = 0; i < x.size(); ++i) expected *= y.size();
            CHECK(enumerate_qmaps(oracle::zoo(name), x, y).size() == expected);
          }
    }
    SUBCASE("empty source and target") {
      const auto q = oracle::zoo("F1");
      CHECK(enumerate_qmaps(q, FiniteSet{}, kXY).size() == 1);
      CHECK(enumerate_qmaps(q, kXY, FiniteSet{}).empty());
      CHECK(enumerate_qmaps(q, FiniteSet{}, FiniteSet{}).size() == 1);
    }
    SUBCASE("budget") {
      CHECK_THROWS_AS(enumerate_qmaps(oracle::zoo("M3"), kXY, kXY, 624), BudgetExceeded);
      CHECK(candidate_count(*oracle::zoo("M3"), 2, 2) == 625);
    }
  }

  TEST_CASE("weakly lean: maps are symmetric and the order on maps is discrete") {
    for (const char* name : {"F1", "free-Z2", "powerset(2)", "C3"}) {
      const auto q = oracle::zoo(name);
      REQUIRE(is_weakly_lean(*q));
      const auto maps = enumerate_qmaps(q, kXY, kXY);
      for (const auto& zeta : maps) {
        CHECK(is_symmetric(zeta));
        for (const auto& eta : maps)
          if (leq(zeta.relation(), eta.relation())) CHECK(zeta == eta);
      }
    }
  }

  TEST_CASE("symmetrize") {
    SUBCASE("M3: (a, ⊥) ∧ (b, ⊥) is all ⊥ and not a map") {
      const auto q = oracle::zoo("M3");
      const auto z = promote(make(q, kStar, kXY, {{"a", "bot"}}));
      const auto s = symmetrize(z);
      CHECK(s == FiniteRelation(q, kStar, kXY));
      CHECK_FALSE(is_qmap(s));
    }
    SUBCASE("F1: the symmetric η is unchanged") {
      const auto q = oracle::zoo("F1");
      const auto eta = promote(make(q, kXY, kXY, {{"p", "q"}, {"q", "p"}}));
      CHECK(is_symmetric(eta));
      CHECK(symmetrize(eta) == eta.relation());
    }
  }

  TEST_CASE("F1: ζ = (p, q) from a point and η = [[p,q],[q,p]] is surjective") {
    const auto q = oracle::zoo("F1");
    CHECK(is_qmap(make(q, kStar, kXY, {{"p", "q"}})));
    const auto eta = promote(make(q, kXY, kXY, {{"p", "q"}, {"q", "p"}}));
    CHECK(is_surjective(eta));
    CHECK_FALSE(try_as_crisp_map(eta).has_value());
  }

  TEST_CASE("surjectivity of graphs matches surjectivity of functions") {
    const auto q = oracle::zoo("F1");
    const FiniteSet three{"a", "b", "c"};
    for (const auto& f : all_functions(three, kXY)) {
      const bool onto = f.assignment() != std::vector<std::size_t>{0, 0, 0} && f.assignment() != std::vector<std::size_t>{1, 1, 1};
      CHECK(is_surjective(graph(q, f)) == onto);
    }
  }

  TEST_CASE("graphs and crisp maps") {
    const auto q = oracle::zoo("C3");
    for (const auto& x : sets_up_to_two())
      for (const auto& y : sets_up_to_two())
        for (const auto& f : all_functions(x, y)) {
          const auto g = graph(q, f);
          CHECK(as_crisp_map(g) == f);
          CHECK(g.adjoint() == opposite(g.relation()));
        }
    const auto f1 = oracle::zoo("F1");
    CHECK_THROWS_AS(as_crisp_map(promote(make(f1, kStar, kXY, {{"p", "q"}}))), NotGraph);
  }

  TEST_CASE("composition of Q-maps") {
    const auto q = oracle::zoo("F1");
    const auto maps = enumerate_qmaps(q, kXY, kXY);
    for (const auto& zeta : maps)
      for (const auto& eta : maps) {
        const auto composite = compose(eta, zeta);
        CHECK(composite.relation() == compose(eta.relation(), zeta.relation()));
        CHECK(composite.adjoint() == compose(zeta.adjoint(), eta.adjoint()));
      }
    for (const auto& zeta : maps) {
      CHECK(compose(identity_map(q, kXY), zeta) == zeta);
      CHECK(compose(zeta, identity_map(q, kXY)) == zeta);
    }
  }

  TEST_CASE("extend codomain and restrict domain") {
    const auto q = oracle::zoo("C3");
    const FiniteSet uv{"u", "v"};
    const auto zeta = promote(make(q, kStar, {"u"}, {{"k"}}));
    const auto wide = extend_codomain(zeta, uv);
    CHECK(wide.relation() == make(q, kStar, uv, {{"k", "bot"}}));
    std::size_t agreeing = 0;
    for (const auto& m : enumerate_qmaps(q, kStar, uv))
      if (m.relation()(0, 0) == zeta.relation()(0, 0)) ++agreeing;
    CHECK(agreeing == 1);
    CHECK_THROWS_AS(extend_codomain(zeta, kXY), NotASubset);

    const auto f1 = oracle::zoo("F1");
    const auto eta = promote(make(f1, kXY, kXY, {{"p", "q"}, {"q", "p"}}));
    const auto part = restrict_domain(eta, FiniteSet{"y"});
    CHECK(part.relation() == make(f1, {"y"}, kXY, {{"q", "p"}}));
    CHECK(restrict_domain(eta, FiniteSet{}).relation().entries().empty());
  }

  TEST_CASE("M3 harness witness at 1×2 is (⊥, a), the example up to renaming") {
    const auto q = oracle::zoo("M3");
    const auto report = check_symmetric_iff_weakly_lean(q);
    CHECK(report.agreement() == Agreement::Agree);
    bool found = false;
    for (const auto& profile : report.profiles)
      if (profile.source_size == 1 && profile.target_size == 2) {
        found = true;
        REQUIRE(profile.witness.has_value());
        const std::vector<Element> expected{q->bottom(), q->element("a")};
        CHECK(std::ranges::equal(profile.witness->entries(), expected));
      }
    CHECK(found);
  }

  TEST_CASE("harness agrees with the predicates across the finite zoo") {
    for (const auto& name : standard_zoo()) {
      const auto entry = builtin(name);
      if (!entry.quantale || entry.quantale->size() > 5) continue;
      CAPTURE(name);
      const auto sym = check_symmetric_iff_weakly_lean(entry.quantale);
      const auto graphs = check_graphs_iff_lean(entry.quantale);
      CHECK(sym.agreement() == Agreement::Agree);
      CHECK(graphs.agreement() == Agreement::Agree);
      CHECK(sym.diagonal_lemma_failures() == 0);
      CHECK(sym.property_holds() == is_weakly_lean(*entry.quantale));
      CHECK(graphs.property_holds() == is_lean(*entry.quantale));
    }
  }

  TEST_CASE("harness counts agree with a naive census") {
    const auto q = oracle::zoo("F1");
    const auto report = check_graphs_iff_lean(q);
    for (const auto& profile : report.profiles) {
      std::vector<std::string> xs, ys;
      for (std::size_t i = 0; i < profile.source_size; ++i) xs.push_back("x" + std::to_string(i));
      for (std::size_t i = 0; i < profile.target_size; ++i) ys.push_back("y" + std::to_string(i));
      std::uint64_t maps = 0, graphs = 0;
      for (const auto& phi : oracle::all_relations(q, FiniteSet(xs), FiniteSet(ys))) {
        const auto brute = oracle::brute_adjoint(phi);
        if (!brute) continue;
        ++maps;
        bool crisp = true;
        for (auto e : phi.entries()) crisp = crisp && (e == q->bottom() || e == q->unit());
        if (crisp) ++graphs;
      }
      CAPTURE(profile.source_size);
      CAPTURE(profile.target_size);
      CHECK(profile.qmap_count == maps);
      CHECK(profile.graph_count == graphs);
    }
  }
}
