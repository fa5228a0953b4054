#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "qmaps/error.hpp"
#include "qmaps/zoo.hpp"

using namespace qmaps;

TEST_SUITE("zoo") {
  TEST_CASE("M3 products from the generator equations") {
    const auto q = builtin("M3").quantale;
    auto e = [&](const char* l) { return q->element(l); };
    CHECK(q->mult(e("a"), e("a")) == e("b"));
    CHECK(q->mult(e("b"), e("b")) == e("a"));
    CHECK(q->mult(e("a"), e("b")) == e("k"));
    CHECK(q->mult(e("a"), e("top")) == e("top"));
    CHECK(q->mult(e("b"), e("top")) == e("top"));
    CHECK(q->mult(e("top"), e("top")) == e("top"));
  }

  TEST_CASE("M3prime products, completed by distributivity") {
    const auto q = builtin("M3prime").quantale;
    auto e = [&](const char* l) { return q->element(l); };
    for (auto [x, y] : {std::pair{"a", "a"}, {"a", "b"}, {"b", "b"}, {"a", "top"}, {"b", "top"}, {"top", "top"}})
      CHECK(q->mult(e(x), e(y)) == e("top"));
    CHECK(builtin("M3'").quantale->operator==(*q));
  }

  TEST_CASE("powerset(1) is the two-element Boolean quantale and lean") {
    const auto q = builtin("powerset(1)").quantale;
    CHECK(q->size() == 2);
    CHECK(q->unit() == q->top());
    CHECK(is_lean(*q));
  }

  TEST_CASE("free-Z2: setwise addition mod 2 with unit {0}") {
    const auto q = builtin("free-Z2").quantale;
    auto e = [&](const char* l) { return q->element(l); };
    CHECK(q->size() == 4);
    CHECK(q->unit() == e("{0}"));
    CHECK(q->mult(e("{1}"), e("{1}")) == e("{0}"));
    CHECK(q->mult(e("{1}"), e("{0,1}")) == e("{0,1}"));
    CHECK(q->mult(e("{0}"), e("{1}")) == e("{1}"));
    CHECK(q->mult(e("{}"), e("{0,1}")) == e("{}"));
  }

  TEST_CASE("finite chains") {
    const auto l = builtin("lukasiewicz(4)").quantale;
    CHECK(l->size() == 5);
    CHECK(l->mult(l->element("3/4"), l->element("2/4")) == l->element("1/4"));
    CHECK(l->mult(l->element("1/4"), l->element("2/4")) == l->element("0/4"));
    const auto g = builtin("godel(3)").quantale;
    CHECK(g->mult(g->element("1/3"), g->element("2/3")) == g->element("1/3"));
    CHECK(is_divisible(*l));
    CHECK(is_divisible(*g));
  }

  TEST_CASE("every finite zoo entry classifies as documented") {
    for (const auto& name : standard_zoo()) {
      const ZooEntry entry = builtin(name);
      if (!entry.quantale) continue;
      CAPTURE(name);
      CHECK(classify(*entry.quantale) == entry.expected);
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      const ZooEntry entry = builtin("powerset(" + std::to_string(n) + ")");
      CHECK(classify(*entry.quantale) == entry.expected);
      CHECK(entry.expected.lean == (n == 1));
    }
  }

  TEST_CASE("documented flags of the chain entries") {
    const ZooEntry law = builtin("lawvere-chain");
    CHECK(law.chain);
    CHECK_FALSE(law.quantale);
    CHECK(law.expected.lean);
    const ZooEntry ext = builtin("extended-chain");
    CHECK_FALSE(ext.expected.weakly_lean);
  }

  TEST_CASE("unknown builtin names") {
    CHECK_THROWS_AS(builtin("C4"), UnknownName);
    CHECK_THROWS_AS(builtin("powerset(5)"), UnknownName);
    CHECK_THROWS_AS(builtin("powerset(0)"), UnknownName);
    CHECK_THROWS_AS(builtin("godel(x)"), UnknownName);
  }

  TEST_CASE("C3 as a spec file equals the builtin") {
    const char* text = R"(# the three-chain
quantale C3
elements bot k top
unit k
leq bot k
leq k top
mult bot bot bot
mult bot k bot
mult bot top bot
mult k k k
mult k top top
mult top top top
)";
    CHECK(parse_spec(text) == *builtin("C3").quantale);
  }

  TEST_CASE("write_spec round trips every finite zoo entry") {
    for (const auto& name : standard_zoo()) {
      const ZooEntry entry = builtin(name);
      if (!entry.quantale) continue;
      CAPTURE(name);
      const Quantale back = parse_spec(write_spec(*entry.quantale));
      CHECK(back == *entry.quantale);
      CHECK(back.name() == entry.quantale->name());
    }
  }

  TEST_CASE("commutative closure fills the symmetric entry") {
    const char* text = R"(quantale two
elements 0 1
unit 1
leq 0 1
mult 0 0 0
mult 1 0 0
mult 1 1 1
)";
    const Quantale q = parse_spec(text);
    CHECK(q.mult(q.element("0"), q.element("1")) == q.element("0"));
  }

  TEST_CASE("unit = bottom is a trivial quantale") {
    const char* text = R"(quantale t
elements 0 1
unit 0
leq 0 1
mult 0 0 0
mult 0 1 0
mult 1 1 0
)";
    CHECK_THROWS_AS(parse_spec(text), TrivialQuantale);
  }

  TEST_CASE("syntax errors carry line numbers") {
    auto line_of = [](const char* text) -> std::size_t {
      try {
        parse_spec(text);
      } catch (const SyntaxError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("quantale x\nelements a b\nunit c\n") == 3);
    CHECK(line_of("quantale x\nelements a b\nunit a\nfrobnicate\n") == 4);
    CHECK(line_of("quantale x\n\nelements a b\nunit a\nleq a\n") == 5);
    CHECK(line_of("quantale x\nelements a b\nunit b\nleq a b\nmult a a a\nmult a b a\nmult b a b\n") == 7);
    CHECK(line_of("unit a\n") == 1);
    CHECK(line_of("quantale x\nelements a a\n") == 2);
    // missing pair is reported at the end of input
    CHECK(line_of("quantale x\nelements a b\nunit b\nleq a b\nmult a a a\nmult b b b\n") == 6);
  }

  TEST_CASE("axiom violations pass through the parser") {
    const char* text = R"(quantale bad
elements bot k top
unit k
leq bot k
leq k top
mult bot bot bot
mult bot k bot
mult bot top k
mult k k k
mult k top top
mult top top top
)";
    CHECK_THROWS_AS(parse_spec(text), AxiomViolation);
  }

  TEST_CASE("resolution: builtins first, then files") {
    const auto dir = std::filesystem::temp_directory_path() / "qmaps-zoo-test";
    std::filesystem::create_directories(dir);
    {
      std::ofstream f(dir / "C3");
      f << "garbage\n";
    }
    {
      std::ofstream f(dir / "c3.quantale");
      f << write_spec(*builtin("C3").quantale);
    }
    // a file named like a builtin does not shadow it
    CHECK(std::holds_alternative<QuantalePtr>(resolve_quantale("C3", dir)));
    CHECK(*std::get<QuantalePtr>(resolve_quantale("c3.quantale", dir)) == *builtin("C3").quantale);
    CHECK(std::holds_alternative<ChainPtr>(resolve_quantale("lawvere-chain")));
    CHECK_THROWS_AS(resolve_quantale("missing.quantale", dir), UnknownName);
    std::filesystem::remove_all(dir);
  }
}
