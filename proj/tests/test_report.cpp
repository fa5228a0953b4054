#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "qmaps/report.hpp"

using namespace qmaps;

TEST_SUITE("report") {
  TEST_CASE("relation records list rows by target") {
    const auto q = oracle::zoo("F1");
    const auto zeta = oracle::make(q, {"*"}, {"x", "y"}, {{"p", "q"}});
    const auto r = relation_record(AnyRelation(zeta));
    CHECK(r.dump() == R"({"source":["*"],"target":["x","y"],"matrix_yx":[["p"],["q"]]})");
  }

  TEST_CASE("classification records carry witnesses only when violated") {
    const auto f1 = classification_record(*oracle::zoo("F1"));
    CHECK(f1["lean"] == false);
    CHECK(f1["weakly_lean"] == true);
    CHECK(f1.contains("lean_witness"));
    CHECK_FALSE(f1.contains("weakly_lean_witness"));
    const auto c3 = classification_record(*oracle::zoo("C3"));
    CHECK_FALSE(c3.contains("lean_witness"));
    CHECK(c3["integral"] == false);
  }

  TEST_CASE("theorem records: one per profile plus a summary") {
    const auto report = check_symmetric_iff_weakly_lean(oracle::zoo("M3"));
    const auto records = theorem_records(report);
    CHECK(records.size() == report.profiles.size() + 1);
    CHECK(records.back()["agreement"] == "agree");
    CHECK(records.back()["diagonal_lemma_failures"] == 0);
  }

  TEST_CASE("rendering is deterministic") {
    std::vector<Record> records;
    records.push_back(classification_record(*oracle::zoo("M3")));
    Record nested;
    nested["law"] = "unit";
    nested["inner"] = Record{{"a", 1}};
    records.push_back(nested);
    const auto jsonl = render(records, Format::Jsonl);
    CHECK(jsonl == render(records, Format::Jsonl));
    CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 2);
    const auto text = render(records, Format::Text);
    CHECK(text.find("weakly_lean: false") != std::string::npos);
    CHECK(text.find("\n\n") != std::string::npos);
  }

  TEST_CASE("law records") {
    LawCheck c{"left unit", 12, 0, ""};
    const auto r = law_record(c);
    CHECK(r["law"] == "left unit");
    CHECK(r["instances"] == 12);
    CHECK(r["failures"] == 0);
  }
}
