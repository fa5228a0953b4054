#include "qmaps/report.hpp"

namespace qmaps {

namespace {

template <class Q>
Record matrix(const Relation<Q>& r) {
  Record rows = Record::array();
  for (std::size_t y = 0; y < r.target().size(); ++y) {
    Record row = Record::array();
    for (std::size_t x = 0; x < r.source().size(); ++x) row.push_back(r.quantale().format(r(x, y)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Record pairs(const Quantale& q, const std::vector<std::pair<Element, Element>>& family) {
  Record out = Record::array();
  for (auto [a, b] : family) out.push_back(Record::array({q.label(a), q.label(b)}));
  return out;
}

bool scalar_array(const Record& value) {
  if (!value.is_array()) return false;
  for (const auto& v : value)
    if (v.is_structured() && !scalar_array(v)) return false;
  return true;
}

std::string inline_value(const Record& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out = "[";
    bool first = true;
    for (const auto& v : value) {
      if (!first) out += ", ";
      out += inline_value(v);
      first = false;
    }
    return out + "]";
  }
  return value.dump();
}

void render_text(const Record& object, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : object.items()) {
    if (value.is_object()) {
      out += pad + key + ":\n";
      render_text(value, indent + 2, out);
    } else if (value.is_array() && !scalar_array(value)) {
      out += pad + key + ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          out += pad + "  -\n";
          render_text(item, indent + 4, out);
        } else {
          out += pad + "  - " + inline_value(item) + "\n";
        }
      }
    } else {
      out += pad + key + ": " + inline_value(value) + "\n";
    }
  }
}

}  // namespace

Record relation_record(const AnyRelation& relation) {
  return std::visit(
      [](const auto& r) {
        Record out;
        out["source"] = r.source().labels();
        out["target"] = r.target().labels();
        out["matrix_yx"] = matrix(r);
        return out;
      },
      relation);
}

Record partition_record(const AnyPartition& partition) {
  return std::visit(
      [](const auto& p) {
        Record out;
        out["underlying"] = p.underlying().labels();
        out["blocks"] = p.block_labels().labels();
        Record rows = Record::array();
        for (std::size_t x = 0; x < p.underlying().size(); ++x) {
          Record row = Record::array();
          for (std::size_t s = 0; s < p.block_count(); ++s) row.push_back(p.quantale().format(p.membership(s, x)));
          rows.push_back(std::move(row));
        }
        out["membership_xs"] = std::move(rows);
        return out;
      },
      partition);
}

Record classification_record(const Quantale& q, std::uint64_t search_cap) {
  Record out;
  out["quantale"] = q.name();
  out["size"] = q.size();
  out["integral"] = is_integral(q);
  out["divisible"] = is_divisible(q);
  const auto lean = lean_violation(q);
  const auto weak = weakly_lean_violation(q, search_cap);
  out["lean"] = !lean.has_value();
  out["weakly_lean"] = !weak.has_value();
  if (lean) out["lean_witness"] = pairs(q, {*lean});
  if (weak) out["weakly_lean_witness"] = pairs(q, *weak);
  return out;
}

std::vector<Record> theorem_records(const TheoremReport& report) {
  std::vector<Record> out;
  const bool symmetric = report.theorem == Theorem::SymmetricIffWeaklyLean;
  for (const auto& p : report.profiles) {
    Record r;
    r["quantale"] = report.quantale;
    r["theorem"] = to_string(report.theorem);
    r["profile"] = std::to_string(p.source_size) + "x" + std::to_string(p.target_size);
    r["total_relations"] = p.total_relations;
    r["qmap_count"] = p.qmap_count;
    r["symmetric_count"] = p.symmetric_count;
    r["graph_count"] = p.graph_count;
    r["diagonal_lemma_failures"] = p.diagonal_lemma_failures;
    if (p.witness) r["witness"] = relation_record(AnyRelation(*p.witness));
    out.push_back(std::move(r));
  }
  Record summary;
  summary["quantale"] = report.quantale;
  summary["theorem"] = to_string(report.theorem);
  summary["predicate"] = symmetric ? "weakly_lean" : "lean";
  summary["predicate_value"] = report.predicate;
  summary["max_set"] = report.budget.max_set;
  summary["max_quantale"] = report.budget.max_quantale;
  summary["budget"] = report.budget.max_matrices;
  summary["verdict"] = report.property_holds() ? (symmetric ? "all qmaps symmetric" : "all qmaps graphs")
                                               : (symmetric ? "asymmetric witness" : "non-graph witness");
  summary["agreement"] = to_string(report.agreement());
  summary["diagonal_lemma_failures"] = report.diagonal_lemma_failures();
  if (auto w = report.first_witness()) summary["witness"] = relation_record(AnyRelation(*w));
  out.push_back(std::move(summary));
  return out;
}

Record law_record(const LawCheck& check) {
  Record out;
  out["law"] = check.law;
  out["instances"] = check.instances;
  out["failures"] = check.failures;
  out["status"] = check.passed() ? "pass" : "fail";
  if (!check.passed()) out["first_failure"] = check.first_failure;
  return out;
}

std::string render(const std::vector<Record>& records, Format format) {
  std::string out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (format == Format::Jsonl) {
      out += records[i].dump() + "\n";
    } else {
      if (i) out += "\n";
      render_text(records[i], 0, out);
    }
  }
  return out;
}

}  // namespace qmaps
