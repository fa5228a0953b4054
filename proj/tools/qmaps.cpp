// qmaps: classify quantales, run Q-relation pipelines, and check the map theorems.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "qmaps/error.hpp"
#include "qmaps/kleisli.hpp"
#include "qmaps/literal.hpp"
#include "qmaps/report.hpp"
#include "qmaps/verify.hpp"
#include "qmaps/zoo.hpp"

using namespace qmaps;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Config {
  std::string quantale;
  std::optional<std::size_t> max_set;
  std::size_t max_quantale = EnumerationBudget{}.max_quantale;
  std::optional<std::uint64_t> budget;
  std::uint64_t search_cap = kDefaultSearchCap;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
};

struct Output {
  std::vector<Record> records;
  bool ok = true;
};

Record header(const Config& cfg, const std::string& command) {
  Record h;
  h["command"] = command;
  if (!cfg.quantale.empty()) h["quantale"] = cfg.quantale;
  h["seed"] = cfg.seed;
  return h;
}

QuantalePtr finite_quantale(const Config& cfg) {
  if (cfg.quantale.empty()) throw Error("--quantale is required");
  auto any = resolve_quantale(cfg.quantale);
  if (auto* q = std::get_if<QuantalePtr>(&any)) return *q;
  throw Error(cfg.quantale + " is a chain quantale; this command needs a finite carrier");
}

// ---- classify

Output classify(const Config& cfg, const std::vector<std::string>& expectations) {
  Output out;
  out.records.push_back(header(cfg, "classify"));
  auto rec = classification_record(*finite_quantale(cfg), cfg.search_cap);
  for (const auto& e : expectations) {
    const auto eq = e.find('=');
    if (eq == std::string::npos) throw Error("--expect takes key=true|false, got '" + e + "'");
    const std::string key = e.substr(0, eq);
    const std::string value = e.substr(eq + 1);
    if (!rec.contains(key) || !rec[key].is_boolean()) throw Error("unknown classification flag '" + key + "'");
    if (value != "true" && value != "false") throw Error("--expect value must be true or false");
    const bool met = rec[key].get<bool>() == (value == "true");
    rec["expect " + key] = met ? "met" : "violated";
    out.ok = out.ok && met;
  }
  out.records.push_back(std::move(rec));
  return out;
}

// ---- check-theorems

Output check_theorems(const Config& cfg) {
  Output out;
  out.records.push_back(header(cfg, "check-theorems"));
  const auto q = finite_quantale(cfg);
  EnumerationBudget budget;
  budget.max_set = cfg.max_set.value_or(budget.max_set);
  budget.max_quantale = cfg.max_quantale;
  budget.max_matrices = cfg.budget.value_or(budget.max_matrices);
  for (const auto& report : {check_symmetric_iff_weakly_lean(q, budget), check_graphs_iff_lean(q, budget)}) {
    for (auto& r : theorem_records(report)) out.records.push_back(std::move(r));
    out.ok = out.ok && report.agreement() != Agreement::Contradiction && report.diagonal_lemma_failures() == 0;
  }
  return out;
}

// ---- run

template <class Q>
const Relation<Q>& as(const AnyRelation& r) {
  if (auto* p = std::get_if<Relation<Q>>(&r)) return *p;
  throw QuantaleMismatch("operands live on different quantale backends");
}

struct RunResult {
  std::optional<AnyRelation> relation;
  std::optional<AnyPartition> partition;
  std::optional<bool> verdict;
};

template <class Q>
RunResult run_op(const std::string& op, const LiteralDocument& doc, const std::vector<std::string>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw Error(op + " takes " + std::to_string(n) + " operand" + (n == 1 ? "" : "s"));
  };
  auto rel = [&](std::size_t i) { return as<Q>(doc.relation(args.at(i))); };
  RunResult r;
  if (op == "compose") {
    need(2);
    r.relation = compose(rel(0), rel(1));
  } else if (op == "left-residual") {
    need(2);
    r.relation = left_residual(rel(0), rel(1));
  } else if (op == "right-residual") {
    need(2);
    r.relation = right_residual(rel(0), rel(1));
  } else if (op == "join") {
    need(2);
    r.relation = join(rel(0), rel(1));
  } else if (op == "meet") {
    need(2);
    r.relation = meet(rel(0), rel(1));
  } else if (op == "leq") {
    need(2);
    r.verdict = leq(rel(0), rel(1));
  } else if (op == "opposite") {
    need(1);
    r.relation = opposite(rel(0));
  } else if (op == "adjoint") {
    need(1);
    r.relation = right_adjoint_candidate(rel(0));
  } else if (op == "is-map") {
    need(1);
    r.verdict = is_qmap(rel(0));
  } else if (op == "is-symmetric") {
    need(1);
    r.verdict = is_symmetric(promote(rel(0)));
  } else if (op == "is-surjective") {
    need(1);
    r.verdict = is_surjective(promote(rel(0)));
  } else if (op == "symmetrize") {
    need(1);
    r.relation = symmetrize(promote(rel(0)));
  } else if (op == "partition") {
    need(1);
    r.partition = partition_from_surjection(promote(rel(0)));
  } else if (op == "surjection") {
    need(1);
    r.relation = surjection_from_partition(std::get<QPartition<Q>>(doc.partition(args[0]))).relation();
  } else if (op == "roundtrip") {
    need(1);
    r.verdict = roundtrip_check(std::get<QPartition<Q>>(doc.partition(args[0])));
  } else {
    throw Error("unknown operation '" + op + "'");
  }
  return r;
}

bool is_chain(const LiteralDocument& doc, const std::string& name) {
  if (doc.partitions.contains(name)) return std::holds_alternative<QPartition<ChainQuantale>>(doc.partitions.at(name));
  return std::holds_alternative<Relation<ChainQuantale>>(doc.relation(name));
}

Output run(const Config& cfg, const std::string& file, const std::string& op, const std::vector<std::string>& args,
           const std::optional<std::string>& expect, bool expect_identity) {
  Output out;
  Record h = header(cfg, "run");
  h["file"] = file;
  h["op"] = op;
  h["operands"] = args;
  out.records.push_back(std::move(h));
  const auto doc = load_literals(file);
  if (args.empty()) throw Error(op + " needs operands");
  const RunResult r = is_chain(doc, args[0]) ? run_op<ChainQuantale>(op, doc, args) : run_op<Quantale>(op, doc, args);
  Record res;
  if (r.verdict) {
    res["result"] = *r.verdict;
    out.ok = *r.verdict;
  }
  if (r.relation) res["result"] = relation_record(*r.relation);
  if (r.partition) res["result"] = partition_record(*r.partition);
  if (expect) {
    bool same = false;
    if (r.relation)
      same = relation_record(*r.relation) == relation_record(doc.relation(*expect)) &&
             r.relation->index() == doc.relation(*expect).index();
    else if (r.partition)
      same = *r.partition == doc.partition(*expect);  // block labels are not compared
    else
      throw Error("--expect needs an operation that yields a relation or a partition");
    res["expect " + *expect] = same ? "met" : "violated";
    out.ok = out.ok && same;
  }
  if (expect_identity) {
    if (!r.relation) throw Error("--expect-identity needs an operation that yields a relation");
    const bool same = std::visit(
        [](const auto& m) { return m.source() == m.target() && m == identity(m.quantale_handle(), m.source()); },
        *r.relation);
    res["expect identity"] = same ? "met" : "violated";
    out.ok = out.ok && same;
  }
  out.records.push_back(std::move(res));
  return out;
}

// ---- kleisli

template <class Q>
PartialQMap<Q> as_partial(const Relation<Q>& r) {
  const auto& labels = r.target().labels();
  if (labels.empty()) throw Error("a partial map needs a pointed target Y₊");
  FiniteSet base(std::vector<std::string>(labels.begin(), labels.end() - 1));
  if (labels.back() != star_label(base)) throw Error("target " + r.target().to_string() + " is not of the form Y₊");
  return PartialQMap<Q>(promote(r), base);
}

template <class Q>
std::pair<AnyRelation, bool> kleisli_pair(const Relation<Q>& eta, const Relation<Q>& zeta) {
  const auto e = as_partial(eta);
  const auto z = as_partial(zeta);
  const auto composite = kleisli_compose(e, z);
  return {AnyRelation(composite.relation()), composite.relation() == kleisli_compose_via_monad(e, z)};
}

Output kleisli_compose_cmd(const Config& cfg, const std::string& file, const std::vector<std::string>& args,
                           const std::optional<std::string>& expect) {
  Output out;
  Record h = header(cfg, "kleisli compose");
  h["file"] = file;
  h["operands"] = args;
  out.records.push_back(std::move(h));
  if (args.size() != 2) throw Error("kleisli compose takes two operands: eta zeta");
  const auto doc = load_literals(file);
  const auto eta = doc.relation(args[0]);
  const auto zeta = doc.relation(args[1]);
  auto [composite, agree] = is_chain(doc, args[0])
                                ? kleisli_pair(as<ChainQuantale>(eta), as<ChainQuantale>(zeta))
                                : kleisli_pair(as<Quantale>(eta), as<Quantale>(zeta));
  Record res;
  res["result"] = relation_record(composite);
  res["agrees with m∘η₊∘ζ"] = agree;
  out.ok = agree;
  if (expect) {
    const bool same = relation_record(composite) == relation_record(doc.relation(*expect));
    res["expect " + *expect] = same ? "met" : "violated";
    out.ok = out.ok && same;
  }
  out.records.push_back(std::move(res));
  return out;
}

Output laws(const Config& cfg, const std::string& command, const std::vector<std::vector<LawCheck>>& groups) {
  Output out;
  Record h = header(cfg, command);
  h["max_set"] = *cfg.max_set;
  h["budget"] = cfg.budget.value_or(kKleisliBudget);
  out.records.push_back(std::move(h));
  for (const auto& group : groups)
    for (const auto& c : group) {
      out.records.push_back(law_record(c));
      out.ok = out.ok && c.passed();
    }
  return out;
}

Output free_iso_single(const Config& cfg, const std::string& file, const std::string& name) {
  Output out;
  Record h = header(cfg, "kleisli free-iso");
  h["file"] = file;
  h["point"] = name;
  out.records.push_back(std::move(h));
  const auto doc = load_literals(file);
  auto emit = [&](const auto& rel) {
    using Q = std::decay_t<decltype(rel.quantale())>;
    const auto iso = free_algebra_iso(TAlgebra<Q>(promote(rel)));
    Record res;
    res["identity"] = rel.target().label(iso.group_identity);
    res["zeta"] = relation_record(AnyRelation(iso.to_free.relation()));
    res["eta"] = relation_record(AnyRelation(iso.from_free.relation()));
    res["equations"] = "verified";
    out.records.push_back(std::move(res));
  };
  const auto rel = doc.relation(name);
  if (is_chain(doc, name)) {
    emit(as<ChainQuantale>(rel));
  } else {
    emit(as<Quantale>(rel));
  }
  return out;
}

// ---- spec, enumerate, partitions

Output spec_cmd(const Config& cfg, bool check, std::string& text) {
  Output out;
  const auto q = finite_quantale(cfg);
  text = write_spec(*q);
  if (check) {
    const bool same = parse_spec(text) == *q;
    Record h = header(cfg, "spec --check");
    h["round_trip"] = same;
    out.records.push_back(std::move(h));
    out.ok = same;
  }
  return out;
}

Output enumerate_cmd(const Config& cfg, std::size_t source, std::size_t target) {
  Output out;
  Record h = header(cfg, "enumerate");
  const auto q = finite_quantale(cfg);
  const auto maps = enumerate_qmaps(q, FiniteSet::numbered(source, "x"), FiniteSet::numbered(target, "y"),
                                    cfg.budget.value_or(EnumerationBudget{}.max_matrices));
  h["profile"] = std::to_string(source) + "x" + std::to_string(target);
  h["qmap_count"] = maps.size();
  out.records.push_back(std::move(h));
  for (const auto& m : maps) {
    Record r = relation_record(AnyRelation(m.relation()));
    r["symmetric"] = is_symmetric(m);
    r["graph"] = try_as_crisp_map(m).has_value();
    out.records.push_back(std::move(r));
  }
  return out;
}

Output partitions_cmd(const Config& cfg, std::size_t samples) {
  Output out;
  Record h = header(cfg, "partitions");
  const auto q = finite_quantale(cfg);
  const std::size_t max_set = cfg.max_set.value_or(3);
  const auto found = sample_partitions(q, max_set, samples, cfg.seed);
  std::size_t failures = 0;
  for (const auto& sigma : found)
    if (!roundtrip_check(sigma)) ++failures;
  h["max_set"] = max_set;
  h["samples"] = found.size();
  h["distinct"] = distinct_count(found);
  h["roundtrip_failures"] = failures;
  out.records.push_back(std::move(h));
  out.ok = failures == 0;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantale-valued relations and maps: classification, pipelines and theorem checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--quantale", cfg.quantale, "builtin name or path to a .quantale spec");
  app.add_option("--max-set", cfg.max_set, "largest set size for exhaustive checks");
  app.add_option("--max-quantale", cfg.max_quantale, "largest quantale the theorem harness accepts")->capture_default_str();
  app.add_option("--budget", cfg.budget, "candidate matrices allowed per profile");
  app.add_option("--search-cap", cfg.search_cap, "node cap for the weakly-lean family search")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--format", cfg.format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}))->capture_default_str();
  app.add_option("--out", cfg.out, "write the report here instead of stdout");

  std::vector<std::string> expectations;
  auto* classify_cmd = app.add_subcommand("classify", "integral, divisible, lean and weakly lean");
  classify_cmd->add_option("--expect", expectations, "flag=true|false, checked against the result");

  auto* theorems_cmd = app.add_subcommand("check-theorems", "exhaustive symmetric/graph harnesses");

  std::string file;
  std::string op;
  std::vector<std::string> operands;
  std::optional<std::string> expect;
  bool expect_identity = false;
  auto* run_cmd = app.add_subcommand("run", "apply an operation to literals from a file");
  run_cmd->add_option("--file", file, "relation/partition literal file")->required();
  run_cmd->add_option("op", op,
                      "compose, left-residual, right-residual, join, meet, leq, opposite, adjoint, is-map, "
                      "is-symmetric, is-surjective, symmetrize, partition, surjection, roundtrip")
      ->required();
  run_cmd->add_option("operands", operands, "literal names; name^op takes the opposite");
  run_cmd->add_option("--expect", expect, "compare the result with this literal");
  run_cmd->add_flag("--expect-identity", expect_identity, "require the result to be an identity");

  auto* kleisli_cmd = app.add_subcommand("kleisli", "partial Q-maps and the maybe monad");
  kleisli_cmd->require_subcommand(1);
  auto* kcompose = kleisli_cmd->add_subcommand("compose", "η⋄ζ for partial maps ζ: X ⇸ Y₊, η: Y ⇸ Z₊");
  kcompose->add_option("--file", file)->required();
  kcompose->add_option("operands", operands, "eta zeta")->required();
  kcompose->add_option("--expect", expect);
  auto* kmonad = kleisli_cmd->add_subcommand("verify-monad", "monad and Kleisli laws, exhaustively");
  auto* kiso = kleisli_cmd->add_subcommand("free-iso", "isomorphism of T-algebras with free ones");
  kiso->add_option("--file", file, "check one point {*} -> X from this file");
  kiso->add_option("point", operands, "name of the point literal");

  bool spec_check = false;
  auto* spec_cmd_ = app.add_subcommand("spec", "print the spec file of a quantale");
  spec_cmd_->add_flag("--check", spec_check, "also parse the output back and compare");

  std::size_t source = 1;
  std::size_t target = 1;
  auto* enum_cmd = app.add_subcommand("enumerate", "list all Q-maps of a profile");
  enum_cmd->add_option("--source", source)->capture_default_str();
  enum_cmd->add_option("--target", target)->capture_default_str();

  std::size_t samples = 100;
  auto* part_cmd = app.add_subcommand("partitions", "round-trip rejection-sampled Q-partitions");
  part_cmd->add_option("--samples", samples)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  const Format format = cfg.format == "jsonl" ? Format::Jsonl : Format::Text;
  Output out;
  std::string raw;
  try {
    if (*classify_cmd) {
      out = classify(cfg, expectations);
    } else if (*theorems_cmd) {
      out = check_theorems(cfg);
    } else if (*run_cmd) {
      out = run(cfg, file, op, operands, expect, expect_identity);
    } else if (*kcompose) {
      out = kleisli_compose_cmd(cfg, file, operands, expect);
    } else if (*kmonad) {
      if (!cfg.max_set) cfg.max_set = 2;
      const auto q = finite_quantale(cfg);
      const auto budget = cfg.budget.value_or(kKleisliBudget);
      out = laws(cfg, "kleisli verify-monad",
                 {verify_monad_laws(q, *cfg.max_set, budget), verify_kleisli_laws(q, *cfg.max_set, budget)});
    } else if (*kiso) {
      if (!file.empty()) {
        if (operands.size() != 1) throw Error("free-iso --file needs exactly one point name");
        out = free_iso_single(cfg, file, operands[0]);
      } else {
        if (!cfg.max_set) cfg.max_set = 3;
        out = laws(cfg, "kleisli free-iso",
                   {verify_free_algebras(finite_quantale(cfg), *cfg.max_set, cfg.budget.value_or(kKleisliBudget))});
      }
    } else if (*spec_cmd_) {
      out = spec_cmd(cfg, spec_check, raw);
    } else if (*enum_cmd) {
      out = enumerate_cmd(cfg, source, target);
    } else if (*part_cmd) {
      out = partitions_cmd(cfg, samples);
    }
  } catch (const Error& e) {
    Record failure;
    failure["error"] = e.what();
    std::cerr << render({failure}, format);
    return kUsage;
  }

  std::string text = raw;
  if (!out.records.empty()) {
    if (!text.empty() && format == Format::Text) text += "\n";
    text += render(out.records, format);
  }
  if (!cfg.out.empty()) {
    std::ofstream file_out(cfg.out);
    if (!file_out) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return kUsage;
    }
    file_out << text;
  } else {
    std::cout << text;
  }
  return out.ok ? kPass : kFail;
}
