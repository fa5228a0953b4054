#include "qmaps/literal.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "qmaps/error.hpp"
#include "qmaps/kleisli.hpp"

namespace qmaps {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

template <class Q>
std::vector<typename Q::value_type> parse_row(const Q& q, const std::vector<std::string>& row, std::size_t line) {
  std::vector<typename Q::value_type> out;
  out.reserve(row.size());
  for (const auto& t : row) {
    try {
      out.push_back(q.parse(t));
    } catch (const Error& e) {
      throw SyntaxError(line, e.what());
    }
  }
  return out;
}

struct Header {
  enum class Kind { Relation, Partition } kind;
  std::string name;
  FiniteSet source;
  FiniteSet target;
  std::string quantale;
};

Header parse_header(const std::string& line, std::size_t line_no) {
  static const std::regex rel(R"(^rel\s+(\S+)\s*:\s*(\{[^}]*\}\+*)\s*->\s*(\{[^}]*\}\+*)\s*over\s+(\S+)$)");
  static const std::regex part(R"(^partition\s+(\S+)\s*:\s*(\{[^}]*\}\+*)\s*over\s+(\S+)$)");
  std::smatch m;
  try {
    if (std::regex_match(line, m, rel))
      return {Header::Kind::Relation, m[1], parse_set_literal(m[2].str()), parse_set_literal(m[3].str()), m[4]};
    if (std::regex_match(line, m, part))
      return {Header::Kind::Partition, m[1], parse_set_literal(m[2].str()), {}, m[3]};
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& e) {
    throw SyntaxError(line_no, e.what());
  }
  throw SyntaxError(line_no, "expected 'rel <name> : {X} -> {Y} over <quantale>' or 'partition <name> : {X} over <quantale>'");
}

template <class T>
T visit_quantale(const AnyQuantale& q, auto&& f) {
  return std::visit([&](const auto& ptr) -> T { return f(ptr); }, q);
}

}  // namespace

FiniteSet parse_set_literal(std::string_view text) {
  std::string s = trim(text);
  std::size_t pluses = 0;
  while (!s.empty() && s.back() == '+') {
    s.pop_back();
    ++pluses;
  }
  s = trim(s);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw Error("malformed set literal '" + std::string(text) + "'");
  const std::string body = trim(std::string_view(s).substr(1, s.size() - 2));
  std::vector<std::string> labels;
  if (!body.empty()) {
    std::istringstream in(body);
    for (std::string item; std::getline(in, item, ',');) {
      std::string label = trim(item);
      if (label.empty() || label.find_first_of("{} \t") != std::string::npos)
        throw Error("bad element '" + label + "' in set literal");
      labels.push_back(std::move(label));
    }
  }
  FiniteSet set(std::move(labels));
  for (std::size_t i = 0; i < pluses; ++i) set = plus(set);
  return set;
}

std::string set_literal(const FiniteSet& set) {
  std::vector<std::string> labels = set.labels();
  std::size_t pluses = 0;
  while (!labels.empty()) {
    std::vector<std::string> rest(labels.begin(), labels.end() - 1);
    if (labels.back() != star_label(FiniteSet(rest))) break;
    labels = std::move(rest);
    ++pluses;
  }
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}" + std::string(pluses, '+');
}

LiteralDocument parse_literals(std::string_view text, const std::filesystem::path& base_dir) {
  LiteralDocument doc;
  std::map<std::string, AnyQuantale> quantales;
  std::vector<std::pair<std::size_t, std::string>> lines;  // significant lines with numbers
  {
    std::istringstream in{std::string(text)};
    std::size_t no = 0;
    for (std::string raw; std::getline(in, raw);) {
      ++no;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::string t = trim(raw);
      if (!t.empty()) lines.emplace_back(no, std::move(t));
    }
  }
  std::size_t i = 0;
  auto next_row = [&](std::size_t expected, const std::string& what, std::size_t header_line) {
    if (i >= lines.size())
      throw SyntaxError(header_line, "literal ends early: missing " + what);
    auto row = tokens(lines[i].second);
    if (row.size() != expected)
      throw SyntaxError(lines[i].first, what + " needs " + std::to_string(expected) + " entries, found " +
                                            std::to_string(row.size()));
    return std::pair{lines[i++].first, row};
  };

  while (i < lines.size()) {
    const auto [line_no, line] = lines[i++];
    const Header h = parse_header(line, line_no);
    if (doc.quantale_names.contains(h.name)) throw SyntaxError(line_no, "duplicate literal name '" + h.name + "'");
    auto qit = quantales.find(h.quantale);
    if (qit == quantales.end()) {
      try {
        qit = quantales.emplace(h.quantale, resolve_quantale(h.quantale, base_dir)).first;
      } catch (const SyntaxError& e) {
        throw SyntaxError(line_no, "in quantale '" + h.quantale + "': " + e.what());
      } catch (const Error& e) {
        throw SyntaxError(line_no, e.what());
      }
    }
    doc.quantale_names[h.name] = h.quantale;

    if (h.kind == Header::Kind::Relation) {
      const std::size_t nx = h.source.size();
      const std::size_t ny = h.target.size();
      AnyRelation rel = visit_quantale<AnyRelation>(qit->second, [&](const auto& q) -> AnyRelation {
        using Q = std::decay_t<decltype(*q)>;
        std::vector<typename Q::value_type> entries(nx * ny, q->bottom());
        if (nx > 0)
          for (std::size_t y = 0; y < ny; ++y) {
            auto [row_line, row] = next_row(nx, "row " + h.target.label(y), line_no);
            auto values = parse_row(*q, row, row_line);
            for (std::size_t x = 0; x < nx; ++x) entries[x * ny + y] = values[x];
          }
        return Relation<Q>(q, h.source, h.target, std::move(entries));
      });
      doc.relations.emplace(h.name, std::move(rel));
    } else {
      const std::size_t nx = h.source.size();
      if (i >= lines.size()) throw SyntaxError(line_no, "partition needs a 'blocks' line");
      auto blocks_line = tokens(lines[i].second);
      const std::size_t blocks_no = lines[i].first;
      if (blocks_line.empty() || blocks_line[0] != "blocks") throw SyntaxError(blocks_no, "expected 'blocks <labels>'");
      ++i;
      FiniteSet block_labels;
      try {
        block_labels = FiniteSet(std::vector<std::string>(blocks_line.begin() + 1, blocks_line.end()));
      } catch (const Error& e) {
        throw SyntaxError(blocks_no, e.what());
      }
      const std::size_t nb = block_labels.size();
      AnyPartition part = visit_quantale<AnyPartition>(qit->second, [&](const auto& q) -> AnyPartition {
        using Q = std::decay_t<decltype(*q)>;
        std::vector<typename QPartition<Q>::Block> blocks(nb, typename QPartition<Q>::Block(nx, q->bottom()));
        if (nb > 0)
          for (std::size_t x = 0; x < nx; ++x) {
            auto [row_line, row] = next_row(nb, "row " + h.source.label(x), line_no);
            auto values = parse_row(*q, row, row_line);
            for (std::size_t s = 0; s < nb; ++s) blocks[s][x] = values[s];
          }
        try {
          return QPartition<Q>(q, h.source, block_labels, std::move(blocks));
        } catch (const InvalidPartition& e) {
          throw SyntaxError(line_no, e.what());
        }
      });
      doc.partitions.emplace(h.name, std::move(part));
    }
  }
  return doc;
}

LiteralDocument load_literals(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw UnknownName("cannot read literal file " + path.string());
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_literals(buffer.str(), path.parent_path());
}

AnyRelation LiteralDocument::relation(const std::string& name) const {
  static constexpr std::string_view kOp = "^op";
  const bool op = name.size() > kOp.size() && name.ends_with(kOp);
  const std::string base = op ? name.substr(0, name.size() - kOp.size()) : name;
  auto it = relations.find(base);
  if (it == relations.end()) throw UnknownName("no relation named '" + base + "'");
  if (!op) return it->second;
  return std::visit([](const auto& r) -> AnyRelation { return opposite(r); }, it->second);
}

const AnyPartition& LiteralDocument::partition(const std::string& name) const {
  auto it = partitions.find(name);
  if (it == partitions.end()) throw UnknownName("no partition named '" + name + "'");
  return it->second;
}

namespace {

std::string aligned_rows(const std::vector<std::vector<std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows)
    for (const auto& c : r) width = std::max(width, c.size());
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += ' ';
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width - r[i].size(), ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace

std::string format_relation(const std::string& name, const AnyRelation& relation, const std::string& quantale) {
  return std::visit(
      [&](const auto& r) {
        std::string out = "rel " + name + " : " + set_literal(r.source()) + " -> " + set_literal(r.target()) +
                          " over " + quantale + "\n";
        if (r.source().empty()) return out;
        std::vector<std::vector<std::string>> rows;
        for (std::size_t y = 0; y < r.target().size(); ++y) {
          std::vector<std::string> row;
          for (std::size_t x = 0; x < r.source().size(); ++x) row.push_back(r.quantale().format(r(x, y)));
          rows.push_back(std::move(row));
        }
        return out + aligned_rows(rows);
      },
      relation);
}

std::string format_partition(const std::string& name, const AnyPartition& partition, const std::string& quantale) {
  return std::visit(
      [&](const auto& p) {
        std::string out = "partition " + name + " : " + set_literal(p.underlying()) + " over " + quantale + "\nblocks";
        for (const auto& l : p.block_labels().labels()) out += " " + l;
        out += "\n";
        if (p.block_count() == 0) return out;
        std::vector<std::vector<std::string>> rows;
        for (std::size_t x = 0; x < p.underlying().size(); ++x) {
          std::vector<std::string> row;
          for (std::size_t s = 0; s < p.block_count(); ++s) row.push_back(p.quantale().format(p.membership(s, x)));
          rows.push_back(std::move(row));
        }
        return out + aligned_rows(rows);
      },
      partition);
}

}  // namespace qmaps
