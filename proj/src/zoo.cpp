#include "qmaps/zoo.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "qmaps/error.hpp"

namespace qmaps {

namespace {

// Distributive completion over a set of join-irreducible generators: each
// element is the join of the generators below it, and products of joins are
// joins of generator products.
std::vector<std::size_t> complete_by_distributivity(const std::vector<std::uint32_t>& below,
                                                    const std::vector<std::vector<std::size_t>>& generator_mult) {
  const std::size_t n = below.size();
  auto index_of_mask = [&](std::uint32_t mask) {
    for (std::size_t i = 0; i < n; ++i)
      if (below[i] == mask) return i;
    throw Error("generator join outside the carrier");
  };
  std::vector<std::size_t> table(n * n);
  const std::size_t g = generator_mult.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
          if ((below[x] >> i & 1U) && (below[y] >> j & 1U)) mask |= below[generator_mult[i][j]];
      table[x * n + y] = index_of_mask(mask);
    }
  return table;
}

Quantale diamond(const std::string& name, bool primed) {
  // carrier bot k a b top; generators k a b
  enum : std::size_t { bot, k, a, b, top };
  QuantaleSpec spec;
  spec.name = name;
  spec.labels = {"bot", "k", "a", "b", "top"};
  spec.unit = k;
  spec.order = {{bot, k}, {bot, a}, {bot, b}, {k, top}, {a, top}, {b, top}};
  const std::vector<std::uint32_t> below = {0b000, 0b001, 0b010, 0b100, 0b111};
  std::vector<std::vector<std::size_t>> gen;
  if (!primed) {
    gen = {{k, a, b}, {a, b, k}, {b, k, a}};
  } else {
    gen = {{k, a, b}, {a, top, top}, {b, top, top}};
  }
  spec.mult_table = complete_by_distributivity(below, gen);
  Quantale q = Quantale::build(spec);
  auto e = [&](std::string_view l) { return q.element(l); };
  auto expect = [&](std::string_view x, std::string_view y, std::string_view z) {
    if (q.mult(e(x), e(y)) != e(z))
      throw AxiomViolation("generator equation", {std::string(x), std::string(y), std::string(z)});
  };
  if (!primed) {
    expect("a", "a", "b");
    expect("b", "b", "a");
    expect("a", "b", "k");
    expect("a", "top", "top");
    expect("b", "top", "top");
  } else {
    for (auto [x, y] : {std::pair{"a", "a"}, {"a", "b"}, {"b", "b"}, {"a", "top"}, {"b", "top"}}) expect(x, y, "top");
  }
  return q;
}

Quantale chain3() {
  QuantaleSpec spec;
  spec.name = "C3";
  spec.labels = {"bot", "k", "top"};
  spec.unit = 1;
  spec.order = {{0, 1}, {1, 2}};
  spec.mult_table = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  return Quantale::build(spec);
}

Quantale frame(const std::string& name, std::vector<std::string> labels,
               std::vector<std::pair<std::size_t, std::size_t>> order) {
  QuantaleSpec spec;
  spec.name = name;
  const std::size_t n = labels.size();
  spec.labels = std::move(labels);
  spec.order = std::move(order);
  spec.unit = n - 1;
  // & = ∧, the greatest common lower bound
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : spec.order) leq[a][b] = true;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][m] && leq[m][j]) leq[i][j] = true;
  spec.mult_table.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::optional<std::size_t> best;
      for (std::size_t r = 0; r < n; ++r)
        if (leq[r][i] && leq[r][j] && (!best || leq[*best][r])) best = r;
      spec.mult_table[i * n + j] = best.value_or(0);
    }
  return Quantale::build(spec);
}

std::string subset_label(std::uint32_t mask, const std::vector<std::string>& letters) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (mask >> i & 1U) {
      if (!first) out += ',';
      out += letters[i];
      first = false;
    }
  return out + "}";
}

Quantale powerset(std::size_t n) {
  const std::vector<std::string> letters = {"a", "b", "c", "d"};
  const std::vector<std::string> used(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(n));
  const std::size_t size = std::size_t{1} << n;
  QuantaleSpec spec;
  spec.name = "powerset(" + std::to_string(n) + ")";
  for (std::uint32_t m = 0; m < size; ++m) spec.labels.push_back(subset_label(m, used));
  spec.unit = size - 1;
  spec.join_table.resize(size * size);
  spec.mult_table.resize(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      spec.join_table[i * size + j] = i | j;
      spec.mult_table[i * size + j] = i & j;
    }
  return Quantale::build(spec);
}

Quantale free_z2() {
  // subsets of {0,1} as bitmasks; A & B = {a + b mod 2}
  QuantaleSpec spec;
  spec.name = "free-Z2";
  spec.labels = {"{}", "{0}", "{1}", "{0,1}"};
  spec.unit = 1;
  spec.join_table.resize(16);
  spec.mult_table.resize(16);
  for (std::uint32_t x = 0; x < 4; ++x)
    for (std::uint32_t y = 0; y < 4; ++y) {
      std::uint32_t prod = 0;
      for (std::uint32_t a = 0; a < 2; ++a)
        for (std::uint32_t b = 0; b < 2; ++b)
          if ((x >> a & 1U) && (y >> b & 1U)) prod |= 1U << ((a + b) % 2);
      spec.join_table[x * 4 + y] = x | y;
      spec.mult_table[x * 4 + y] = prod;
    }
  return Quantale::build(spec);
}

Quantale finite_chain(const std::string& name, std::size_t n, bool lukasiewicz) {
  QuantaleSpec spec;
  spec.name = name;
  for (std::size_t i = 0; i <= n; ++i) spec.labels.push_back(std::to_string(i) + "/" + std::to_string(n));
  spec.unit = n;
  for (std::size_t i = 0; i < n; ++i) spec.order.emplace_back(i, i + 1);
  const std::size_t size = n + 1;
  spec.mult_table.resize(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      spec.mult_table[i * size + j] = lukasiewicz ? (i + j > n ? i + j - n : 0) : std::min(i, j);
  return Quantale::build(spec);
}

std::optional<std::size_t> parenthesized(std::string_view name, std::string_view head) {
  if (name.size() < head.size() + 3 || name.substr(0, head.size()) != head || name[head.size()] != '(' ||
      name.back() != ')')
    return std::nullopt;
  const std::string_view digits = name.substr(head.size() + 1, name.size() - head.size() - 2);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

ZooEntry finite(std::string name, Quantale q, Classification expected) {
  return ZooEntry{std::move(name), std::make_shared<const Quantale>(std::move(q)), nullptr, expected};
}

constexpr Classification kFrameLean{true, true, true, true};

}  // namespace

ZooEntry builtin(std::string_view name) {
  const std::string key(name);
  if (key == "C3") return finite(key, chain3(), {false, false, true, true});
  if (key == "F1") return finite(key, frame("F1", {"bot", "p", "q", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
                                 {true, true, false, true});
  if (key == "F2")
    return finite(key, frame("F2", {"bot", "p", "q", "r", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}),
                  kFrameLean);
  if (key == "M3") return finite(key, diamond("M3", false), {false, false, false, false});
  if (key == "M3prime" || key == "M3'") return finite("M3prime", diamond("M3prime", true), {false, false, true, true});
  if (key == "free-Z2") return finite(key, free_z2(), {false, false, false, true});
  if (key == "lawvere-chain")
    return ZooEntry{key, nullptr, std::make_shared<const ChainQuantale>(ChainQuantale::lawvere()), kFrameLean};
  if (key == "extended-chain")
    return ZooEntry{key, nullptr, std::make_shared<const ChainQuantale>(ChainQuantale::extended()),
                    {false, false, false, false}};
  if (auto n = parenthesized(name, "powerset"); n && *n >= 1 && *n <= 4)
    return finite(key, powerset(*n), {true, true, *n == 1, true});
  if (auto n = parenthesized(name, "lukasiewicz"); n && *n >= 1 && *n <= 64)
    return finite(key, finite_chain(key, *n, true), kFrameLean);
  if (auto n = parenthesized(name, "godel"); n && *n >= 1 && *n <= 64)
    return finite(key, finite_chain(key, *n, false), kFrameLean);
  throw UnknownName("unknown builtin quantale: " + key);
}

std::vector<std::string> standard_zoo() {
  return {"C3",           "F1",           "F2",           "M3",           "M3prime",
          "powerset(1)",  "powerset(2)",  "powerset(3)",  "free-Z2",      "lukasiewicz(1)",
          "lukasiewicz(2)", "lukasiewicz(3)", "lukasiewicz(4)", "godel(2)", "godel(3)",
          "godel(4)",     "lawvere-chain", "extended-chain"};
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

}  // namespace

Quantale parse_spec(std::string_view text) {
  QuantaleSpec spec;
  std::optional<std::string> name;
  std::optional<std::size_t> unit;
  std::size_t elements_line = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> mult;  // -> (value, line)
  std::size_t line_no = 0;

  auto element = [&](const std::string& label) -> std::size_t {
    auto it = std::find(spec.labels.begin(), spec.labels.end(), label);
    if (it == spec.labels.end()) throw SyntaxError(line_no, "unknown element '" + label + "'");
    return static_cast<std::size_t>(it - spec.labels.begin());
  };
  auto arity = [&](const std::vector<std::string>& t, std::size_t n) {
    if (t.size() != n + 1)
      throw SyntaxError(line_no, "'" + t[0] + "' takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    if (t[0] != "quantale" && t[0] != "elements" && elements_line == 0)
      throw SyntaxError(line_no, "'" + t[0] + "' before 'elements'");
  };

  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto t = tokenize(raw);
    if (t.empty()) continue;
    const std::string& kw = t[0];
    if (kw == "quantale") {
      arity(t, 1);
      if (name) throw SyntaxError(line_no, "duplicate 'quantale'");
      name = t[1];
    } else if (kw == "elements") {
      if (elements_line != 0) throw SyntaxError(line_no, "duplicate 'elements'");
      if (t.size() < 2) throw SyntaxError(line_no, "'elements' needs at least one label");
      elements_line = line_no;
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (std::find(spec.labels.begin(), spec.labels.end(), t[i]) != spec.labels.end())
          throw SyntaxError(line_no, "duplicate element '" + t[i] + "'");
        spec.labels.push_back(t[i]);
      }
    } else if (kw == "unit") {
      arity(t, 1);
      if (unit) throw SyntaxError(line_no, "duplicate 'unit'");
      unit = element(t[1]);
    } else if (kw == "leq") {
      arity(t, 2);
      spec.order.emplace_back(element(t[1]), element(t[2]));
    } else if (kw == "mult") {
      arity(t, 3);
      std::size_t a = element(t[1]);
      std::size_t b = element(t[2]);
      const std::size_t c = element(t[3]);
      if (b < a) std::swap(a, b);
      auto [it, fresh] = mult.try_emplace({a, b}, c, line_no);
      if (!fresh && it->second.first != c)
        throw SyntaxError(line_no, "conflicting mult for " + t[1] + " " + t[2] + " (first given on line " +
                                       std::to_string(it->second.second) + ")");
    } else {
      throw SyntaxError(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (!name) throw SyntaxError(line_no, "missing 'quantale <name>'");
  if (elements_line == 0) throw SyntaxError(line_no, "missing 'elements'");
  if (!unit) throw SyntaxError(line_no, "missing 'unit'");

  const std::size_t n = spec.labels.size();
  spec.name = *name;
  spec.unit = *unit;
  spec.mult_table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      auto it = mult.find({a, b});
      if (it == mult.end()) throw SyntaxError(line_no, "missing mult for " + spec.labels[a] + " " + spec.labels[b]);
      spec.mult_table[a * n + b] = it->second.first;
      spec.mult_table[b * n + a] = it->second.first;
    }
  return Quantale::build(spec);
}

std::string write_spec(const Quantale& q) {
  std::ostringstream out;
  const auto elems = q.elements();
  out << "quantale " << q.name() << "\n";
  out << "elements";
  for (auto e : elems) out << ' ' << q.label(e);
  out << "\nunit " << q.label(q.unit()) << "\n";
  for (auto a : elems)
    for (auto b : elems) {
      if (!q.less(a, b)) continue;
      bool covering = true;
      for (auto c : elems)
        if (q.less(a, c) && q.less(c, b)) covering = false;
      if (covering) out << "leq " << q.label(a) << ' ' << q.label(b) << "\n";
    }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      out << "mult " << q.label(elems[i]) << ' ' << q.label(elems[j]) << ' ' << q.label(q.mult(elems[i], elems[j]))
          << "\n";
  return out.str();
}

AnyQuantale resolve_quantale(const std::string& argument, const std::filesystem::path& base_dir) {
  try {
    ZooEntry entry = builtin(argument);
    if (entry.quantale) return entry.quantale;
    return entry.chain;
  } catch (const UnknownName&) {
  }
  std::filesystem::path path(argument);
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  std::ifstream file(path);
  if (!file) throw UnknownName("'" + argument + "' is neither a builtin quantale nor a readable spec file");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return std::make_shared<const Quantale>(parse_spec(buffer.str()));
}

}  // namespace qmaps
