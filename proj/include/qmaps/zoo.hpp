#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qmaps/chain.hpp"
#include "qmaps/quantale.hpp"

namespace qmaps {

/// A named example quantale with its classification as stated in the literature.
///
/// Exactly one of `quantale` and `chain` is set. Chain entries have no finite
/// carrier, so their `expected` flags are documentation and never computed.
struct ZooEntry {
  std::string name;
  QuantalePtr quantale;
  ChainPtr chain;
  Classification expected;
};

/// C3, F1, F2, M3, M3prime (alias M3'), powerset(n) for 1 ≤ n ≤ 4, free-Z2,
/// lukasiewicz(n) and godel(n) for 1 ≤ n ≤ 64, lawvere-chain, extended-chain.
/// Throws UnknownName.
ZooEntry builtin(std::string_view name);

/// Names of the entries exercised by the test suites, finite ones first.
std::vector<std::string> standard_zoo();

/// Parses the line-oriented spec format:
///
///   quantale <name>
///   elements e1 e2 ...
///   unit <e>
///   leq <a> <b>          one generating pair per line
///   mult <a> <b> <c>     a & b = c, the symmetric entry is implied
///
/// `#` starts a comment. Every unordered pair needs a mult line.
/// Throws SyntaxError for malformed input and passes build errors through.
Quantale parse_spec(std::string_view text);

/// Writes a spec that parse_spec maps back to an equal quantale: covering
/// pairs for the order and one mult line per unordered pair.
std::string write_spec(const Quantale& q);

using AnyQuantale = std::variant<QuantalePtr, ChainPtr>;

/// Builtin names first, then a spec file path (relative paths against `base_dir`).
/// Throws UnknownName when neither matches.
AnyQuantale resolve_quantale(const std::string& argument, const std::filesystem::path& base_dir = {});

}  // namespace qmaps
