#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qmaps/chain.hpp"
#include "qmaps/partition.hpp"
#include "qmaps/quantale.hpp"
#include "qmaps/relation.hpp"
#include "qmaps/zoo.hpp"

namespace qmaps {

using AnyRelation = std::variant<Relation<Quantale>, Relation<ChainQuantale>>;
using AnyPartition = std::variant<QPartition<Quantale>, QPartition<ChainQuantale>>;

/// Relation and partition literals read from one text.
///
///   rel <name> : {x,y} -> {l,m}+ over <quantale>
///   <|Y| rows of |X| labels, row y holds φ(-, y)>
///
///   partition <name> : {x,y,z} over <quantale>
///   blocks S1 S2
///   <|X| rows of |blocks| labels>
///
/// A trailing `+` on a set literal adjoins the star element; `{}` is empty.
/// `#` starts a comment and blank lines are ignored.
struct LiteralDocument {
  std::map<std::string, AnyRelation> relations;
  std::map<std::string, AnyPartition> partitions;
  /// The quantale argument each literal was declared over.
  std::map<std::string, std::string> quantale_names;

  /// Resolves `name` or `name^op`. Throws UnknownName.
  AnyRelation relation(const std::string& name) const;
  /// Throws UnknownName.
  const AnyPartition& partition(const std::string& name) const;
};

/// Quantale arguments are resolved with resolve_quantale against `base_dir`;
/// repeated arguments share one instance. Throws SyntaxError with the line number.
LiteralDocument parse_literals(std::string_view text, const std::filesystem::path& base_dir = {});

/// Reads and parses a file; relative quantale paths resolve next to it.
LiteralDocument load_literals(const std::filesystem::path& path);

/// Parses `{a,b}` with optional trailing `+` marks. Throws Error.
FiniteSet parse_set_literal(std::string_view text);

/// Writes a literal that parse_literals reads back to the same relation.
std::string format_relation(const std::string& name, const AnyRelation& relation, const std::string& quantale);
std::string format_partition(const std::string& name, const AnyPartition& partition, const std::string& quantale);

/// `{a,b}`, or the plus form when the last label is the star of the rest.
std::string set_literal(const FiniteSet& set);

}  // namespace qmaps
