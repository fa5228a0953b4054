#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qmaps/enumerate.hpp"
#include "qmaps/literal.hpp"
#include "qmaps/verify.hpp"

namespace qmaps {

using Record = nlohmann::ordered_json;

enum class Format { Text, Jsonl };

/// {source, target, matrix_yx}; row y of matrix_yx lists φ(x, y) over x.
Record relation_record(const AnyRelation& relation);
Record partition_record(const AnyPartition& partition);

/// Flags plus the first lean and weakly-lean violations, when any.
Record classification_record(const Quantale& q, std::uint64_t search_cap = kDefaultSearchCap);

/// One record per profile followed by a summary record.
std::vector<Record> theorem_records(const TheoremReport& report);

Record law_record(const LawCheck& check);

/// jsonl: one compact JSON object per line. text: `key: value` lines, nested
/// objects indented, a blank line between records. Key order is preserved, so
/// identical records render to identical bytes.
std::string render(const std::vector<Record>& records, Format format);

}  // namespace qmaps
