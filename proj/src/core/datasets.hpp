#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "core/relation.hpp"

namespace zefav {

enum class DatasetSource { HoVer, FeverousS, Custom };
const char* dataset_source_name(DatasetSource source);
DatasetSource dataset_source_from_name(std::string_view name);

// One evaluation claim: text, gold verdict (True = supports), gold evidence
// strings, and an optional stratum (hop count or challenge type).
struct ClaimRecord {
  std::string id;
  std::string claim;
  std::optional<bool> gold;
  std::vector<std::string> evidence;
  std::optional<std::string> stratum;
  DatasetSource source = DatasetSource::Custom;

  bool operator==(const ClaimRecord&) const = default;
};

// Path expressions into external dataset records plus the label vocabulary.
// External schemas vary by release; this keeps field names in configuration.
struct FieldMapping {
  std::string claim_field;
  std::string label_field;  // empty: records carry no gold label
  std::string evidence_field;
  std::string id_field;  // empty: ids synthesized from the record index
  std::optional<std::string> stratum_field;
  std::string stratum_format = "{}";  // "{}" replaced by the raw stratum value
  std::set<std::string> label_true_values;
  std::set<std::string> label_false_values;

  static FieldMapping load(const std::string& path);
  void validate() const;
};

// Loads a JSON array or JSON Lines split through the mapping. Unknown label
// values are collected and reported in one Error{Label}; missing fields raise
// Error{Schema}. When `expected_count` is set, a mismatch raises
// Error{CountMismatch}.
std::vector<ClaimRecord> load_split(const std::string& path, const FieldMapping& mapping,
                                    DatasetSource source,
                                    std::optional<std::size_t> expected_count = std::nullopt);

// Canonical ClaimRecord JSONL (the artifact's own schema).
void save_canonical(std::span<const ClaimRecord> records, const std::string& path);
std::vector<ClaimRecord> load_canonical(const std::string& path);

// Converts FewRel-style records into instruction-tuning JSONL, one
// {"instruction", "response"} object per instance. Accepts either the FewRel
// release layout (object keyed by relation, instances with "tokens" and
// "h"/"t" spans) or flat JSONL records with "tokens", "head", "tail",
// "relation". Entity spans out of bounds raise Error{Span}. Returns the
// number of lines written.
std::size_t export_fewrel_instructions(const std::string& fewrel_path,
                                       const RelationCatalog& catalog, const std::string& out_path,
                                       const std::map<std::string, std::string>* pid2name = nullptr);

}  // namespace zefav
