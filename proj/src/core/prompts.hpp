#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/relation.hpp"

namespace zefav {

enum class Stage { RelationExtraction, InfoRE, Verdict };
const char* stage_name(Stage stage);

// The three pipeline toggles spanning the ablation grid.
struct AblationFlags {
  bool use_relations = true;
  bool use_infore = true;
  bool use_context = true;

  bool operator==(const AblationFlags&) const = default;
};

struct FewShotPair {
  std::string evidence;
  std::string hierarchy;
};

// JSON array of {"evidence": string, "hierarchy": string}.
std::vector<FewShotPair> load_few_shot(const std::string& path);
// Two handwritten pairs compiled into the library; mirrored in
// data/infore_examples.json.
const std::vector<FewShotPair>& builtin_few_shot();

struct RenderedPrompt {
  std::string text;
  bool truncated = false;
};

// Relation-extraction prompt. Ends at the "### Response: " generation point.
std::string render_relation_prompt(std::string_view sentence, const RelationCatalog& catalog);

// Evidence-reorganization prompt: instruction, worked examples, then the
// target evidence (items joined by blank lines) ending at "The hierarchical
// structure:". `char_budget` of 0 disables truncation.
RenderedPrompt render_infore_prompt(std::span<const std::string> evidence,
                                    std::span<const FewShotPair> examples,
                                    std::size_t char_budget = 0);

struct VerdictInputs {
  std::string claim;
  std::vector<std::string> context_evidence;
  std::optional<std::string> infore;
  std::vector<RelationTriple> claim_rels;
  std::vector<RelationTriple> evidence_rels;
};

// Final verdict prompt. Sections honor the flags: Documents holds the InfoRE
// text, Context the full evidence, Question the claim; relation lines are
// numbered from 1, claim relations first (suffix "*"), then evidence
// relations (suffix "**"). Ends with "###The answer is:". Throws
// Error{NothingToVerify} when every content section is disabled or empty.
RenderedPrompt render_verdict_prompt(const VerdictInputs& inputs, const AblationFlags& flags,
                                     std::size_t char_budget = 0);

enum class VerdictLabel { True, False };
enum class ParseStatus { Clean, Salvaged, Defaulted };

const char* verdict_label_name(VerdictLabel label);
const char* parse_status_name(ParseStatus status);
VerdictLabel verdict_label_from_name(std::string_view name);
ParseStatus parse_status_from_name(std::string_view name);

struct VerdictOutcome {
  VerdictLabel label = VerdictLabel::False;
  ParseStatus parse_status = ParseStatus::Defaulted;
  std::string raw;
  bool marker_found = false;

  bool operator==(const VerdictOutcome&) const = default;
};

// Total. Looks behind the last case-insensitive "the answer is" marker for a
// word-bounded "true"/"false"; exactly one distinct value there is Clean.
// Without a marker, exactly one distinct value anywhere is Salvaged.
// Otherwise Defaulted with label False.
VerdictOutcome parse_verdict(std::string_view generation);

// Shortens items until their total length fits `available` characters,
// repeatedly shaving the end of the currently longest item (first index wins
// ties). Returns true when anything was cut.
bool truncate_items_to_budget(std::vector<std::string>& items, std::size_t available);

}  // namespace zefav
