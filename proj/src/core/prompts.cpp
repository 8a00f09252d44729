#include "core/prompts.hpp"

#include <fstream>
#include <numeric>

#include "json.hpp"

#include "core/error.hpp"
#include "core/text.hpp"

namespace zefav {

using nlohmann::json;

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::RelationExtraction: return "relation_extraction";
    case Stage::InfoRE: return "infore";
    case Stage::Verdict: return "verdict";
  }
  return "unknown";
}

std::vector<FewShotPair> load_few_shot(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open few-shot example file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    raise(ErrorCode::Schema, "few-shot example file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_array()) raise(ErrorCode::Schema, "few-shot example file must hold a JSON array");
  std::vector<FewShotPair> pairs;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("evidence") || !item.contains("hierarchy") ||
        !item["evidence"].is_string() || !item["hierarchy"].is_string()) {
      raise(ErrorCode::Schema, "few-shot entries must be {\"evidence\": string, \"hierarchy\": string}");
    }
    pairs.push_back({item["evidence"].get<std::string>(), item["hierarchy"].get<std::string>()});
  }
  if (pairs.empty()) raise(ErrorCode::MissingExamples, "few-shot example file is empty: " + path);
  return pairs;
}

const std::vector<FewShotPair>& builtin_few_shot() {
  static const std::vector<FewShotPair> pairs = {
      {"The Eiffel Tower is a wrought-iron lattice tower in Paris. It was designed by the company "
       "of Gustave Eiffel and completed in 1889. The tower was built as the entrance arch to the "
       "1889 World's Fair.",
       "Eiffel Tower\n"
       "- wrought-iron lattice tower in Paris\n"
       "- designed by the company of Gustave Eiffel\n"
       "  - completed in 1889\n"
       "- built as the entrance arch\n"
       "  - for the 1889 World's Fair"},
      {"The Amazon rainforest spans nine countries, and most of the forest lies within Brazil. "
       "Deforestation accelerated during the 1970s because new highways opened remote areas to "
       "settlement.",
       "Amazon rainforest\n"
       "- spans nine countries\n"
       "  - most of the forest lies within Brazil\n"
       "- deforestation accelerated during the 1970s\n"
       "  - new highways opened remote areas\n"
       "    - remote areas were opened to settlement"},
  };
  return pairs;
}

std::string render_relation_prompt(std::string_view sentence, const RelationCatalog& catalog) {
  if (catalog.size() == 0) raise(ErrorCode::EmptyCatalog, "relation catalog is empty");
  std::string out;
  out += "### Instruction: Given a sentence, please identify the head and tail entities in the "
         "sentence and classify the relation type into one of the appropriate categories; The "
         "collection of categories is: [";
  out += catalog.joined();
  out += "]; \n";
  out += "Sentence: ";
  out += sentence;
  out += " \n";
  out += "### Response: ";
  return out;
}

bool truncate_items_to_budget(std::vector<std::string>& items, std::size_t available) {
  std::size_t total = std::accumulate(items.begin(), items.end(), std::size_t{0},
                                      [](std::size_t acc, const std::string& s) { return acc + s.size(); });
  if (total <= available) return false;

  std::vector<std::size_t> lens(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) lens[i] = items[i].size();
  std::size_t excess = total - available;
  while (excess > 0) {
    // First index holding the current maximum loses characters first.
    std::size_t max_len = 0;
    for (std::size_t len : lens) max_len = std::max(max_len, len);
    if (max_len == 0) break;
    std::size_t second = 0;
    std::size_t count_at_max = 0;
    for (std::size_t len : lens) {
      if (len == max_len) ++count_at_max;
      else second = std::max(second, len);
    }
    std::size_t removable = (max_len - second) * count_at_max;
    if (removable >= excess) {
      std::size_t base = excess / count_at_max;
      std::size_t extra = excess % count_at_max;
      for (std::size_t i = 0; i < lens.size(); ++i) {
        if (lens[i] != max_len) continue;
        lens[i] -= base;
        if (extra > 0) {
          --lens[i];
          --extra;
        }
      }
      excess = 0;
    } else {
      for (std::size_t& len : lens) {
        if (len == max_len) len = second;
      }
      excess -= removable;
    }
  }
  for (std::size_t i = 0; i < items.size(); ++i) items[i].resize(lens[i]);
  return true;
}

RenderedPrompt render_infore_prompt(std::span<const std::string> evidence,
                                    std::span<const FewShotPair> examples,
                                    std::size_t char_budget) {
  if (examples.empty()) {
    raise(ErrorCode::MissingExamples, "the InfoRE prompt requires at least one worked example");
  }
  if (evidence.empty()) {
    raise(ErrorCode::Invalid, "the InfoRE prompt requires at least one evidence item");
  }

  std::string scaffold =
      "Transform the following text into a hierarchical structure that organizes the information "
      "in the text into levels. The same level can reflect parallel relationships and indented "
      "levels reflect causal relationships. Here are some examples:\n";
  for (const auto& example : examples) {
    scaffold += "The evidence: " + example.evidence + "\n";
    scaffold += "The hierarchical structure: " + example.hierarchy + "\n";
  }
  static const std::string kTargetPrefix = "### The evidence: ";
  static const std::string kTargetSuffix = "\nThe hierarchical structure:";

  std::vector<std::string> items(evidence.begin(), evidence.end());
  std::size_t joined_overhead = items.size() > 1 ? (items.size() - 1) * 2 : 0;  // "\n\n" joins
  std::size_t overhead = scaffold.size() + kTargetPrefix.size() + kTargetSuffix.size() + joined_overhead;

  RenderedPrompt out;
  if (char_budget > 0) {
    std::size_t available = char_budget > overhead ? char_budget - overhead : 0;
    out.truncated = truncate_items_to_budget(items, available);
  }

  out.text = scaffold + kTargetPrefix;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.text += "\n\n";
    out.text += items[i];
  }
  out.text += kTargetSuffix;
  return out;
}

namespace {

std::string relation_line(std::size_t number, const RelationTriple& rel) {
  if (rel.origin == TripleOrigin::Claim) {
    return "    " + std::to_string(number) + ". The question mentioned the relation between " +
           rel.head + " and " + rel.tail + " as " + rel.relation + " *";
  }
  return "    " + std::to_string(number) + ". " + rel.head + " and " + rel.tail +
         " has relation with " + rel.relation + " **";
}

}  // namespace

RenderedPrompt render_verdict_prompt(const VerdictInputs& inputs, const AblationFlags& flags,
                                     std::size_t char_budget) {
  const bool documents_present =
      flags.use_infore && inputs.infore.has_value() && !inputs.infore->empty();
  const bool context_present = flags.use_context && !inputs.context_evidence.empty();
  const bool relations_present =
      flags.use_relations && (!inputs.claim_rels.empty() || !inputs.evidence_rels.empty());
  if (!documents_present && !context_present && !relations_present) {
    raise(ErrorCode::NothingToVerify,
          "verdict prompt has no content: documents, context and relations are all disabled or empty");
  }

  std::string question = trim(inputs.claim);
  if (question.empty() || question.back() != '?') question += "?";

  std::string relation_block;
  if (relations_present) {
    std::size_t number = 1;
    for (const auto& rel : inputs.claim_rels) relation_block += relation_line(number++, rel) + "\n";
    for (const auto& rel : inputs.evidence_rels) relation_block += relation_line(number++, rel) + "\n";
  }

  static const std::string kInstruction =
      "Please answer the question based on Documents, Context, and the following relations. The "
      "answer must belong to one of two values: True or False.\n";
  static const std::string kFooter = "    Let's think step-by-step.\n###The answer is:";

  RenderedPrompt out;
  std::vector<std::string> items(inputs.context_evidence.begin(), inputs.context_evidence.end());
  if (char_budget > 0 && context_present) {
    std::size_t overhead = 0;
    if (documents_present) overhead += std::string_view("Documents: \n").size() + inputs.infore->size();
    overhead += std::string_view("Context: \n").size() + (items.size() > 1 ? (items.size() - 1) * 2 : 0);
    overhead += std::string_view("Question: \n").size() + question.size();
    overhead += kInstruction.size() + relation_block.size() + kFooter.size();
    std::size_t available = char_budget > overhead ? char_budget - overhead : 0;
    out.truncated = truncate_items_to_budget(items, available);
  }

  std::string text;
  if (documents_present) text += "Documents: " + *inputs.infore + "\n";
  if (context_present) {
    text += "Context: ";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) text += "\n\n";
      text += items[i];
    }
    text += "\n";
  }
  text += "Question: " + question + "\n";
  text += kInstruction;
  text += relation_block;
  text += kFooter;
  out.text = std::move(text);
  return out;
}

const char* verdict_label_name(VerdictLabel label) {
  return label == VerdictLabel::True ? "True" : "False";
}

const char* parse_status_name(ParseStatus status) {
  switch (status) {
    case ParseStatus::Clean: return "Clean";
    case ParseStatus::Salvaged: return "Salvaged";
    case ParseStatus::Defaulted: return "Defaulted";
  }
  return "unknown";
}

VerdictLabel verdict_label_from_name(std::string_view name) {
  if (name == "True") return VerdictLabel::True;
  if (name == "False") return VerdictLabel::False;
  raise(ErrorCode::Invalid, "unknown verdict label: " + std::string(name));
}

ParseStatus parse_status_from_name(std::string_view name) {
  if (name == "Clean") return ParseStatus::Clean;
  if (name == "Salvaged") return ParseStatus::Salvaged;
  if (name == "Defaulted") return ParseStatus::Defaulted;
  raise(ErrorCode::Invalid, "unknown parse status: " + std::string(name));
}

VerdictOutcome parse_verdict(std::string_view generation) {
  static const std::string_view kMarker = "the answer is";
  VerdictOutcome outcome;
  outcome.raw = std::string(generation);

  std::size_t marker_pos = rfind_ci(generation, kMarker);
  outcome.marker_found = marker_pos != std::string_view::npos;

  std::string_view region =
      outcome.marker_found ? generation.substr(marker_pos + kMarker.size()) : generation;
  bool has_true = contains_word_ci(region, "true");
  bool has_false = contains_word_ci(region, "false");

  if (has_true != has_false) {
    outcome.label = has_true ? VerdictLabel::True : VerdictLabel::False;
    outcome.parse_status = outcome.marker_found ? ParseStatus::Clean : ParseStatus::Salvaged;
  } else {
    outcome.label = VerdictLabel::False;
    outcome.parse_status = ParseStatus::Defaulted;
  }
  return outcome;
}

}  // namespace zefav
