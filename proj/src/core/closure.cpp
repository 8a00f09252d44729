#include "core/closure.hpp"

#include "core/error.hpp"
#include "core/text.hpp"

namespace zefav {

namespace {

std::vector<RelationTriple> dedup(std::span<const RelationTriple> rels) {
  std::vector<RelationTriple> out;
  std::unordered_set<std::string> seen;
  for (const auto& rel : rels) {
    if (seen.insert(normalized_triple_key(rel)).second) out.push_back(rel);
  }
  return out;
}

}  // namespace

ClosureResult find_evidence_relations(std::span<const RelationTriple> claim_rels,
                                      std::span<const RelationTriple> evidence_rels,
                                      const ClosureOptions& options) {
  ClosureResult result;
  result.claim_rels.assign(claim_rels.begin(), claim_rels.end());
  for (const auto& rel : claim_rels) {
    result.hypos.insert(normalize_entity(rel.head));
    result.hypos.insert(normalize_entity(rel.tail));
  }

  std::vector<RelationTriple> candidates = dedup(evidence_rels);
  std::vector<bool> selected(candidates.size(), false);

  bool changed = true;
  while (changed) {
    changed = false;
    ++result.rounds;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (selected[i]) continue;
      const auto& rel = candidates[i];
      std::string head = normalize_entity(rel.head);
      std::string tail = normalize_entity(rel.tail);
      bool hit = result.hypos.count(head) > 0;
      if (options.symmetric && !hit) hit = result.hypos.count(tail) > 0;
      if (!hit) continue;
      selected[i] = true;
      result.evidence_rels_new.push_back(rel);
      changed = true;
      if (result.hypos.insert(tail).second) changed = true;
      if (options.symmetric && result.hypos.insert(head).second) changed = true;
    }
  }
  return result;
}

ClosureStats closure_stats(const ClosureResult& result,
                           std::span<const RelationTriple> evidence_rels) {
  std::vector<RelationTriple> candidates = dedup(evidence_rels);
  std::unordered_set<std::string> candidate_keys;
  for (const auto& rel : candidates) candidate_keys.insert(normalized_triple_key(rel));

  for (const auto& rel : result.evidence_rels_new) {
    if (!candidate_keys.count(normalized_triple_key(rel))) {
      raise(ErrorCode::MismatchedInputs,
            "closure result contains a relation not present in the evidence input: " +
                render_triple(rel));
    }
  }

  ClosureStats stats;
  stats.kept = result.evidence_rels_new.size();
  stats.dropped = candidates.size() - stats.kept;
  stats.rounds = result.rounds;
  return stats;
}

}  // namespace zefav
