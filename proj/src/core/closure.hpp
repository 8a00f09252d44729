#pragma once

#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "core/relation.hpp"

namespace zefav {

struct ClosureOptions {
  // When true, a relation is also selected when only its tail entity is
  // hypothesized (and its head is then added). The pseudocode rule is
  // head-only; this stays off by default.
  bool symmetric = false;
};

struct ClosureResult {
  std::vector<RelationTriple> claim_rels;
  std::vector<RelationTriple> evidence_rels_new;  // first-selection order
  std::unordered_set<std::string> hypos;          // normalized entities
  int rounds = 0;                                 // full passes, final quiescent pass included
};

// Filters evidence relations to the closure reachable from the claim
// relations' entities: seed the hypothesis set with heads and tails of all
// claim relations, then repeatedly select any evidence relation whose head is
// already hypothesized, adding its tail. Stops when a full pass selects
// nothing new and adds no entity. Evidence duplicates (normalized) are
// considered once.
ClosureResult find_evidence_relations(std::span<const RelationTriple> claim_rels,
                                      std::span<const RelationTriple> evidence_rels,
                                      const ClosureOptions& options = {});

struct ClosureStats {
  std::size_t kept = 0;
  std::size_t dropped = 0;  // kept + dropped = number of deduplicated evidence rels
  int rounds = 0;
};

// Throws Error{MismatchedInputs} when `result` was not produced from
// `evidence_rels` (detected by a subset violation).
ClosureStats closure_stats(const ClosureResult& result,
                           std::span<const RelationTriple> evidence_rels);

}  // namespace zefav
