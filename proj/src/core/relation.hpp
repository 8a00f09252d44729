#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zefav {

enum class TripleOrigin { Claim, Evidence };

const char* origin_name(TripleOrigin origin);
TripleOrigin origin_from_name(std::string_view name);

// One (head, relation, tail) fact extracted from text. Fields keep the
// surface forms as emitted; equality for set semantics goes through
// normalized_triple_key().
struct RelationTriple {
  std::string head;
  std::string relation;
  std::string tail;
  TripleOrigin origin = TripleOrigin::Claim;
  // False when the relation label is not a member of the active catalog.
  // Such triples are kept; downstream closure only looks at entities.
  bool in_catalog = true;

  bool operator==(const RelationTriple&) const = default;
};

// Ordered, duplicate-free inventory of relation type names.
class RelationCatalog {
 public:
  RelationCatalog() = default;
  static RelationCatalog from_names(std::vector<std::string> names, std::string source);
  // Text file, one relation name per line, '#' comment lines ignored.
  static RelationCatalog load(const std::string& path);
  // The FewRel relation inventory compiled into the library (100 names).
  static const RelationCatalog& builtin();

  const std::vector<std::string>& names() const { return names_; }
  const std::string& source() const { return source_; }
  std::size_t size() const { return names_.size(); }
  bool contains(std::string_view relation) const;
  // Names joined by ", " for prompt interpolation.
  std::string joined() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::string> normalized_;
  std::string source_;
};

struct ParseWarning {
  std::string fragment;
  std::string reason;
};

struct TripleParse {
  std::vector<RelationTriple> triples;
  std::vector<ParseWarning> warnings;
};

// Extracts every well-formed "(head, relation, tail)" span from raw
// generation text. Total: malformed fragments become warnings, never errors.
// Duplicates (under normalization of all three fields) are dropped, keeping
// the first occurrence. `catalog` may be null to disable membership checks.
TripleParse parse_triples(std::string_view generation, TripleOrigin origin,
                          const RelationCatalog* catalog = nullptr);

// "(h, r, t)" rendering, one triple per line.
std::string render_triple(const RelationTriple& triple);
std::string render_triples(std::span<const RelationTriple> triples);

// Normalized "head\x1fr\x1ftail" key used for set-semantics comparisons.
std::string normalized_triple_key(const RelationTriple& triple);

// Data behind RelationCatalog::builtin(); mirrored in data/fewrel_relations.txt.
extern const char* const kFewRelRelationNames[];
extern const std::size_t kFewRelRelationCount;

}  // namespace zefav
