#include "core/relation.hpp"

#include <fstream>
#include <unordered_set>

#include "core/error.hpp"
#include "core/text.hpp"

namespace zefav {

const char* origin_name(TripleOrigin origin) {
  return origin == TripleOrigin::Claim ? "claim" : "evidence";
}

TripleOrigin origin_from_name(std::string_view name) {
  if (name == "claim") return TripleOrigin::Claim;
  if (name == "evidence") return TripleOrigin::Evidence;
  raise(ErrorCode::Invalid, "unknown triple origin: " + std::string(name));
}

RelationCatalog RelationCatalog::from_names(std::vector<std::string> names, std::string source) {
  RelationCatalog catalog;
  catalog.source_ = std::move(source);
  std::unordered_set<std::string> seen;
  for (auto& name : names) {
    std::string trimmed = trim(name);
    if (trimmed.empty()) continue;
    std::string key = normalize_entity(trimmed);
    if (key.empty()) key = trimmed;
    if (!seen.insert(key).second) continue;
    catalog.names_.push_back(std::move(trimmed));
    catalog.normalized_.push_back(std::move(key));
  }
  if (catalog.names_.empty()) {
    raise(ErrorCode::EmptyCatalog, "relation catalog is empty (" + catalog.source_ + ")");
  }
  return catalog;
}

RelationCatalog RelationCatalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open catalog file: " + path);
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    names.push_back(std::move(trimmed));
  }
  return from_names(std::move(names), path);
}

const RelationCatalog& RelationCatalog::builtin() {
  static const RelationCatalog catalog = [] {
    std::vector<std::string> names(kFewRelRelationNames, kFewRelRelationNames + kFewRelRelationCount);
    return from_names(std::move(names), "builtin");
  }();
  return catalog;
}

bool RelationCatalog::contains(std::string_view relation) const {
  std::string key = normalize_entity(relation);
  if (key.empty()) key = trim(relation);
  for (const auto& normalized : normalized_) {
    if (normalized == key) return true;
  }
  return false;
}

std::string RelationCatalog::joined() const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ", ";
    out += names_[i];
  }
  return out;
}

namespace {

struct Span {
  std::size_t begin;  // index of '('
  std::size_t end;    // index one past ')'
};

// Outermost balanced "(...)" spans. An unclosed '(' produces a warning entry
// via the `unclosed` out-parameter.
std::vector<Span> outer_paren_spans(std::string_view text, bool* unclosed) {
  std::vector<Span> spans;
  *unclosed = false;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') {
      ++i;
      continue;
    }
    int depth = 0;
    std::size_t j = i;
    bool closed = false;
    for (; j < text.size(); ++j) {
      if (text[j] == '(') ++depth;
      else if (text[j] == ')') {
        if (--depth == 0) {
          closed = true;
          break;
        }
      }
    }
    if (!closed) {
      *unclosed = true;
      break;
    }
    spans.push_back({i, j + 1});
    i = j + 1;
  }
  return spans;
}

// Splits the interior of a span on top-level commas. Commas nested in
// parentheses or inside double quotes do not split.
std::vector<std::string> split_top_level(std::string_view interior) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  bool in_quotes = false;
  for (char c : interior) {
    if (c == '"') in_quotes = !in_quotes;
    if (!in_quotes) {
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if (c == ',' && depth == 0) {
        parts.push_back(current);
        current.clear();
        continue;
      }
    }
    current.push_back(c);
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

TripleParse parse_triples(std::string_view generation, TripleOrigin origin,
                          const RelationCatalog* catalog) {
  TripleParse result;
  bool unclosed = false;
  std::vector<Span> spans = outer_paren_spans(generation, &unclosed);
  std::unordered_set<std::string> seen;
  for (const Span& span : spans) {
    std::string_view fragment = generation.substr(span.begin, span.end - span.begin);
    std::string_view interior = generation.substr(span.begin + 1, span.end - span.begin - 2);
    std::vector<std::string> parts = split_top_level(interior);
    if (parts.size() != 3) {
      result.warnings.push_back({std::string(fragment),
                                 "expected 2 top-level commas, found " +
                                     std::to_string(parts.size() - 1)});
      continue;
    }
    RelationTriple triple;
    triple.head = trim(parts[0]);
    triple.relation = trim(parts[1]);
    triple.tail = trim(parts[2]);
    triple.origin = origin;
    if (triple.head.empty() || triple.relation.empty() || triple.tail.empty()) {
      result.warnings.push_back({std::string(fragment), "empty field after trimming"});
      continue;
    }
    triple.in_catalog = catalog == nullptr || catalog->contains(triple.relation);
    std::string key = normalized_triple_key(triple);
    if (!seen.insert(key).second) continue;
    result.triples.push_back(std::move(triple));
  }
  if (unclosed) {
    result.warnings.push_back({"(", "unbalanced '(' with no closing parenthesis"});
  }
  return result;
}

std::string render_triple(const RelationTriple& triple) {
  return "(" + triple.head + ", " + triple.relation + ", " + triple.tail + ")";
}

std::string render_triples(std::span<const RelationTriple> triples) {
  std::string out;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (i) out += "\n";
    out += render_triple(triples[i]);
  }
  return out;
}

std::string normalized_triple_key(const RelationTriple& triple) {
  return normalize_entity(triple.head) + '\x1f' + normalize_entity(triple.relation) + '\x1f' +
         normalize_entity(triple.tail);
}

}  // namespace zefav
