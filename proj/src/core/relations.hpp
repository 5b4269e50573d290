#ifndef VBRAID_RELATIONS_HPP
#define VBRAID_RELATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/braid.hpp"

namespace vb {

// One concrete instance of a defining relation, lhs = rhs as letter
// sequences. Commutation/braid families are instantiated per index pattern
// for a given strand count rather than stored abstractly.
struct Relation {
  std::string name; // unique per instance, e.g. "special-detour:+:2"
  std::vector<Generator> lhs;
  std::vector<Generator> rhs;
};

// The full relation table licensed for a category at strand count n.
// Includes derived sign variants (each a consequence of the defining set);
// every entry preserves the underlying permutation and the writhe (the quadratic
// Hecke relation is not part of this word-level table).
const std::vector<Relation>& relations_for(BraidCategory cat, int strands);

std::optional<Relation> find_relation(BraidCategory cat, int strands, const std::string& name);

enum class Direction { Forward, Backward };

// Replace rel.lhs by rel.rhs at letter position pos (Forward) or rhs by lhs
// (Backward). Errors: NoMatch, CategoryViolation.
BraidWord apply_relation(const BraidWord& w, const Relation& rel, size_t pos, Direction dir);

// Whether the relation family (by base name) is licensed in the category.
bool relation_licensed(const std::string& name, BraidCategory cat);

struct RelationSite {
  const Relation* rel;
  size_t pos;
  Direction dir;
};

// All (relation, position, direction) triples applicable to w, in a stable
// deterministic order.
std::vector<RelationSite> applicable_relations(const BraidWord& w, const std::vector<Relation>& table);

} // namespace vb

#endif
