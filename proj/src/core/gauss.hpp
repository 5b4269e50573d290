#ifndef VBRAID_GAUSS_HPP
#define VBRAID_GAUSS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/braid.hpp"

namespace vb {

enum class Passage : uint8_t { Over, Under, Flat };

struct Visit {
  int id;          // crossing id, 1-based after canonical relabeling
  Passage passage;
  int sign;        // +1 / -1, 0 for flat

  bool operator==(const Visit& o) const {
    return id == o.id && passage == o.passage && sign == o.sign;
  }
};

struct VirtualIncidence {
  int component;
  int arc_pos; // classical visits seen on this component before the incidence
};

struct VirtualCrossing {
  VirtualIncidence a, b;
};

// Per-component cyclic visit sequences of classical (or flat) crossings.
// Virtual crossings never appear in the component sequences; they are kept
// in virtual_record for the flat parity invariant only.
struct GaussCode {
  std::vector<std::vector<Visit>> components;
  std::vector<VirtualCrossing> virtual_record;

  int crossing_count() const;
  int virtual_count() const { return (int)virtual_record.size(); }
  bool has_flat() const;
  int writhe() const; // sum of crossing signs
};

GaussCode closure(const BraidWord& w);
int components(const GaussCode& g);

// Parity of inter-component virtual crossing counts, keyed by component
// pair (i < j, 0-based). Errors: MissingVirtualRecord only when record is
// absent conceptually -- here an empty record means all parities 0.
std::map<std::pair<int, int>, int> virtual_parity_between_components(const GaussCode& g);

// Canonical relabeling: ids renumbered 1..k in order of first visit scanning
// components in order. Starting points preserved.
GaussCode relabel_canonically(const GaussCode& g);

// Structural canonical form modulo cyclic rotation of each component,
// component ordering, and id relabeling. Exponential in component count;
// intended for desk-scale comparisons. virtual_record is dropped.
std::string canonical_key(const GaussCode& g);

std::string gauss_to_json(const GaussCode& g);
GaussCode gauss_from_json(const std::string& text);

} // namespace vb

#endif
