#ifndef VBRAID_MORSE_HPP
#define VBRAID_MORSE_HPP

#include <string>
#include <vector>

#include "core/gauss.hpp"

namespace vb {

enum class MorseKind : uint8_t { Cup, Cap, Cross, VCross };
enum class CrossSign : uint8_t { Pos, Neg, Flat };

// One event per slice (encodes general position: no two crossings or
// extrema share a level). Columns are 1-based; an event at pos touches
// columns pos and pos+1. Reading order is top to bottom; a cup creates two
// strands, a cap joins two adjacent ones.
struct MorseEvent {
  MorseKind kind;
  int pos = 1;
  CrossSign sign = CrossSign::Pos; // Cross only
  bool left_up = false;            // Cup only: true = left column up-oriented ("ud")
};

struct MorsePresentation {
  std::vector<MorseEvent> slices;

  bool operator==(const MorsePresentation& o) const = default;
};

// --- tracing ------------------------------------------------------------

struct TracedPiece {
  int id = -1;
  bool up = false;
  int cup_slice = -1, cap_slice = -1;
  int cup_partner = -1, cap_partner = -1;
  std::vector<int> event_slices; // Cross/VCross slices passed, ascending
  bool is_return = false;        // event-free up piece in the rightmost zone
};

struct TracedEvent {
  MorseKind kind;
  CrossSign sign;
  int alpha = -1; // NW-SE strand (enters at pos from above / exits below at pos+1)
  int beta = -1;  // NE-SW strand
  int left = -1, right = -1; // cup/cap column pieces in left-right order
  bool left_up = false;
};

struct Trace {
  std::vector<TracedPiece> pieces;
  std::vector<TracedEvent> events;      // one per slice
  std::vector<std::vector<int>> cols;   // cols[b] = piece ids above slice b; size m+1
};

// Validates the diagram and computes the trace. Throws MalformedDiagram with
// the first inconsistent slice index.
Trace trace_diagram(const MorsePresentation& m);
void validate_morse(const MorsePresentation& m);

GaussCode gauss_from_morse(const MorsePresentation& m);

// --- renderers ----------------------------------------------------------

// Standard closed-braid drawing: braid strands at columns 1..n, nested
// return arcs on the right. find_up_arcs sees no eliminable arcs here.
MorsePresentation render_closure(const BraidWord& w);

// Same link with the closure arcs routed around the left side; the return
// strands are then genuine up-arcs and exercise the braiding moves.
MorsePresentation render_closure_left(const BraidWord& w);

// Rotate a diagram by half a turn; all strand orientations reverse, drawn
// crossing signs are preserved.
MorsePresentation rotate_180(const MorsePresentation& m);

std::string morse_to_json(const MorsePresentation& m);
MorsePresentation morse_from_json(const std::string& text);

} // namespace vb

#endif
