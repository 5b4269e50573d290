#ifndef VBRAID_BRAIDING_HPP
#define VBRAID_BRAIDING_HPP

#include <functional>

#include "core/morse.hpp"

namespace vb {

// A maximal upward-oriented arc that the braiding must remove. Arcs lying in
// the closure zone (event-free up strands with only closure strands to their
// right) are not listed; they play the role of the closure arcs around the
// braid axis. free == true when the arc meets no classical or flat crossing
// (virtual crossings on it are detoured away by the basic move).
struct UpArc {
  int top_slice = -1;    // cup event creating the arc
  int top_col = -1;      // column just below the cup
  int bottom_slice = -1; // cap event ending the arc
  int bottom_col = -1;
  bool free = true;
  std::vector<int> crossing_slices; // owning Cross events when not free
};

std::vector<UpArc> find_up_arcs(const MorsePresentation& m);

// Basic braiding move: cut the arc, pull the ends to the boundaries of its
// span crossing everything only virtually, and reconnect around the braid
// axis with a fresh closure strand at the right edge of the diagram zone.
// Errors: NotFreeArc when the arc carries a classical/flat crossing or is a
// closure arc; BadSite when no arc matches.
MorsePresentation eliminate_up_arc(const MorsePresentation& m, const UpArc& arc);

// Braid the crossing box at the given slice: the crossing is held rigid and
// rotated so both its strands head downward (the drawn sign flips when
// exactly one strand was upward); each upward strand through it is fed from
// a new strand pair crossing everything virtually. Errors: NoUpArc.
MorsePresentation braid_crossing_box(const MorsePresentation& m, int crossing_slice);

// Full Alexander-style braiding: crossing boxes first, then free up-arcs to
// a fixpoint (leftmost-topmost first), then read off the braid word.
BraidWord braid(const MorsePresentation& m);

// Braiding with a caller-controlled elimination order, used to exercise
// order independence: `pick(k)` selects among k candidate arcs.
BraidWord braid_with_order(const MorsePresentation& m, const std::function<size_t(size_t)>& pick);

} // namespace vb

#endif
