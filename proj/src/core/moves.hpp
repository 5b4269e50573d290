#ifndef VBRAID_MOVES_HPP
#define VBRAID_MOVES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/relations.hpp"

namespace vb {

enum class StabKind : uint8_t { RealPos, RealNeg, Virtual, Flat };
enum class LvKind : uint8_t { Basic, Virtual, RealPos, RealNeg };
enum class LvSide : uint8_t { Left, Right };

// --- elementary moves -----------------------------------------------------

// g^{-1} w g (v and c are their own inverses). Licensing per category.
BraidWord conjugate(const BraidWord& w, Generator g);

// include_right then append v_n, sigma_n^{+-1} or c_n.
BraidWord stabilize_right(const BraidWord& w, StabKind kind);

// Inverse of stabilize_right: the word must end in the stabilizing letter
// with no other letters of index n-1. Returns nullopt when the pattern does
// not apply.
std::optional<BraidWord> destabilize_right(const BraidWord& w);

// alpha -> alpha sigma_n^{-s} v_{n-1} sigma_n^{+s} in VB_{n+1}; sign=+1 is
// the under-threaded direction, sign=-1 its over-threaded mirror. In the
// flat category: alpha c_n v_{n-1} c_n.
BraidWord thread_right_under(const BraidWord& w, int sign = +1);

// alpha -> alpha v_n v_{n-1} x_{n-1} v_n x_{n-1}^{-1} v_{n-1} v_n with
// x = sigma (virtual) or c (flat).
BraidWord thread_left_under(const BraidWord& w);

// Geometric L_v-move as a word-level insertion: cut the strand passing
// through `gap` (0..len) at position `strand`, route the new pair through
// the rightmost columns with virtual fans, with an optional in-box crossing.
BraidWord lv_insert(const BraidWord& w, size_t gap, int strand, LvKind kind, LvSide side);

// Kamada right exchange pair (b1 s_n^{-1} b2 s_n, b1 v_n b2 v_n) in VB_{n+1}.
std::pair<BraidWord, BraidWord> exchange_right(const BraidWord& b1, const BraidWord& b2);
// Left pair (i(b1) s_1^{-1} i(b2) s_1, i(b1) v_1 i(b2) v_1).
std::pair<BraidWord, BraidWord> exchange_left(const BraidWord& b1, const BraidWord& b2);

// --- move paths -----------------------------------------------------------

// One replayable step. Relations carry their table name; moves carry enough
// parameters to be re-applied. Every step is invertible.
struct MoveStep {
  enum class Kind : uint8_t {
    Relation,       // name, pos, forward?
    FreeCancel,     // remove inverse pair at pos (or insert when !forward)
    Conjugate,      // by gen (forward) / by gen.inverse() (backward)
    Stabilize,      // stab kind (backward = destabilize)
    ThreadRight,    // sign (backward removes the suffix)
    ThreadLeft,     // (backward removes the suffix)
    ExchangeRight,  // split1/split2 give |b1|, |b2|; forward: real -> virtual
    ExchangeLeft,
  };
  Kind kind;
  bool forward = true;
  std::string relation;  // Relation
  size_t pos = 0;        // Relation / FreeCancel
  Generator gen{GenKind::V, 1};      // Conjugate / FreeCancel pair letter
  StabKind stab = StabKind::Virtual; // Stabilize
  int sign = +1;                     // ThreadRight
  size_t split1 = 0, split2 = 0;     // Exchange

  MoveStep inverse() const {
    MoveStep s = *this;
    s.forward = !forward;
    return s;
  }
};

struct MovePath {
  BraidWord start;
  std::vector<MoveStep> steps;
  BraidWord end;
};

// Applies one step, validating that it is licensed and applicable.
// Errors: ScriptInapplicable (with step context), CategoryViolation.
BraidWord apply_step(const BraidWord& w, const MoveStep& step);

// Replays every step from path.start and checks the result equals path.end.
void validate_path(const MovePath& path);

std::string path_to_json(const MovePath& path);

} // namespace vb

#endif
