#ifndef VBRAID_BRAID_HPP
#define VBRAID_BRAID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace vb {

enum class GenKind : uint8_t { SigmaPos, SigmaNeg, V, C };
enum class BraidCategory : uint8_t { Virtual, Flat, Welded, Unrestricted };

const char* category_name(BraidCategory c);
BraidCategory category_from_name(const std::string& s);

struct Generator {
  GenKind kind;
  int index; // 1-based, acts on strands (index, index+1)

  bool operator==(const Generator& o) const { return kind == o.kind && index == o.index; }
  bool operator!=(const Generator& o) const { return !(*this == o); }
  bool operator<(const Generator& o) const {
    return kind != o.kind ? kind < o.kind : index < o.index;
  }
  Generator inverse() const {
    if (kind == GenKind::SigmaPos) return {GenKind::SigmaNeg, index};
    if (kind == GenKind::SigmaNeg) return {GenKind::SigmaPos, index};
    return *this; // v and c are involutions
  }
  bool is_sigma() const { return kind == GenKind::SigmaPos || kind == GenKind::SigmaNeg; }
  std::string str() const;
};

inline Generator sigma(int i) { return {GenKind::SigmaPos, i}; }
inline Generator sigma_inv(int i) { return {GenKind::SigmaNeg, i}; }
inline Generator vgen(int i) { return {GenKind::V, i}; }
inline Generator cgen(int i) { return {GenKind::C, i}; }

// A word in VB_n / FV_n / WB_n / UB_n. Letters are read top-to-bottom;
// permutations compose left-to-right in reading order.
struct BraidWord {
  int strands = 1;
  BraidCategory category = BraidCategory::Virtual;
  std::vector<Generator> letters;

  bool operator==(const BraidWord& o) const {
    return strands == o.strands && category == o.category && letters == o.letters;
  }
  bool operator!=(const BraidWord& o) const { return !(*this == o); }
  size_t size() const { return letters.size(); }
};

bool letter_valid_for(GenKind kind, BraidCategory cat);
void validate(const BraidWord& w); // throws IndexOutOfRange / CategoryViolation

BraidWord free_reduce(const BraidWord& w);
BraidWord compose(const BraidWord& a, const BraidWord& b); // StrandMismatch / CategoryMismatch
BraidWord invert(const BraidWord& w);
BraidWord include_right(const BraidWord& w);               // n -> n+1, letters fixed
BraidWord shift_left(const BraidWord& w);                  // n -> n+1, indices +1 (the i(b) map)
int writhe(const BraidWord& w);

// perm[i] = bottom endpoint position of the strand entering at top position
// i+1 (values 1-based).
std::vector<int> underlying_permutation(const BraidWord& w);
int cycle_count(const std::vector<int>& perm);

// Text grammar: "n=<int>" then tokens s<i> (sigma), S<i> (sigma inverse),
// v<i>, c<i>; optional "cat=<virtual|flat|welded|unrestricted>".
BraidWord parse_word(const std::string& text);
std::string print_word(const BraidWord& w); // canonical; cat= emitted for non-Virtual only

} // namespace vb

#endif
