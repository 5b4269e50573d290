#include "core/bracket.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

namespace vb {

Laurent bracket_delta() {
  return Laurent::monomial('A', 2, -1) + Laurent::monomial('A', -2, -1);
}

namespace {

// Slot layout per crossing: 4 slots (over-in, over-out, under-in, under-out).
enum Slot { OI = 0, OO = 1, UI = 2, UO = 3 };

struct SlotGraph {
  int k = 0;               // classical crossings
  int free_loops = 0;      // components with no classical visits
  std::vector<int> arc;    // arc[slot] = slot joined by a diagram arc
  std::vector<int> sign;   // per crossing id-1

  int slot(int id, Slot s) const { return 4 * (id - 1) + (int)s; }
};

SlotGraph build_graph(const GaussCode& g) {
  SlotGraph sg;
  sg.k = g.crossing_count();
  sg.arc.assign(4 * sg.k, -1);
  sg.sign.assign(sg.k, 0);
  for (const auto& comp : g.components) {
    if (comp.empty()) {
      ++sg.free_loops;
      continue;
    }
    for (size_t i = 0; i < comp.size(); ++i) {
      const Visit& cur = comp[i];
      const Visit& nxt = comp[(i + 1) % comp.size()];
      if (cur.passage == Passage::Flat)
        fail(Errc::FlatCrossingPresent, "bracket undefined for flat crossings");
      sg.sign[cur.id - 1] = cur.sign;
      int out = sg.slot(cur.id, cur.passage == Passage::Over ? OO : UO);
      int in = sg.slot(nxt.id, nxt.passage == Passage::Over ? OI : UI);
      sg.arc[out] = in;
      sg.arc[in] = out;
    }
  }
  for (int s = 0; s < 4 * sg.k; ++s)
    if (sg.arc[s] < 0) fail(Errc::MalformedDiagram, "gauss code is not a closed 1-manifold");
  return sg;
}

int count_loops(const SlotGraph& sg, uint32_t state) {
  // state bit c: 0 = A-smoothing at crossing c, 1 = B-smoothing.
  // sign +: A = {OI-UO, UI-OO}, B = {OI-UI, OO-UO};  sign -: swapped.
  int n = 4 * sg.k;
  std::vector<int> match(n);
  for (int c = 0; c < sg.k; ++c) {
    bool b = (state >> c) & 1;
    bool oriented = (sg.sign[c] > 0) != b; // oriented smoothing?
    int base = 4 * c;
    if (oriented) {
      match[base + OI] = base + UO;
      match[base + UO] = base + OI;
      match[base + UI] = base + OO;
      match[base + OO] = base + UI;
    } else {
      match[base + OI] = base + UI;
      match[base + UI] = base + OI;
      match[base + OO] = base + UO;
      match[base + UO] = base + OO;
    }
  }
  std::vector<bool> seen(n, false);
  int loops = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++loops;
    int cur = s;
    do {
      seen[cur] = true;
      int via = match[cur];
      seen[via] = true;
      cur = sg.arc[via];
    } while (cur != s);
  }
  return loops + sg.free_loops;
}

} // namespace

Laurent bracket_state_sum(const GaussCode& g) {
  SlotGraph sg = build_graph(g);
  if (sg.k > 24) fail(Errc::BudgetExceeded, "too many crossings for full state enumeration");
  // Histogram over (A-exponent, loops-1); expand delta powers once at the end.
  std::map<std::pair<int, int>, int64_t> hist;
  if (sg.k == 0) {
    if (sg.free_loops == 0) return Laurent::zero();
    hist[{0, sg.free_loops - 1}] += 1;
  } else {
    uint32_t states = 1u << sg.k;
    for (uint32_t st = 0; st < states; ++st) {
      int b_count = (int)std::popcount(st);
      int exp = sg.k - 2 * b_count; // A^(a-b)
      int loops = count_loops(sg, st);
      hist[{exp, loops - 1}] += 1;
    }
  }
  Laurent delta = bracket_delta();
  int max_pow = 0;
  for (auto& [key, cnt] : hist) max_pow = std::max(max_pow, key.second);
  std::vector<Laurent> dpow(max_pow + 1);
  dpow[0] = Laurent::one();
  for (int i = 1; i <= max_pow; ++i) dpow[i] = dpow[i - 1] * delta;
  Laurent total;
  for (auto& [key, cnt] : hist)
    total += Laurent::monomial('A', key.first, Rat((long)cnt)) * dpow[key.second];
  return total;
}

Laurent normalized_bracket(const GaussCode& g) {
  Laurent b = bracket_state_sum(g);
  int w = g.writhe();
  Laurent norm = (w >= 0) ? Laurent::monomial('A', -3, -1).pow(w)
                          : Laurent::monomial('A', 3, -1).pow(-w);
  return b * norm;
}

Laurent normalized_bracket(const BraidWord& w) { return normalized_bracket(closure(w)); }

} // namespace vb
