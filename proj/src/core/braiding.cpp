#include "core/braiding.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace vb {

namespace {

// Emits a new slice list while tracking column occupancy by piece tag.
// Original events are re-emitted by looking up their participants, so all
// position bookkeeping stays local to this class.
class MorseBuilder {
public:
  MorsePresentation out;
  std::vector<int> cur; // tags left to right

  int index_of(int tag) const {
    for (size_t i = 0; i < cur.size(); ++i)
      if (cur[i] == tag) return (int)i;
    fail(Errc::Internal, "builder: tag not on a column");
  }

  void cup(int left, int right, bool left_up, int insert_index) {
    cur.insert(cur.begin() + insert_index, {left, right});
    out.slices.push_back({MorseKind::Cup, insert_index + 1, CrossSign::Pos, left_up});
  }

  void cap(int a, int b) {
    int i = index_of(a);
    if (i + 1 >= (int)cur.size() || cur[i + 1] != b) fail(Errc::Internal, "builder: cap not adjacent");
    cur.erase(cur.begin() + i, cur.begin() + i + 2);
    out.slices.push_back({MorseKind::Cap, i + 1, CrossSign::Pos, false});
  }

  void cross(int left, int right, CrossSign sign) {
    int i = index_of(left);
    if (i + 1 >= (int)cur.size() || cur[i + 1] != right)
      fail(Errc::Internal, "builder: crossing not adjacent");
    std::swap(cur[i], cur[i + 1]);
    out.slices.push_back({MorseKind::Cross, i + 1, sign, false});
  }

  void vcross_at(int i) {
    std::swap(cur[i], cur[i + 1]);
    out.slices.push_back({MorseKind::VCross, i + 1, CrossSign::Pos, false});
  }

  // Move tag leftward by virtual crossings until exactly `left_count`
  // columns remain to its left.
  void fan_left_to(int tag, int left_count) {
    int i = index_of(tag);
    while (i > left_count) {
      vcross_at(i - 1);
      --i;
    }
  }

  // Move tag leftward until it sits immediately left of `stop`.
  void fan_left_past(int tag, int stop) {
    int i = index_of(tag);
    while (i > 0 && cur[i - 1] != stop) {
      vcross_at(i - 1);
      --i;
    }
    if (i == 0) fail(Errc::Internal, "builder: fan target missing");
    vcross_at(i - 1);
  }

  // Move tag rightward until the column right of it is `stop` (or none).
  void fan_right_until(int tag, int stop) {
    int i = index_of(tag);
    while (i + 1 < (int)cur.size() && cur[i + 1] != stop) {
      vcross_at(i);
      ++i;
    }
  }
};

struct UpArcPiece {
  int piece = -1;
  UpArc arc;
};

std::vector<UpArcPiece> up_arc_pieces(const Trace& t) {
  std::vector<UpArcPiece> res;
  for (const auto& p : t.pieces) {
    if (!p.up || p.is_return) continue;
    UpArcPiece u;
    u.piece = p.id;
    u.arc.top_slice = p.cup_slice;
    u.arc.bottom_slice = p.cap_slice;
    // column just below the cup / just above the cap
    auto col_at = [&](int boundary) {
      const auto& cols = t.cols[boundary];
      for (size_t i = 0; i < cols.size(); ++i)
        if (cols[i] == p.id) return (int)i + 1;
      return -1;
    };
    u.arc.top_col = col_at(p.cup_slice + 1);
    u.arc.bottom_col = col_at(p.cap_slice);
    for (int s : p.event_slices)
      if (t.events[s].kind == MorseKind::Cross) u.arc.crossing_slices.push_back(s);
    u.arc.free = u.arc.crossing_slices.empty();
    res.push_back(std::move(u));
  }
  std::sort(res.begin(), res.end(), [](const UpArcPiece& a, const UpArcPiece& b) {
    if (a.arc.top_slice != b.arc.top_slice) return a.arc.top_slice < b.arc.top_slice;
    return a.arc.top_col < b.arc.top_col;
  });
  return res;
}

// Shared rebuild walk. The surgery callbacks fire at the chosen slices; all
// other events re-emit via participant lookup. Returns piece tags:
// original piece ids, except that surgery may introduce fresh tags >= base.
class RebuildWalk {
public:
  RebuildWalk(const MorsePresentation& m, const Trace& t) : m_(m), t_(t) {}

  // tag resolution hook: maps (piece, slice) to the emitted tag, so a split
  // piece can use different tags above/below its box.
  std::function<int(int piece, int slice)> resolve = [](int p, int) { return p; };
  // slices whose original event is replaced by surgery
  std::map<int, std::function<void(MorseBuilder&)>> surgery;
  std::set<int> drop; // slices dropped entirely (events on a removed arc)

  // zone boundary: index of the first column tagged as closure material
  static int zone_start(const MorseBuilder& b, const std::set<int>& zone_tags) {
    int i = (int)b.cur.size();
    while (i > 0 && zone_tags.count(b.cur[i - 1])) --i;
    return i;
  }

  std::set<int> zone_tags; // old returns plus surgery-created returns

  MorsePresentation run() {
    MorseBuilder b;
    for (int s = 0; s < (int)m_.slices.size(); ++s) {
      auto it = surgery.find(s);
      if (it != surgery.end()) {
        it->second(b);
        continue;
      }
      if (drop.count(s)) continue;
      const TracedEvent& e = t_.events[s];
      switch (e.kind) {
        case MorseKind::Cup: {
          // insert right after the image of the columns left of the pair
          int p = m_.slices[s].pos;
          int idx = insert_index(b, s, p);
          b.cup(resolve(e.left, s), resolve(e.right, s), e.left_up, idx);
          break;
        }
        case MorseKind::Cap:
          b.cap(resolve(e.left, s), resolve(e.right, s));
          break;
        case MorseKind::Cross:
          b.cross(resolve(e.alpha, s), resolve(e.beta, s), e.sign);
          break;
        case MorseKind::VCross: {
          int l = resolve(e.alpha, s), r = resolve(e.beta, s);
          int i = b.index_of(l);
          if (i + 1 >= (int)b.cur.size() || b.cur[i + 1] != r)
            fail(Errc::Internal, "walk: vcross not adjacent");
          b.vcross_at(i);
          break;
        }
      }
    }
    if (finish) finish(b);
    if (!b.cur.empty()) fail(Errc::Internal, "walk: diagram did not close");
    return std::move(b.out);
  }

  std::function<void(MorseBuilder&)> finish;

private:
  // Insertion slot for an original cup at old position p: just after the
  // image of the p-1 old columns that were left of it, and before any
  // surgery-created zone columns parked at that boundary.
  int insert_index(const MorseBuilder& b, int slice, int p) const {
    const auto& old_cols = t_.cols[slice];
    std::set<int> left_old;
    for (int i = 0; i < p - 1 && i < (int)old_cols.size(); ++i) {
      int tag = resolve(old_cols[i], slice);
      left_old.insert(tag);
    }
    int idx = 0;
    size_t seen = 0;
    while (idx < (int)b.cur.size() && seen < left_old.size()) {
      if (left_old.count(b.cur[idx])) ++seen;
      ++idx;
    }
    return idx;
  }

  const MorsePresentation& m_;
  const Trace& t_;
};

int find_arc_piece(const Trace& t, const UpArc& arc) {
  for (const auto& p : t.pieces) {
    if (!p.up || p.cup_slice != arc.top_slice) continue;
    return p.id;
  }
  // maybe the caller points at a closure arc or a down strand
  for (const auto& p : t.pieces)
    if (p.cup_slice == arc.top_slice && p.up && p.is_return)
      fail(Errc::NotFreeArc, "arc at slice " + std::to_string(arc.top_slice) + " is a closure arc");
  fail(Errc::BadSite, "no up-arc with cup at slice " + std::to_string(arc.top_slice));
}

} // namespace

std::vector<UpArc> find_up_arcs(const MorsePresentation& m) {
  Trace t = trace_diagram(m);
  std::vector<UpArc> out;
  for (auto& u : up_arc_pieces(t)) out.push_back(u.arc);
  return out;
}

MorsePresentation eliminate_up_arc(const MorsePresentation& m, const UpArc& arc) {
  Trace t = trace_diagram(m);
  int a = -1;
  for (const auto& p : t.pieces)
    if (p.up && p.cup_slice == arc.top_slice && !p.is_return) a = p.id;
  if (a < 0) a = find_arc_piece(t, arc);
  const TracedPiece& ap = t.pieces[a];
  if (ap.is_return) fail(Errc::NotFreeArc, "closure arcs are not eliminated");
  for (int s : ap.event_slices)
    if (t.events[s].kind == MorseKind::Cross)
      fail(Errc::NotFreeArc, "arc passes a crossing box at slice " + std::to_string(s));

  int dY = ap.cup_partner, dX = ap.cap_partner;
  int sy = ap.cup_slice, sx = ap.cap_slice;
  int DT = (int)t.pieces.size() + 1, RET = DT + 1;

  RebuildWalk walk(m, t);
  for (const auto& p : t.pieces)
    if (p.is_return) walk.zone_tags.insert(p.id);
  walk.zone_tags.insert(RET);
  for (int s : ap.event_slices) walk.drop.insert(s);

  // number of columns left of dY just below its cup, the arc itself excluded
  int target_left = 0;
  for (int tag : t.cols[sy + 1]) {
    if (tag == dY) break;
    if (tag != a) ++target_left;
  }

  walk.surgery[sy] = [&, target_left](MorseBuilder& b) {
    int zs = RebuildWalk::zone_start(b, walk.zone_tags);
    b.cup(DT, RET, false, zs);
    b.fan_left_to(DT, target_left);
    // the feeder continues as the down strand the cup used to create
    b.cur[b.index_of(DT)] = dY;
  };
  walk.surgery[sx] = [&](MorseBuilder& b) {
    b.fan_right_until(dX, RET);
    b.cap(dX, RET);
  };
  MorsePresentation out = walk.run();
  validate_morse(out);
  return out;
}

MorsePresentation braid_crossing_box(const MorsePresentation& m, int crossing_slice) {
  Trace t = trace_diagram(m);
  if (crossing_slice < 0 || crossing_slice >= (int)t.events.size())
    fail(Errc::BadSite, "no crossing at slice " + std::to_string(crossing_slice));
  const TracedEvent& e = t.events[crossing_slice];
  if (e.kind != MorseKind::Cross && e.kind != MorseKind::VCross)
    fail(Errc::BadSite, "slice " + std::to_string(crossing_slice) + " is not a crossing");
  int alpha = e.alpha, beta = e.beta;
  bool alpha_up = t.pieces[alpha].up, beta_up = t.pieces[beta].up;
  if (!alpha_up && !beta_up) fail(Errc::NoUpArc, "both strands already head downward");

  const int sc = crossing_slice;
  int next = (int)t.pieces.size() + 1;
  // fresh tags
  int A_HI = next++, B_HI = next++;       // upper halves of split strands
  int FEED_A = next++, RET_A = next++, DLOW_A = next++;
  int FEED_B = next++, RET_B = next++, DLOW_B = next++;

  RebuildWalk walk(m, t);
  for (const auto& p : t.pieces)
    if (p.is_return) walk.zone_tags.insert(p.id);

  walk.resolve = [&](int piece, int slice) {
    if (piece == alpha && alpha_up && slice < sc) return A_HI;
    if (piece == beta && beta_up && slice < sc) return B_HI;
    return piece;
  };

  CrossSign sign = e.sign;
  bool one_up = alpha_up != beta_up;
  if (one_up && e.kind == MorseKind::Cross && sign != CrossSign::Flat)
    sign = sign == CrossSign::Pos ? CrossSign::Neg : CrossSign::Pos;

  auto emit_box = [&](MorseBuilder& b, int left, int right) {
    if (e.kind == MorseKind::VCross) {
      int i = b.index_of(left);
      if (b.cur[i + 1] != right) fail(Errc::Internal, "box: strands not adjacent");
      b.vcross_at(i);
    } else {
      b.cross(left, right, sign);
    }
  };

  // Insertion slot matching the box's old left neighbourhood, for dropping
  // the lower strand halves back where the box columns used to be.
  auto idx_after_box_left = [&t, &m, sc](MorseBuilder& b) {
    std::set<int> left;
    const auto& oc = t.cols[sc];
    for (int i = 0; i < m.slices[sc].pos - 1 && i < (int)oc.size(); ++i) left.insert(oc[i]);
    int idx = 0;
    size_t seen = 0;
    while (idx < (int)b.cur.size() && seen < left.size()) {
      if (left.count(b.cur[idx])) ++seen;
      ++idx;
    }
    return idx;
  };

  walk.surgery[sc] = [&](MorseBuilder& b) {
    if (one_up && beta_up) {
      // feeder takes over the NW slot, alpha swings to NE
      int zs = RebuildWalk::zone_start(b, walk.zone_tags);
      walk.zone_tags.insert(RET_B);
      b.cup(FEED_B, RET_B, false, zs);
      b.fan_left_past(FEED_B, alpha);
      emit_box(b, FEED_B, alpha);
      b.cap(FEED_B, B_HI);
      b.cup(beta, DLOW_B, true, b.index_of(alpha));
      b.fan_right_until(DLOW_B, RET_B);
      b.cap(DLOW_B, RET_B);
    } else if (one_up && alpha_up) {
      // beta keeps heading down and moves to the NW slot
      int i = b.index_of(A_HI);
      if (b.cur[i + 1] != beta) fail(Errc::Internal, "box: unexpected layout");
      b.vcross_at(i); // alpha's upper half swings right across beta
      int zs = RebuildWalk::zone_start(b, walk.zone_tags);
      walk.zone_tags.insert(RET_A);
      b.cup(FEED_A, RET_A, false, zs);
      b.fan_left_past(FEED_A, A_HI);
      emit_box(b, beta, FEED_A);
      b.vcross_at(b.index_of(beta)); // beta passes the rerouted upper half
      b.cap(FEED_A, A_HI);
      b.cup(alpha, DLOW_A, true, b.index_of(beta) + 1);
      b.fan_right_until(DLOW_A, RET_A);
      b.cap(DLOW_A, RET_A);
    } else {
      // both strands upward: half-turn, two new pairs
      int zs = RebuildWalk::zone_start(b, walk.zone_tags);
      walk.zone_tags.insert(RET_A);
      b.cup(FEED_A, RET_A, false, zs);
      zs = RebuildWalk::zone_start(b, walk.zone_tags);
      walk.zone_tags.insert(RET_B);
      b.cup(FEED_B, RET_B, false, zs); // nests inside RET_A
      b.fan_left_past(FEED_A, A_HI);
      b.fan_left_past(FEED_B, A_HI);
      emit_box(b, FEED_A, FEED_B);
      b.cap(FEED_A, A_HI);
      b.cap(FEED_B, B_HI);
      b.cup(beta, DLOW_B, true, idx_after_box_left(b));
      b.fan_right_until(DLOW_B, RET_B);
      b.cap(DLOW_B, RET_B);
      b.cup(alpha, DLOW_A, true, b.index_of(beta) + 1);
      b.fan_right_until(DLOW_A, RET_A);
      b.cap(DLOW_A, RET_A);
    }
  };

  MorsePresentation out = walk.run();
  validate_morse(out);
  return out;
}

namespace {

// --- read-off ------------------------------------------------------------

struct PendingSlot {
  int return_piece;
  int entering; // down piece that materializes out of this slot
};

BraidWord read_off(const MorsePresentation& m) {
  Trace t = trace_diagram(m);
  for (const auto& p : t.pieces)
    if (p.up && !p.is_return)
      fail(Errc::MalformedDiagram, "diagram is not in braided form (up-arc survives)");

  int n = 0;
  for (const auto& p : t.pieces)
    if (!p.up) ++n;
  if (n == 0) fail(Errc::MalformedDiagram, "empty diagram");

  bool flat = false;
  for (const auto& e : t.events)
    if (e.kind == MorseKind::Cross && e.sign == CrossSign::Flat) flat = true;

  // returns ordered by cup slice; feeder of return r enters at its rank
  std::vector<int> returns;
  for (const auto& p : t.pieces)
    if (p.up) returns.push_back(p.id);
  std::sort(returns.begin(), returns.end(), [&](int a, int b) {
    return t.pieces[a].cup_slice < t.pieces[b].cup_slice;
  });

  std::map<int, int> top_position; // down piece -> its entry position (1-based)
  struct Entry {
    bool active;
    int piece;  // active: the diagram piece; inactive: spent piece or -1
    int ret;    // inactive: which return the slot belongs to
  };
  std::vector<Entry> bpos;
  for (size_t i = 0; i < returns.size(); ++i) {
    int r = returns[i];
    top_position[t.pieces[r].cup_partner] = (int)i + 1;
    bpos.push_back({false, -1, r});
  }

  BraidWord w{n, flat ? BraidCategory::Flat : BraidCategory::Virtual, {}};
  auto emit_v = [&](int j) { w.letters.push_back(vgen(j)); };

  auto active_count = [&]() {
    int a = 0;
    for (auto& e : bpos)
      if (e.active) ++a;
    return a;
  };

  for (int s = 0; s < (int)t.events.size(); ++s) {
    const TracedEvent& e = t.events[s];
    switch (e.kind) {
      case MorseKind::Cup: {
        int d = t.pieces[e.left].up ? e.right : e.left;
        int r = t.pieces[e.left].up ? e.left : e.right;
        int X = -1;
        for (size_t i = 0; i < bpos.size(); ++i)
          if (!bpos[i].active && bpos[i].piece == -1 && bpos[i].ret == r) X = (int)i + 1;
        if (X < 0) fail(Errc::Internal, "read-off: feeder slot missing");
        // diagram target: 1 + number of down columns left of d just below s
        int tpos = 1;
        for (int tag : t.cols[s + 1]) {
          if (tag == d) break;
          if (!t.pieces[tag].up) ++tpos;
        }
        Entry entry{true, d, -1};
        bpos.erase(bpos.begin() + (X - 1));
        bpos.insert(bpos.begin() + (tpos - 1), entry);
        for (int j = X - 1; j >= tpos; --j) emit_v(j);
        break;
      }
      case MorseKind::Cap: {
        int d = t.pieces[e.left].up ? e.right : e.left;
        int r = t.pieces[e.left].up ? e.left : e.right;
        int q = -1;
        for (size_t i = 0; i < bpos.size(); ++i)
          if (bpos[i].active && bpos[i].piece == d) q = (int)i + 1;
        if (q < 0) fail(Errc::Internal, "read-off: active piece missing");
        int a = active_count();
        for (int j = q; j <= a - 1; ++j) emit_v(j);
        Entry entry{false, d, r};
        bpos.erase(bpos.begin() + (q - 1));
        bpos.insert(bpos.begin() + (a - 1), entry);
        break;
      }
      case MorseKind::Cross:
      case MorseKind::VCross: {
        int pos = -1;
        for (size_t i = 0; i < bpos.size(); ++i)
          if (bpos[i].active && bpos[i].piece == e.alpha) pos = (int)i + 1;
        if (pos < 0 || pos >= (int)bpos.size() || !bpos[pos].active ||
            bpos[pos].piece != e.beta)
          fail(Errc::Internal, "read-off: crossing strands not adjacent");
        if (e.kind == MorseKind::VCross) w.letters.push_back(vgen(pos));
        else if (e.sign == CrossSign::Flat) w.letters.push_back(cgen(pos));
        else if (e.sign == CrossSign::Pos) w.letters.push_back(sigma(pos));
        else w.letters.push_back(sigma_inv(pos));
        std::swap(bpos[pos - 1], bpos[pos]);
        break;
      }
    }
  }

  // Final sort: the strand that died into return r must sit at the entry
  // position of r's cup partner, realizing the closure wiring.
  std::vector<int> want(bpos.size(), 0);
  for (size_t i = 0; i < bpos.size(); ++i) {
    if (bpos[i].active || bpos[i].piece == -1)
      fail(Errc::Internal, "read-off: strand never parked");
    want[i] = top_position.at(t.pieces[bpos[i].ret].cup_partner);
  }
  for (int target = 1; target <= (int)want.size(); ++target) {
    int at = -1;
    for (int i = target - 1; i < (int)want.size(); ++i)
      if (want[i] == target) { at = i; break; }
    if (at < 0) fail(Errc::Internal, "read-off: wiring permutation broken");
    for (int i = at; i > target - 1; --i) {
      std::swap(want[i], want[i - 1]);
      emit_v(i);
    }
  }
  validate(w);
  return w;
}

BraidWord braid_impl(const MorsePresentation& start, const std::function<size_t(size_t)>& pick) {
  MorsePresentation cur = start;
  validate_morse(cur);
  // crossing boxes first (Remark: their braidings are independent)
  for (;;) {
    Trace t = trace_diagram(cur);
    int box = -1;
    for (int s = 0; s < (int)t.events.size(); ++s) {
      const TracedEvent& e = t.events[s];
      if (e.kind != MorseKind::Cross) continue;
      if (t.pieces[e.alpha].up || t.pieces[e.beta].up) { box = s; break; }
    }
    if (box < 0) break;
    cur = braid_crossing_box(cur, box);
  }
  // then free up-arcs to a fixpoint
  size_t guard = cur.slices.size() * 4 + 64;
  for (;;) {
    auto arcs = find_up_arcs(cur);
    if (arcs.empty()) break;
    if (guard-- == 0) fail(Errc::Internal, "braiding did not terminate");
    size_t choice = pick ? pick(arcs.size()) % arcs.size() : 0;
    cur = eliminate_up_arc(cur, arcs[choice]);
  }
  return read_off(cur);
}

} // namespace

BraidWord braid(const MorsePresentation& m) { return braid_impl(m, nullptr); }

BraidWord braid_with_order(const MorsePresentation& m,
                           const std::function<size_t(size_t)>& pick) {
  return braid_impl(m, pick);
}

} // namespace vb
