#include "core/morse.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace vb {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(size_t slice, const std::string& what) {
  fail(Errc::MalformedDiagram, "slice " + std::to_string(slice) + ": " + what);
}

} // namespace

Trace trace_diagram(const MorsePresentation& m) {
  Trace t;
  t.events.resize(m.slices.size());
  std::vector<int> cur; // piece ids left to right
  auto up = [&](int id) { return t.pieces[id].up; };
  bool saw_flat = false, saw_signed = false;

  t.cols.push_back(cur);
  for (size_t s = 0; s < m.slices.size(); ++s) {
    const MorseEvent& e = m.slices[s];
    TracedEvent& te = t.events[s];
    te.kind = e.kind;
    te.sign = e.sign;
    te.left_up = e.left_up;
    int w = (int)cur.size();
    switch (e.kind) {
      case MorseKind::Cup: {
        if (e.pos < 1 || e.pos > w + 1) malformed(s, "cup position out of range");
        int a = (int)t.pieces.size();
        t.pieces.push_back({a, e.left_up, (int)s, -1, -1, -1, {}, false});
        int b = (int)t.pieces.size();
        t.pieces.push_back({b, !e.left_up, (int)s, -1, -1, -1, {}, false});
        t.pieces[a].cup_partner = b;
        t.pieces[b].cup_partner = a;
        cur.insert(cur.begin() + (e.pos - 1), {a, b});
        te.left = a;
        te.right = b;
        break;
      }
      case MorseKind::Cap: {
        if (e.pos < 1 || e.pos + 1 > w) malformed(s, "cap position out of range");
        int a = cur[e.pos - 1], b = cur[e.pos];
        if (up(a) == up(b)) malformed(s, "cap joins strands of equal orientation");
        t.pieces[a].cap_slice = (int)s;
        t.pieces[b].cap_slice = (int)s;
        t.pieces[a].cap_partner = b;
        t.pieces[b].cap_partner = a;
        cur.erase(cur.begin() + (e.pos - 1), cur.begin() + (e.pos + 1));
        te.left = a;
        te.right = b;
        break;
      }
      case MorseKind::Cross:
      case MorseKind::VCross: {
        if (e.pos < 1 || e.pos + 1 > w) malformed(s, "crossing position out of range");
        if (e.kind == MorseKind::Cross) {
          if (e.sign == CrossSign::Flat) saw_flat = true; else saw_signed = true;
        }
        int a = cur[e.pos - 1], b = cur[e.pos];
        te.alpha = a;
        te.beta = b;
        t.pieces[a].event_slices.push_back((int)s);
        t.pieces[b].event_slices.push_back((int)s);
        std::swap(cur[e.pos - 1], cur[e.pos]);
        break;
      }
    }
    t.cols.push_back(cur);
  }
  if (!cur.empty()) malformed(m.slices.size(), "diagram does not close (final width nonzero)");
  if (saw_flat && saw_signed)
    malformed(m.slices.size(), "mixes flat and signed classical crossings");

  // Return zone: event-free up pieces with only zone columns to their right,
  // at every boundary they span. Iterate to a fixpoint.
  std::vector<bool> cand(t.pieces.size());
  for (auto& p : t.pieces) cand[p.id] = p.up && p.event_slices.empty();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t b = 0; b < t.cols.size(); ++b) {
      bool zone = true;
      for (auto it = t.cols[b].rbegin(); it != t.cols[b].rend(); ++it) {
        if (!zone && cand[*it]) continue;
        if (!cand[*it]) zone = false;
        else continue;
        // nothing: zone already false
      }
      // second pass: demote candidates that have a non-candidate to the right
      bool all_right_ok = true;
      for (auto it = t.cols[b].rbegin(); it != t.cols[b].rend(); ++it) {
        if (!cand[*it]) all_right_ok = false;
        else if (!all_right_ok) {
          cand[*it] = false;
          changed = true;
        }
      }
    }
  }
  for (auto& p : t.pieces) p.is_return = cand[p.id];
  return t;
}

void validate_morse(const MorsePresentation& m) { (void)trace_diagram(m); }

namespace {

struct Dir {
  int x, y;
};

// Screen coordinates: x to the right, y downward.
Dir strand_dir(bool alpha, bool downward) {
  if (alpha) return downward ? Dir{1, 1} : Dir{-1, -1};
  return downward ? Dir{-1, 1} : Dir{1, -1};
}

} // namespace

GaussCode gauss_from_morse(const MorsePresentation& m) {
  Trace t = trace_diagram(m);
  // Assign crossing ids to classical Cross events in slice order.
  std::map<int, int> cross_id;
  int next_id = 1;
  for (size_t s = 0; s < t.events.size(); ++s)
    if (t.events[s].kind == MorseKind::Cross) cross_id[(int)s] = next_id++;

  GaussCode g;
  std::vector<bool> piece_done(t.pieces.size(), false);
  std::vector<std::pair<int, VirtualIncidence>> vhits; // keyed by slice

  for (auto& start : t.pieces) {
    if (piece_done[start.id] || start.up) continue;
    // new component, traverse along the flow starting at this down piece's cup
    std::vector<Visit> comp;
    int comp_index = (int)g.components.size();
    int pid = start.id;
    do {
      const TracedPiece& p = t.pieces[pid];
      piece_done[pid] = true;
      // events in flow order: down pieces top-to-bottom, up pieces bottom-to-top
      std::vector<int> evs = p.event_slices;
      if (p.up) std::reverse(evs.begin(), evs.end());
      for (int s : evs) {
        const TracedEvent& e = t.events[s];
        bool is_alpha = e.alpha == pid;
        if (e.kind == MorseKind::VCross) {
          vhits.push_back({s, {comp_index, (int)comp.size()}});
          continue;
        }
        if (e.sign == CrossSign::Flat) {
          comp.push_back({cross_id[s], Passage::Flat, 0});
          continue;
        }
        bool alpha_down = !t.pieces[e.alpha].up;
        bool beta_down = !t.pieces[e.beta].up;
        bool over = (e.sign == CrossSign::Pos) ? is_alpha : !is_alpha;
        Dir od = strand_dir(e.sign == CrossSign::Pos, e.sign == CrossSign::Pos ? alpha_down : beta_down);
        Dir ud = strand_dir(e.sign != CrossSign::Pos, e.sign == CrossSign::Pos ? beta_down : alpha_down);
        int det = od.x * ud.y - od.y * ud.x;
        comp.push_back({cross_id[s], over ? Passage::Over : Passage::Under, det > 0 ? 1 : -1});
      }
      // follow the curve: down piece ends at its cap, continuing into the up
      // partner; up piece ends at its cup, continuing into the down partner.
      pid = p.up ? t.pieces[pid].cup_partner : t.pieces[pid].cap_partner;
    } while (pid != start.id);
    g.components.push_back(std::move(comp));
  }
  // components made of up pieces only cannot exist (every curve alternates),
  // but lone oriented circles appear as one down + one up piece and are
  // caught above. Pair virtual incidences per slice.
  std::sort(vhits.begin(), vhits.end(), [](auto& a, auto& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < vhits.size(); i += 2) {
    if (vhits[i].first != vhits[i + 1].first)
      fail(Errc::Internal, "virtual crossing traced an odd number of times");
    g.virtual_record.push_back({vhits[i].second, vhits[i + 1].second});
  }
  return relabel_canonically(g);
}

namespace {

// Dir helper for strand_dir: alpha flag means the NW-SE strand. The over
// strand direction decides the orientation-sensitive sign; see closure().

void append_letters(MorsePresentation& m, const BraidWord& w, int offset) {
  for (const auto& g : w.letters) {
    MorseEvent e;
    e.pos = g.index + offset;
    switch (g.kind) {
      case GenKind::SigmaPos: e.kind = MorseKind::Cross; e.sign = CrossSign::Pos; break;
      case GenKind::SigmaNeg: e.kind = MorseKind::Cross; e.sign = CrossSign::Neg; break;
      case GenKind::C: e.kind = MorseKind::Cross; e.sign = CrossSign::Flat; break;
      case GenKind::V: e.kind = MorseKind::VCross; break;
    }
    m.slices.push_back(e);
  }
}

} // namespace

MorsePresentation render_closure(const BraidWord& w) {
  validate(w);
  MorsePresentation m;
  int n = w.strands;
  // cups at 1..n: columns become [b_1..b_n, r_n..r_1]
  for (int k = 1; k <= n; ++k) m.slices.push_back({MorseKind::Cup, k, CrossSign::Pos, false});
  append_letters(m, w, 0);
  for (int k = n; k >= 1; --k) m.slices.push_back({MorseKind::Cap, k, CrossSign::Pos, false});
  return m;
}

MorsePresentation render_closure_left(const BraidWord& w) {
  validate(w);
  MorsePresentation m;
  int n = w.strands;
  // cups at 1,2,..,n create [r_n..r_1, b_1..b_n]; braid letters shifted by n.
  for (int k = 1; k <= n; ++k) m.slices.push_back({MorseKind::Cup, k, CrossSign::Pos, true});
  append_letters(m, w, n);
  for (int k = n; k >= 1; --k) m.slices.push_back({MorseKind::Cap, k, CrossSign::Pos, false});
  return m;
}

MorsePresentation rotate_180(const MorsePresentation& m) {
  Trace t = trace_diagram(m);
  MorsePresentation out;
  for (int s = (int)m.slices.size() - 1; s >= 0; --s) {
    const MorseEvent& e = m.slices[s];
    int w_above = (int)t.cols[s].size();
    int w_below = (int)t.cols[s + 1].size();
    MorseEvent r;
    switch (e.kind) {
      case MorseKind::Cup:
        // becomes a cap; columns (p,p+1) of w_below map to (w_below-p, ...)
        r.kind = MorseKind::Cap;
        r.pos = w_below - e.pos;
        break;
      case MorseKind::Cap: {
        r.kind = MorseKind::Cup;
        r.pos = w_above - e.pos;
        // rotated left column = image of old right column with flipped flow
        int old_right = t.cols[s][e.pos];
        r.left_up = !t.pieces[old_right].up;
        break;
      }
      case MorseKind::Cross:
        r.kind = MorseKind::Cross;
        r.pos = w_above - e.pos;
        r.sign = e.sign; // the over diagonal maps to itself under a half turn
        break;
      case MorseKind::VCross:
        r.kind = MorseKind::VCross;
        r.pos = w_above - e.pos;
        break;
    }
    out.slices.push_back(r);
  }
  return out;
}

std::string morse_to_json(const MorsePresentation& m) {
  json j;
  j["format"] = "vbraid-1";
  json slices = json::array();
  for (const auto& e : m.slices) {
    json s;
    switch (e.kind) {
      case MorseKind::Cup:
        s["event"] = "cup";
        s["orient"] = e.left_up ? "ud" : "du";
        break;
      case MorseKind::Cap: s["event"] = "cap"; break;
      case MorseKind::Cross:
        s["event"] = "cross";
        s["sign"] = e.sign == CrossSign::Pos ? "+" : e.sign == CrossSign::Neg ? "-" : "flat";
        break;
      case MorseKind::VCross: s["event"] = "vcross"; break;
    }
    s["pos"] = e.pos;
    slices.push_back(s);
  }
  j["slices"] = slices;
  return j.dump(2);
}

MorsePresentation morse_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("bad morse JSON: ") + e.what());
  }
  MorsePresentation m;
  for (auto& s : j.at("slices")) {
    MorseEvent e;
    std::string kind = s.at("event").get<std::string>();
    e.pos = s.at("pos").get<int>();
    if (kind == "cup") {
      e.kind = MorseKind::Cup;
      std::string orient = s.value("orient", "du");
      if (orient != "du" && orient != "ud")
        fail(Errc::ParseError, "cup orient must be 'du' or 'ud'");
      e.left_up = orient == "ud";
    } else if (kind == "cap") {
      e.kind = MorseKind::Cap;
    } else if (kind == "cross") {
      e.kind = MorseKind::Cross;
      std::string sign = s.value("sign", "+");
      e.sign = sign == "+" ? CrossSign::Pos : sign == "-" ? CrossSign::Neg : CrossSign::Flat;
      if (sign != "+" && sign != "-" && sign != "flat")
        fail(Errc::ParseError, "cross sign must be +, - or flat");
    } else if (kind == "vcross") {
      e.kind = MorseKind::VCross;
    } else {
      fail(Errc::ParseError, "unknown event '" + kind + "'");
    }
    m.slices.push_back(e);
  }
  return m;
}

} // namespace vb
