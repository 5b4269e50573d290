#include "core/moves.hpp"

#include <json.hpp>

namespace vb {

using nlohmann::json;

namespace {

bool is_classical_cat(BraidCategory c) { return c != BraidCategory::Flat; }

GenKind real_kind_for(BraidCategory cat) {
  return cat == BraidCategory::Flat ? GenKind::C : GenKind::SigmaPos;
}

} // namespace

BraidWord conjugate(const BraidWord& w, Generator g) {
  validate(w);
  if (g.index < 1 || g.index > w.strands - 1)
    fail(Errc::IndexOutOfRange, "conjugating letter " + g.str());
  if (!letter_valid_for(g.kind, w.category))
    fail(Errc::CategoryViolation,
         "conjugation by " + g.str() + " in category " + category_name(w.category));
  BraidWord r{w.strands, w.category, {}};
  r.letters.reserve(w.letters.size() + 2);
  r.letters.push_back(g.inverse());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
  r.letters.push_back(g);
  return r;
}

BraidWord stabilize_right(const BraidWord& w, StabKind kind) {
  validate(w);
  bool flat = w.category == BraidCategory::Flat;
  Generator g{GenKind::V, w.strands};
  switch (kind) {
    case StabKind::Virtual: break;
    case StabKind::RealPos:
      if (flat) fail(Errc::CategoryViolation, "real stabilization in flat category");
      g.kind = GenKind::SigmaPos;
      break;
    case StabKind::RealNeg:
      if (flat) fail(Errc::CategoryViolation, "real stabilization in flat category");
      g.kind = GenKind::SigmaNeg;
      break;
    case StabKind::Flat:
      if (!flat) fail(Errc::CategoryViolation, "flat stabilization outside flat category");
      g.kind = GenKind::C;
      break;
  }
  BraidWord r = include_right(w);
  r.letters.push_back(g);
  return r;
}

std::optional<BraidWord> destabilize_right(const BraidWord& w) {
  if (w.letters.empty() || w.strands < 2) return std::nullopt;
  const Generator& last = w.letters.back();
  if (last.index != w.strands - 1) return std::nullopt;
  for (size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (w.letters[i].index == w.strands - 1) return std::nullopt;
  BraidWord r{w.strands - 1, w.category,
              {w.letters.begin(), w.letters.end() - 1}};
  return r;
}

BraidWord thread_right_under(const BraidWord& w, int sign) {
  validate(w);
  if (w.category == BraidCategory::Welded || w.category == BraidCategory::Unrestricted)
    fail(Errc::CategoryViolation,
         "threaded moves vanish in the " + std::string(category_name(w.category)) + " category");
  if (w.strands < 2) fail(Errc::TooFewStrands, "right threading needs n >= 2");
  int n = w.strands;
  BraidWord r = include_right(w);
  if (w.category == BraidCategory::Flat) {
    r.letters.push_back(cgen(n));
    r.letters.push_back(vgen(n - 1));
    r.letters.push_back(cgen(n));
  } else {
    r.letters.push_back(sign > 0 ? sigma_inv(n) : sigma(n));
    r.letters.push_back(vgen(n - 1));
    r.letters.push_back(sign > 0 ? sigma(n) : sigma_inv(n));
  }
  return r;
}

BraidWord thread_left_under(const BraidWord& w) {
  validate(w);
  if (w.category == BraidCategory::Welded || w.category == BraidCategory::Unrestricted)
    fail(Errc::CategoryViolation,
         "threaded moves vanish in the " + std::string(category_name(w.category)) + " category");
  if (w.strands < 2) fail(Errc::TooFewStrands, "left threading needs n >= 2");
  int n = w.strands;
  BraidWord r = include_right(w);
  bool flat = w.category == BraidCategory::Flat;
  Generator x = flat ? cgen(n - 1) : sigma(n - 1);
  Generator xinv = flat ? cgen(n - 1) : sigma_inv(n - 1);
  r.letters.push_back(vgen(n));
  r.letters.push_back(vgen(n - 1));
  r.letters.push_back(x);
  r.letters.push_back(vgen(n));
  r.letters.push_back(xinv);
  r.letters.push_back(vgen(n - 1));
  r.letters.push_back(vgen(n));
  return r;
}

BraidWord lv_insert(const BraidWord& w, size_t gap, int strand, LvKind kind, LvSide side) {
  validate(w);
  if (gap > w.letters.size())
    fail(Errc::BadSite, "gap " + std::to_string(gap) + " out of range");
  if (strand < 1 || strand > w.strands)
    fail(Errc::BadSite, "strand " + std::to_string(strand) + " out of range");
  int n = w.strands;
  BraidWord r{n + 1, w.category, {}};
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + gap);
  for (int i = strand; i <= n; ++i) r.letters.push_back(vgen(i));
  if (kind != LvKind::Basic) {
    Generator x = vgen(n);
    if (kind == LvKind::RealPos)
      x = w.category == BraidCategory::Flat ? cgen(n) : sigma(n);
    else if (kind == LvKind::RealNeg)
      x = w.category == BraidCategory::Flat ? cgen(n) : sigma_inv(n);
    if (side == LvSide::Right) {
      r.letters.push_back(vgen(n));
      r.letters.push_back(x);
    } else {
      r.letters.push_back(x);
      r.letters.push_back(vgen(n));
    }
  }
  for (int i = n - 1; i >= strand; --i) r.letters.push_back(vgen(i));
  r.letters.insert(r.letters.end(), w.letters.begin() + gap, w.letters.end());
  validate(r);
  return r;
}

namespace {

std::pair<BraidWord, BraidWord> exchange_pair(const BraidWord& b1, const BraidWord& b2,
                                              bool left) {
  if (b1.strands != b2.strands)
    fail(Errc::StrandMismatch,
         std::to_string(b1.strands) + " vs " + std::to_string(b2.strands));
  if (b1.category != b2.category) fail(Errc::CategoryMismatch, "exchange across categories");
  validate(b1);
  validate(b2);
  int n = b1.strands;
  GenKind rk = real_kind_for(b1.category);
  BraidWord p1{n + 1, b1.category, {}}, p2 = p1;
  auto push = [&](BraidWord& w, const BraidWord& part) {
    const BraidWord shifted = left ? shift_left(part) : include_right(part);
    w.letters.insert(w.letters.end(), shifted.letters.begin(), shifted.letters.end());
  };
  int idx = left ? 1 : n;
  push(p1, b1);
  p1.letters.push_back(rk == GenKind::C ? cgen(idx) : sigma_inv(idx));
  push(p1, b2);
  p1.letters.push_back(rk == GenKind::C ? cgen(idx) : sigma(idx));
  push(p2, b1);
  p2.letters.push_back(vgen(idx));
  push(p2, b2);
  p2.letters.push_back(vgen(idx));
  validate(p1);
  validate(p2);
  return {p1, p2};
}

} // namespace

std::pair<BraidWord, BraidWord> exchange_right(const BraidWord& b1, const BraidWord& b2) {
  return exchange_pair(b1, b2, false);
}

std::pair<BraidWord, BraidWord> exchange_left(const BraidWord& b1, const BraidWord& b2) {
  return exchange_pair(b1, b2, true);
}

namespace {

[[noreturn]] void inapplicable(const std::string& what) {
  fail(Errc::ScriptInapplicable, what);
}

BraidWord strip_thread_right(const BraidWord& w, int sign) {
  int m = w.strands;
  if (m < 3 || w.letters.size() < 3) inapplicable("word too short for a threaded suffix");
  bool flat = w.category == BraidCategory::Flat;
  Generator a = flat ? cgen(m - 1) : (sign > 0 ? sigma_inv(m - 1) : sigma(m - 1));
  Generator b = vgen(m - 2);
  Generator c = flat ? cgen(m - 1) : (sign > 0 ? sigma(m - 1) : sigma_inv(m - 1));
  size_t k = w.letters.size();
  if (w.letters[k - 3] != a || w.letters[k - 2] != b || w.letters[k - 1] != c)
    inapplicable("suffix is not a right threading");
  for (size_t i = 0; i + 3 < k; ++i)
    if (w.letters[i].index >= m - 1) inapplicable("prefix leaves VB_{n}");
  BraidWord r{m - 1, w.category, {w.letters.begin(), w.letters.end() - 3}};
  return r;
}

BraidWord strip_thread_left(const BraidWord& w) {
  int m = w.strands;
  if (m < 3 || w.letters.size() < 7) inapplicable("word too short for a left-threaded suffix");
  BraidWord probe{m - 1, w.category, {}};
  BraidWord expect = thread_left_under(probe);
  size_t k = w.letters.size();
  for (size_t i = 0; i < 7; ++i)
    if (w.letters[k - 7 + i] != expect.letters[i]) inapplicable("suffix is not a left threading");
  for (size_t i = 0; i + 7 < k; ++i)
    if (w.letters[i].index >= m - 1) inapplicable("prefix leaves VB_{n}");
  BraidWord r{m - 1, w.category, {w.letters.begin(), w.letters.end() - 7}};
  return r;
}

BraidWord apply_exchange(const BraidWord& w, const MoveStep& st, bool left) {
  int m = w.strands;
  size_t need = st.split1 + st.split2 + 2;
  if (w.letters.size() != need) inapplicable("exchange split does not cover the word");
  GenKind rk = real_kind_for(w.category);
  int idx = left ? 1 : m - 1;
  Generator r1 = rk == GenKind::C ? cgen(idx) : sigma_inv(idx);
  Generator r2 = rk == GenKind::C ? cgen(idx) : sigma(idx);
  Generator v1 = vgen(idx);
  Generator from1 = st.forward ? r1 : v1, from2 = st.forward ? r2 : v1;
  Generator to1 = st.forward ? v1 : r1, to2 = st.forward ? v1 : r2;
  size_t p1 = st.split1, p2 = st.split1 + 1 + st.split2;
  if (w.letters[p1] != from1 || w.letters[p2] != from2)
    inapplicable("exchange crossings not found at the split");
  auto in_box = [&](const Generator& g, size_t at) {
    if (at == p1 || at == p2) return true;
    return left ? g.index >= 2 : g.index <= m - 2;
  };
  for (size_t i = 0; i < w.letters.size(); ++i)
    if (!in_box(w.letters[i], i))
      inapplicable("exchange boxes use the moving strand");
  BraidWord r = w;
  r.letters[p1] = to1;
  r.letters[p2] = to2;
  return r;
}

} // namespace

BraidWord apply_step(const BraidWord& w, const MoveStep& st) {
  switch (st.kind) {
    case MoveStep::Kind::Relation: {
      auto rel = find_relation(w.category, w.strands, st.relation);
      if (!rel) inapplicable("unknown relation " + st.relation);
      return apply_relation(w, *rel, st.pos,
                            st.forward ? Direction::Forward : Direction::Backward);
    }
    case MoveStep::Kind::FreeCancel: {
      if (st.forward) {
        if (st.pos + 1 >= w.letters.size() ||
            w.letters[st.pos] != st.gen || w.letters[st.pos + 1] != st.gen.inverse())
          inapplicable("no cancelling pair at position " + std::to_string(st.pos));
        BraidWord r = w;
        r.letters.erase(r.letters.begin() + st.pos, r.letters.begin() + st.pos + 2);
        return r;
      }
      if (st.pos > w.letters.size()) inapplicable("insert position out of range");
      BraidWord r = w;
      r.letters.insert(r.letters.begin() + st.pos, {st.gen, st.gen.inverse()});
      validate(r);
      return r;
    }
    case MoveStep::Kind::Conjugate:
      return conjugate(w, st.forward ? st.gen : st.gen.inverse());
    case MoveStep::Kind::Stabilize: {
      if (st.forward) return stabilize_right(w, st.stab);
      auto r = destabilize_right(w);
      if (!r) inapplicable("word is not a right stabilization");
      GenKind want;
      switch (st.stab) {
        case StabKind::RealPos: want = GenKind::SigmaPos; break;
        case StabKind::RealNeg: want = GenKind::SigmaNeg; break;
        case StabKind::Virtual: want = GenKind::V; break;
        case StabKind::Flat: want = GenKind::C; break;
      }
      if (w.letters.back().kind != want) inapplicable("stabilizing letter of the wrong kind");
      return *r;
    }
    case MoveStep::Kind::ThreadRight:
      return st.forward ? thread_right_under(w, st.sign) : strip_thread_right(w, st.sign);
    case MoveStep::Kind::ThreadLeft:
      return st.forward ? thread_left_under(w) : strip_thread_left(w);
    case MoveStep::Kind::ExchangeRight:
      return apply_exchange(w, st, false);
    case MoveStep::Kind::ExchangeLeft:
      return apply_exchange(w, st, true);
  }
  fail(Errc::Internal, "unhandled step kind");
}

void validate_path(const MovePath& path) {
  BraidWord cur = path.start;
  validate(cur);
  size_t at = 0;
  for (const auto& st : path.steps) {
    try {
      cur = apply_step(cur, st);
    } catch (const Error& e) {
      fail(Errc::ScriptInapplicable,
           "step " + std::to_string(at) + " failed: " + e.what());
    }
    ++at;
  }
  if (cur != path.end)
    fail(Errc::ScriptInapplicable,
         "endpoint mismatch: replay gives " + print_word(cur) + " expected " +
             print_word(path.end));
}

namespace {

const char* step_kind_name(MoveStep::Kind k) {
  switch (k) {
    case MoveStep::Kind::Relation: return "relation";
    case MoveStep::Kind::FreeCancel: return "free-cancel";
    case MoveStep::Kind::Conjugate: return "conjugate";
    case MoveStep::Kind::Stabilize: return "stabilize";
    case MoveStep::Kind::ThreadRight: return "thread-right";
    case MoveStep::Kind::ThreadLeft: return "thread-left";
    case MoveStep::Kind::ExchangeRight: return "exchange-right";
    case MoveStep::Kind::ExchangeLeft: return "exchange-left";
  }
  return "?";
}

} // namespace

std::string path_to_json(const MovePath& path) {
  json j;
  j["format"] = "vbraid-1";
  j["start"] = print_word(path.start);
  j["end"] = print_word(path.end);
  json steps = json::array();
  for (const auto& st : path.steps) {
    json s;
    s["move"] = step_kind_name(st.kind);
    s["forward"] = st.forward;
    switch (st.kind) {
      case MoveStep::Kind::Relation:
        s["relation"] = st.relation;
        s["pos"] = st.pos;
        break;
      case MoveStep::Kind::FreeCancel:
        s["pos"] = st.pos;
        s["letter"] = st.gen.str();
        break;
      case MoveStep::Kind::Conjugate: s["letter"] = st.gen.str(); break;
      case MoveStep::Kind::Stabilize:
        s["kind"] = st.stab == StabKind::RealPos ? "real+"
                    : st.stab == StabKind::RealNeg ? "real-"
                    : st.stab == StabKind::Virtual ? "virtual" : "flat";
        break;
      case MoveStep::Kind::ThreadRight: s["sign"] = st.sign; break;
      case MoveStep::Kind::ThreadLeft: break;
      case MoveStep::Kind::ExchangeRight:
      case MoveStep::Kind::ExchangeLeft:
        s["b1_len"] = st.split1;
        s["b2_len"] = st.split2;
        break;
    }
    steps.push_back(s);
  }
  j["steps"] = steps;
  return j.dump();
}

} // namespace vb
