#include "core/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace vb {

const char* category_name(BraidCategory c) {
  switch (c) {
    case BraidCategory::Virtual: return "virtual";
    case BraidCategory::Flat: return "flat";
    case BraidCategory::Welded: return "welded";
    case BraidCategory::Unrestricted: return "unrestricted";
  }
  return "?";
}

BraidCategory category_from_name(const std::string& s) {
  if (s == "virtual") return BraidCategory::Virtual;
  if (s == "flat") return BraidCategory::Flat;
  if (s == "welded") return BraidCategory::Welded;
  if (s == "unrestricted") return BraidCategory::Unrestricted;
  fail(Errc::ParseError, "unknown category '" + s + "'");
}

std::string Generator::str() const {
  switch (kind) {
    case GenKind::SigmaPos: return "s" + std::to_string(index);
    case GenKind::SigmaNeg: return "S" + std::to_string(index);
    case GenKind::V: return "v" + std::to_string(index);
    case GenKind::C: return "c" + std::to_string(index);
  }
  return "?";
}

bool letter_valid_for(GenKind kind, BraidCategory cat) {
  if (cat == BraidCategory::Flat) return kind == GenKind::V || kind == GenKind::C;
  return kind != GenKind::C;
}

void validate(const BraidWord& w) {
  if (w.strands < 1) fail(Errc::IndexOutOfRange, "strand count must be positive");
  for (const auto& g : w.letters) {
    if (g.index < 1 || g.index > w.strands - 1)
      fail(Errc::IndexOutOfRange,
           "letter " + g.str() + " out of range for n=" + std::to_string(w.strands));
    if (!letter_valid_for(g.kind, w.category))
      fail(Errc::CategoryViolation,
           "letter " + g.str() + " not valid in category " + category_name(w.category));
  }
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord r{w.strands, w.category, {}};
  r.letters.reserve(w.letters.size());
  for (const auto& g : w.letters) {
    if (!r.letters.empty() && r.letters.back() == g.inverse())
      r.letters.pop_back();
    else
      r.letters.push_back(g);
  }
  return r;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    fail(Errc::StrandMismatch,
         std::to_string(a.strands) + " vs " + std::to_string(b.strands));
  if (a.category != b.category)
    fail(Errc::CategoryMismatch,
         std::string(category_name(a.category)) + " vs " + category_name(b.category));
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord invert(const BraidWord& w) {
  BraidWord r{w.strands, w.category, {}};
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(it->inverse());
  return r;
}

BraidWord include_right(const BraidWord& w) {
  BraidWord r = w;
  r.strands += 1;
  return r;
}

BraidWord shift_left(const BraidWord& w) {
  BraidWord r{w.strands + 1, w.category, {}};
  r.letters.reserve(w.letters.size());
  for (const auto& g : w.letters) r.letters.push_back({g.kind, g.index + 1});
  return r;
}

int writhe(const BraidWord& w) {
  int s = 0;
  for (const auto& g : w.letters) {
    if (g.kind == GenKind::SigmaPos) ++s;
    else if (g.kind == GenKind::SigmaNeg) --s;
  }
  return s;
}

std::vector<int> underlying_permutation(const BraidWord& w) {
  std::vector<int> perm(w.strands);
  std::iota(perm.begin(), perm.end(), 1);
  // perm as positions: track where each top position flows; apply letters in
  // reading order to the position of each strand.
  for (int start = 1; start <= w.strands; ++start) {
    int p = start;
    for (const auto& g : w.letters) {
      if (p == g.index) p = g.index + 1;
      else if (p == g.index + 1) p = g.index;
    }
    perm[start - 1] = p;
  }
  return perm;
}

int cycle_count(const std::vector<int>& perm) {
  int n = (int)perm.size();
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j] - 1;
    }
  }
  return cycles;
}

BraidWord parse_word(const std::string& text) {
  BraidWord w;
  bool have_n = false;
  size_t offset = 0;
  std::vector<std::pair<std::string, size_t>> toks;
  {
    size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
      size_t start = i;
      while (i < text.size() && !std::isspace((unsigned char)text[i])) ++i;
      if (i > start) toks.emplace_back(text.substr(start, i - start), start);
    }
  }
  auto bad = [&](const std::string& t, size_t off) {
    fail(Errc::ParseError, "bad token '" + t + "' at byte offset " + std::to_string(off));
  };
  for (auto& [t, off] : toks) {
    offset = off;
    if (t.rfind("n=", 0) == 0) {
      try {
        w.strands = std::stoi(t.substr(2));
      } catch (...) { bad(t, off); }
      if (w.strands < 1) bad(t, off);
      have_n = true;
      continue;
    }
    if (t.rfind("cat=", 0) == 0) {
      w.category = category_from_name(t.substr(4));
      continue;
    }
    if (t.size() < 2) bad(t, off);
    GenKind kind;
    switch (t[0]) {
      case 's': kind = GenKind::SigmaPos; break;
      case 'S': kind = GenKind::SigmaNeg; break;
      case 'v': kind = GenKind::V; break;
      case 'c': kind = GenKind::C; break;
      default: bad(t, off); return w;
    }
    int idx = 0;
    for (size_t i = 1; i < t.size(); ++i) {
      if (!std::isdigit((unsigned char)t[i])) bad(t, off);
      idx = idx * 10 + (t[i] - '0');
    }
    if (idx < 1) bad(t, off);
    w.letters.push_back({kind, idx});
  }
  if (!have_n) fail(Errc::ParseError, "missing n=<strands> header at byte offset " + std::to_string(offset));
  validate(w);
  return w;
}

std::string print_word(const BraidWord& w) {
  std::ostringstream os;
  os << "n=" << w.strands;
  for (const auto& g : w.letters) os << ' ' << g.str();
  if (w.category != BraidCategory::Virtual) os << " cat=" << category_name(w.category);
  return os.str();
}

} // namespace vb
