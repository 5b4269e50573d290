#include "core/gauss.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace vb {

using nlohmann::json;

int GaussCode::crossing_count() const {
  std::set<int> ids;
  for (auto& comp : components)
    for (auto& v : comp) ids.insert(v.id);
  return (int)ids.size();
}

bool GaussCode::has_flat() const {
  for (auto& comp : components)
    for (auto& v : comp)
      if (v.passage == Passage::Flat) return true;
  return false;
}

int GaussCode::writhe() const {
  int tw = 0;
  for (auto& comp : components)
    for (auto& v : comp) tw += v.sign;
  return tw / 2; // every classical crossing is visited twice
}

GaussCode closure(const BraidWord& w) {
  validate(w);
  const int n = w.strands;
  // Assign ids to classical/flat letters and record virtual letters.
  std::vector<int> letter_id(w.letters.size(), 0);
  int next_id = 1;
  for (size_t i = 0; i < w.letters.size(); ++i)
    if (w.letters[i].kind != GenKind::V) letter_id[i] = next_id++;

  auto perm = underlying_permutation(w);
  std::vector<bool> used(n + 1, false);
  GaussCode g;
  std::vector<std::pair<int, VirtualIncidence>> vhits; // letter index -> incidence

  for (int start = 1; start <= n; ++start) {
    if (used[start]) continue;
    std::vector<Visit> comp;
    int comp_index = (int)g.components.size();
    int strand = start;
    do {
      used[strand] = true;
      int p = strand;
      for (size_t li = 0; li < w.letters.size(); ++li) {
        const auto& ggen = w.letters[li];
        if (p != ggen.index && p != ggen.index + 1) continue;
        bool from_left = (p == ggen.index);
        switch (ggen.kind) {
          case GenKind::SigmaPos:
            comp.push_back({letter_id[li], from_left ? Passage::Over : Passage::Under, +1});
            break;
          case GenKind::SigmaNeg:
            comp.push_back({letter_id[li], from_left ? Passage::Under : Passage::Over, -1});
            break;
          case GenKind::C:
            comp.push_back({letter_id[li], Passage::Flat, 0});
            break;
          case GenKind::V:
            vhits.push_back({(int)li, {comp_index, (int)comp.size()}});
            break;
        }
        p = from_left ? ggen.index + 1 : ggen.index;
      }
      strand = p; // closure joins bottom position p to top position p
    } while (strand != start);
    g.components.push_back(std::move(comp));
  }

  // Pair up the two incidences of each virtual letter.
  std::sort(vhits.begin(), vhits.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < vhits.size(); i += 2) {
    if (vhits[i].first != vhits[i + 1].first)
      fail(Errc::Internal, "virtual letter traced an odd number of times");
    g.virtual_record.push_back({vhits[i].second, vhits[i + 1].second});
  }
  return relabel_canonically(g);
}

int components(const GaussCode& g) { return (int)g.components.size(); }

std::map<std::pair<int, int>, int> virtual_parity_between_components(const GaussCode& g) {
  std::map<std::pair<int, int>, int> parity;
  int nc = (int)g.components.size();
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j) parity[{i, j}] = 0;
  for (const auto& vc : g.virtual_record) {
    int a = vc.a.component, b = vc.b.component;
    if (a == b) continue;
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    parity[key] ^= 1;
  }
  return parity;
}

GaussCode relabel_canonically(const GaussCode& g) {
  GaussCode r = g;
  std::map<int, int> remap;
  int next = 1;
  for (auto& comp : r.components)
    for (auto& v : comp) {
      auto it = remap.find(v.id);
      if (it == remap.end()) it = remap.emplace(v.id, next++).first;
      v.id = it->second;
    }
  return r;
}

namespace {

std::string serialize_components(const std::vector<std::vector<Visit>>& comps) {
  std::ostringstream os;
  for (auto& comp : comps) {
    os << '[';
    for (auto& v : comp)
      os << v.id << (v.passage == Passage::Over ? 'O' : v.passage == Passage::Under ? 'U' : 'F')
         << (v.sign > 0 ? '+' : v.sign < 0 ? '-' : '0') << ' ';
    os << ']';
  }
  return os.str();
}

// Relabel ids in first-visit order for a fixed arrangement.
std::vector<std::vector<Visit>> relabel(const std::vector<std::vector<Visit>>& comps) {
  std::vector<std::vector<Visit>> out = comps;
  std::map<int, int> remap;
  int next = 1;
  for (auto& comp : out)
    for (auto& v : comp) {
      auto it = remap.find(v.id);
      if (it == remap.end()) it = remap.emplace(v.id, next++).first;
      v.id = it->second;
    }
  return out;
}

} // namespace

std::string canonical_key(const GaussCode& g) {
  // Try all rotations of every component and all component orders; keep the
  // lexicographically least serialization. Fine for desk-scale codes.
  std::vector<int> order(g.components.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end());

  std::string best;
  bool first = true;
  std::vector<size_t> rot(g.components.size(), 0);
  do {
    // enumerate rotation vectors
    std::vector<size_t> limit(g.components.size());
    for (size_t i = 0; i < g.components.size(); ++i)
      limit[i] = std::max<size_t>(1, g.components[order[i]].size());
    std::fill(rot.begin(), rot.end(), 0);
    while (true) {
      std::vector<std::vector<Visit>> arranged;
      for (size_t i = 0; i < order.size(); ++i) {
        const auto& comp = g.components[order[i]];
        std::vector<Visit> rotated;
        rotated.reserve(comp.size());
        for (size_t k = 0; k < comp.size(); ++k)
          rotated.push_back(comp[(k + rot[i]) % comp.size()]);
        arranged.push_back(std::move(rotated));
      }
      std::string key = serialize_components(relabel(arranged));
      if (first || key < best) { best = key; first = false; }
      // increment rotation vector
      size_t d = 0;
      while (d < rot.size()) {
        if (++rot[d] < limit[d]) break;
        rot[d] = 0;
        ++d;
      }
      if (d == rot.size()) break;
      if (rot.empty()) break;
    }
    if (rot.empty()) {
      std::string key = serialize_components(relabel({}));
      if (first || key < best) { best = key; first = false; }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best + "#comps=" + std::to_string(g.components.size());
}

std::string gauss_to_json(const GaussCode& g) {
  json j;
  j["format"] = "vbraid-1";
  json comps = json::array();
  for (auto& comp : g.components) {
    json arr = json::array();
    for (auto& v : comp) {
      json vis;
      vis["id"] = v.id;
      vis["passage"] = v.passage == Passage::Over ? "over"
                       : v.passage == Passage::Under ? "under" : "flat";
      vis["sign"] = v.sign > 0 ? "+" : v.sign < 0 ? "-" : "0";
      arr.push_back(vis);
    }
    comps.push_back(arr);
  }
  j["components"] = comps;
  json vr = json::array();
  for (auto& vc : g.virtual_record) {
    vr.push_back(json{{"incidences",
                       json::array({json::array({vc.a.component, vc.a.arc_pos}),
                                    json::array({vc.b.component, vc.b.arc_pos})})}});
  }
  j["virtual"] = vr;
  return j.dump();
}

GaussCode gauss_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("bad gauss JSON: ") + e.what());
  }
  GaussCode g;
  for (auto& comp : j.at("components")) {
    std::vector<Visit> c;
    for (auto& vis : comp) {
      Visit v;
      v.id = vis.at("id").get<int>();
      std::string p = vis.at("passage").get<std::string>();
      v.passage = p == "over" ? Passage::Over : p == "under" ? Passage::Under : Passage::Flat;
      std::string s = vis.at("sign").get<std::string>();
      v.sign = s == "+" ? 1 : s == "-" ? -1 : 0;
      c.push_back(v);
    }
    g.components.push_back(std::move(c));
  }
  if (j.contains("virtual"))
    for (auto& vc : j["virtual"]) {
      auto& inc = vc.at("incidences");
      g.virtual_record.push_back({{inc.at(0).at(0).get<int>(), inc.at(0).at(1).get<int>()},
                                  {inc.at(1).at(0).get<int>(), inc.at(1).at(1).get<int>()}});
    }
  return g;
}

} // namespace vb
