#include "core/relations.hpp"

#include <map>
#include <mutex>

namespace vb {

namespace {

using Letters = std::vector<Generator>;

void add(std::vector<Relation>& out, std::string name, Letters lhs, Letters rhs) {
  out.push_back({std::move(name), std::move(lhs), std::move(rhs)});
}

char sign_char(GenKind k) { return k == GenKind::SigmaPos ? 'p' : 'n'; }

// Classical crossing of either sign for the given family tag.
GenKind sig(char s) { return s == 'p' ? GenKind::SigmaPos : GenKind::SigmaNeg; }

void add_symmetric_group_relations(std::vector<Relation>& out, GenKind k, const char* tag, int n) {
  for (int i = 1; i <= n - 1; ++i)
    add(out, std::string(tag) + "-involution:" + std::to_string(i), {{k, i}, {k, i}}, {});
  for (int i = 1; i + 1 <= n - 1; ++i)
    add(out, std::string(tag) + "-braid:" + std::to_string(i),
        {{k, i}, {k, i + 1}, {k, i}}, {{k, i + 1}, {k, i}, {k, i + 1}});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      add(out, std::string(tag) + "-commute:" + std::to_string(i) + "," + std::to_string(j),
          {{k, i}, {k, j}}, {{k, j}, {k, i}});
}

void add_sigma_relations(std::vector<Relation>& out, int n) {
  for (int i = 1; i <= n - 1; ++i) {
    add(out, "sigma-cancel:pn:" + std::to_string(i), {sigma(i), sigma_inv(i)}, {});
    add(out, "sigma-cancel:np:" + std::to_string(i), {sigma_inv(i), sigma(i)}, {});
  }
  for (int i = 1; i + 1 <= n - 1; ++i) {
    int j = i + 1;
    // sigma-braid: the defining relation in both signs plus the four mixed
    // consequences (conjugation forms), all letter-sequence identities.
    add(out, "sigma-braid:ppp:" + std::to_string(i),
        {sigma(i), sigma(j), sigma(i)}, {sigma(j), sigma(i), sigma(j)});
    add(out, "sigma-braid:nnn:" + std::to_string(i),
        {sigma_inv(i), sigma_inv(j), sigma_inv(i)}, {sigma_inv(j), sigma_inv(i), sigma_inv(j)});
    add(out, "sigma-braid:npp:" + std::to_string(i),
        {sigma_inv(i), sigma(j), sigma(i)}, {sigma(j), sigma(i), sigma_inv(j)});
    add(out, "sigma-braid:nnp:" + std::to_string(i),
        {sigma_inv(i), sigma_inv(j), sigma(i)}, {sigma(j), sigma_inv(i), sigma_inv(j)});
    add(out, "sigma-braid:ppn:" + std::to_string(i),
        {sigma(i), sigma(j), sigma_inv(i)}, {sigma_inv(j), sigma(i), sigma(j)});
    add(out, "sigma-braid:pnn:" + std::to_string(i),
        {sigma(i), sigma_inv(j), sigma_inv(i)}, {sigma_inv(j), sigma_inv(i), sigma(j)});
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      for (char a : {'p', 'n'})
        for (char b : {'p', 'n'})
          add(out,
              std::string("sigma-commute:") + a + b + ":" + std::to_string(i) + "," +
                  std::to_string(j),
              {{sig(a), i}, {sig(b), j}}, {{sig(b), j}, {sig(a), i}});
  // sigma / v commutation at distance >= 2
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) < 2) continue;
      for (char a : {'p', 'n'})
        add(out,
            std::string("mixed-commute:") + a + ":" + std::to_string(i) + "," +
                std::to_string(j),
            {{sig(a), i}, vgen(j)}, {vgen(j), {sig(a), i}});
    }
}

void add_detour_relations(std::vector<Relation>& out, GenKind real_kind, const char* base, int n) {
  // v_i x_{i+1} v_i = v_{i+1} x_i v_{i+1} plus the two slide consequences,
  // for x the classical (or flat) crossing.
  auto kinds = [&](char s) {
    if (real_kind == GenKind::C) return GenKind::C;
    return sig(s);
  };
  std::vector<char> signs = real_kind == GenKind::C ? std::vector<char>{'f'}
                                                    : std::vector<char>{'p', 'n'};
  for (int i = 1; i + 1 <= n - 1; ++i) {
    for (char s : signs) {
      GenKind k = kinds(s);
      std::string suffix = std::string(":") + s + ":" + std::to_string(i);
      add(out, std::string(base) + suffix,
          {vgen(i), {k, i + 1}, vgen(i)}, {vgen(i + 1), {k, i}, vgen(i + 1)});
      add(out, std::string(base) + "-slide-a" + suffix,
          {vgen(i), vgen(i + 1), {k, i}}, {{k, i + 1}, vgen(i), vgen(i + 1)});
      add(out, std::string(base) + "-slide-b" + suffix,
          {{k, i}, vgen(i + 1), vgen(i)}, {vgen(i + 1), vgen(i), {k, i + 1}});
    }
  }
}

void add_cv_commute(std::vector<Relation>& out, int n) {
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) < 2) continue;
      add(out, "cv-commute:" + std::to_string(i) + "," + std::to_string(j),
          {cgen(i), vgen(j)}, {vgen(j), cgen(i)});
    }
}

void add_forbidden(std::vector<Relation>& out, const char* name, bool f2, int n) {
  for (int i = 1; i + 1 <= n - 1; ++i) {
    int j = i + 1;
    if (!f2) {
      add(out, std::string(name) + ":" + std::to_string(i),
          {vgen(i), sigma(j), sigma(i)}, {sigma(j), sigma(i), vgen(j)});
      add(out, std::string(name) + "-inv:" + std::to_string(i),
          {sigma_inv(i), sigma_inv(j), vgen(i)}, {vgen(j), sigma_inv(i), sigma_inv(j)});
    } else {
      add(out, std::string(name) + ":" + std::to_string(i),
          {sigma(i), sigma(j), vgen(i)}, {vgen(j), sigma(i), sigma(j)});
      add(out, std::string(name) + "-inv:" + std::to_string(i),
          {vgen(i), sigma_inv(j), sigma_inv(i)}, {sigma_inv(j), sigma_inv(i), vgen(j)});
    }
  }
}

std::vector<Relation> build_table(BraidCategory cat, int n) {
  std::vector<Relation> out;
  add_symmetric_group_relations(out, GenKind::V, "v", n);
  switch (cat) {
    case BraidCategory::Virtual:
      add_sigma_relations(out, n);
      add_detour_relations(out, GenKind::SigmaPos, "special-detour", n);
      break;
    case BraidCategory::Welded:
      add_sigma_relations(out, n);
      add_detour_relations(out, GenKind::SigmaPos, "special-detour", n);
      add_forbidden(out, "F1", false, n);
      break;
    case BraidCategory::Unrestricted:
      add_sigma_relations(out, n);
      add_detour_relations(out, GenKind::SigmaPos, "special-detour", n);
      add_forbidden(out, "F1", false, n);
      add_forbidden(out, "F2", true, n);
      break;
    case BraidCategory::Flat:
      add_symmetric_group_relations(out, GenKind::C, "c", n);
      add_cv_commute(out, n);
      add_detour_relations(out, GenKind::C, "mixed-flat", n);
      break;
  }
  return out;
}

} // namespace

const std::vector<Relation>& relations_for(BraidCategory cat, int strands) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Relation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair((int)cat, strands);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_table(cat, strands)).first;
  return it->second;
}

std::optional<Relation> find_relation(BraidCategory cat, int strands, const std::string& name) {
  for (const auto& r : relations_for(cat, strands))
    if (r.name == name) return r;
  return std::nullopt;
}

bool relation_licensed(const std::string& name, BraidCategory cat) {
  auto base = name.substr(0, name.find(':'));
  auto starts = [&](const char* p) { return base.rfind(p, 0) == 0; };
  if (starts("F2")) return cat == BraidCategory::Unrestricted;
  if (starts("F1")) return cat == BraidCategory::Welded || cat == BraidCategory::Unrestricted;
  if (starts("c-") || base == "c" || starts("cv-") || starts("mixed-flat"))
    return cat == BraidCategory::Flat;
  if (starts("sigma") || starts("mixed-commute") || starts("special-detour"))
    return cat != BraidCategory::Flat;
  if (starts("v-")) return true;
  return false;
}

BraidWord apply_relation(const BraidWord& w, const Relation& rel, size_t pos, Direction dir) {
  if (!relation_licensed(rel.name, w.category))
    fail(Errc::CategoryViolation,
         "relation " + rel.name + " not licensed in category " + category_name(w.category));
  const auto& from = dir == Direction::Forward ? rel.lhs : rel.rhs;
  const auto& to = dir == Direction::Forward ? rel.rhs : rel.lhs;
  if (pos > w.letters.size() || pos + from.size() > w.letters.size())
    fail(Errc::NoMatch, "position " + std::to_string(pos) + " out of range");
  for (size_t i = 0; i < from.size(); ++i)
    if (w.letters[pos + i] != from[i])
      fail(Errc::NoMatch, "relation " + rel.name + " does not match at " + std::to_string(pos));
  BraidWord r{w.strands, w.category, {}};
  r.letters.reserve(w.letters.size() - from.size() + to.size());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + pos);
  r.letters.insert(r.letters.end(), to.begin(), to.end());
  r.letters.insert(r.letters.end(), w.letters.begin() + pos + from.size(), w.letters.end());
  validate(r);
  return r;
}

std::vector<RelationSite> applicable_relations(const BraidWord& w,
                                               const std::vector<Relation>& table) {
  std::vector<RelationSite> sites;
  auto matches = [&](const Letters& pat, size_t pos) {
    if (pos + pat.size() > w.letters.size()) return false;
    for (size_t i = 0; i < pat.size(); ++i)
      if (w.letters[pos + i] != pat[i]) return false;
    return true;
  };
  for (size_t pos = 0; pos <= w.letters.size(); ++pos) {
    for (const auto& rel : table) {
      if (!rel.lhs.empty() && matches(rel.lhs, pos))
        sites.push_back({&rel, pos, Direction::Forward});
      if (!rel.rhs.empty() && matches(rel.rhs, pos))
        sites.push_back({&rel, pos, Direction::Backward});
    }
  }
  return sites;
}

} // namespace vb
