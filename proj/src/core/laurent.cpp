#include "core/laurent.hpp"

#include <cctype>
#include <sstream>

namespace vb {

Laurent Laurent::monomial(char var, int exp, Rat coeff) {
  Laurent p;
  if (coeff == 0) return p;
  p.terms_[exp] = std::move(coeff);
  if (exp != 0) p.var_ = var;
  p.normalize();
  return p;
}

void Laurent::set_var_from(const Laurent& o) {
  if (o.var_ == 0) return;
  if (var_ == 0) { var_ = o.var_; return; }
  if (var_ != o.var_)
    fail(Errc::ParseError, std::string("mixed variables '") + var_ + "' and '" + o.var_ + "'");
}

void Laurent::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) it = terms_.erase(it); else ++it;
  }
  bool nonconst = false;
  for (auto& [e, c] : terms_)
    if (e != 0) nonconst = true;
  if (!nonconst) var_ = 0;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  set_var_from(o);
  for (auto& [e, c] : o.terms_) terms_[e] += c;
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  set_var_from(o);
  for (auto& [e, c] : o.terms_) terms_[e] -= c;
  normalize();
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  r.set_var_from(a);
  r.set_var_from(b);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) r.terms_[ea + eb] += ca * cb;
  r.normalize();
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  return terms_ == o.terms_; // var tags agree whenever nonconstant terms match
}

bool Laurent::try_divide(const Laurent& o, Laurent& out) const {
  if (o.is_zero()) return false;
  if (is_zero()) { out = Laurent(); return true; }
  // Long division from the top, valid in the Laurent ring: divide by the
  // leading term of o and subtract.
  Laurent rem = *this;
  Laurent quot;
  auto lead = std::prev(o.terms_.end());
  // An exact quotient has at most span(this)+span(o)+1 terms; anything
  // longer means the division does not terminate.
  long span_this = std::prev(terms_.end())->first - terms_.begin()->first;
  long span_o = lead->first - o.terms_.begin()->first;
  long guard = span_this + span_o + 16;
  while (!rem.is_zero() && guard-- > 0) {
    auto rl = std::prev(rem.terms_.end());
    int e = rl->first - lead->first;
    Rat c = rl->second / lead->second;
    Laurent m = Laurent::monomial(var_ ? var_ : o.var_, e, c);
    quot += m;
    rem -= m * o;
  }
  if (!rem.is_zero()) return false;
  out = quot;
  return true;
}

bool Laurent::try_invert(Laurent& out) const {
  if (terms_.size() != 1) return false;
  auto& [e, c] = *terms_.begin();
  out = Laurent::monomial(var_, -e, Rat(1) / c);
  return true;
}

Laurent Laurent::pow(int e) const {
  if (e < 0) fail(Errc::Internal, "negative power");
  Laurent r = Laurent::one();
  Laurent base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

static std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << rat_str(c);
    } else if (c == 1) {
      os << var_ << '^' << e;
    } else {
      os << rat_str(c) << '*' << var_ << '^' << e;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
  bool done() { skip_ws(); return i >= s.size(); }
  char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
};

long long parse_int(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
  size_t digits = c.i;
  while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) ++c.i;
  if (c.i == digits) fail(Errc::ParseError, "expected integer at offset " + std::to_string(start));
  return std::stoll(c.s.substr(start, c.i - start));
}

} // namespace

Laurent Laurent::parse(const std::string& text, char expected_var) {
  // Grammar: term (" + " term)*, term := coeff ['*' var ['^' exp]] | var ['^' exp]
  // coeff := int ['/' int]. A lone "-" before a term negates its coefficient.
  Cursor c{text};
  Laurent result;
  bool want_term = true;
  while (!c.done()) {
    if (!want_term) {
      if (c.peek() == '+') { ++c.i; want_term = true; continue; }
      fail(Errc::ParseError, "expected '+' at offset " + std::to_string(c.i));
    }
    Rat coeff(1);
    bool have_coeff = false;
    char ch = c.peek();
    if (ch == '-' || ch == '+' || std::isdigit((unsigned char)ch)) {
      long long num = parse_int(c);
      coeff = Rat(num);
      if (c.peek() == '/') {
        ++c.i;
        long long den = parse_int(c);
        if (den == 0) fail(Errc::ParseError, "zero denominator");
        coeff /= Rat(den);
      }
      have_coeff = true;
    }
    char var = 0;
    int exp = 0;
    ch = c.peek();
    if (have_coeff && ch == '*') { ++c.i; ch = c.peek(); }
    if (std::isalpha((unsigned char)ch)) {
      var = ch;
      ++c.i;
      exp = 1;
      if (c.peek() == '^') {
        ++c.i;
        exp = (int)parse_int(c);
      }
    } else if (!have_coeff) {
      fail(Errc::ParseError, "expected term at offset " + std::to_string(c.i));
    }
    if (var != 0 && expected_var != 0 && var != expected_var)
      fail(Errc::ParseError, std::string("unexpected variable '") + var + "'");
    result += var ? Laurent::monomial(var, exp, coeff) : Laurent(coeff);
    want_term = false;
  }
  if (want_term && !text.empty()) {
    // allow plain "0"; Cursor already consumed everything for it
  }
  return result;
}

std::string LaurentFraction::str() const {
  Laurent q;
  if (num.try_divide(den, q)) return q.str();
  return "(" + num.str() + ") / (" + den.str() + ")";
}

} // namespace vb
