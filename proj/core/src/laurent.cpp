#include "annulus/laurent.hpp"

#include "annulus/errors.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace annulus {

namespace {

Monomial mul(const Monomial& a, const Monomial& b, int sign = 1) {
  Monomial r = a;
  for (const auto& [v, e] : b) {
    int& x = r[v];
    x += sign * e;
    if (x == 0) r.erase(v);
  }
  return r;
}

int degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (const auto& [v, e] : a) {
    auto it = b.find(v);
    if (it == b.end() || it->second < e) return false;
  }
  return true;
}

// Lex order with variables compared alphabetically.
bool lex_greater(const Monomial& a, const Monomial& b) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) return ia->second > 0;
    if (ia == a.end() || ib->first < ia->first) return ib->second < 0;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

std::string factor_string(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m)
    for (int k = 0; k < e; ++k) s += (s.empty() ? "" : "*") + v;
  return s;
}

}  // namespace

void Laurent::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  Integer& v = terms_[m];
  v += c;
  if (v == 0) terms_.erase(m);
}

Laurent Laurent::constant(const Integer& c) {
  Laurent l;
  l.add_term({}, c);
  return l;
}

Laurent Laurent::variable(const std::string& name) { return monomial({{name, 1}}); }

Laurent Laurent::monomial(const Monomial& m, const Integer& c) {
  Laurent l;
  Monomial clean;
  for (const auto& [v, e] : m)
    if (e) clean[v] = e;
  l.add_term(clean, c);
  return l;
}

bool Laurent::positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

Monomial Laurent::denominator() const {
  Monomial d;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m)
      if (e < 0) d[v] = std::max(d[v], -e);
  return d;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [m, c] : terms_) r.add_term(m, -c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(mul(m1, m2), c1 * c2);
  return r;
}

Laurent Laurent::pow(int n) const {
  if (n < 0) return divide(constant(1), pow(-n));
  Laurent r = constant(1);
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

Laurent Laurent::divide(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) raise("NotLaurent", "division by zero");
  if (num.is_zero()) return num;
  // Strip the largest monomial factor of each side so both become plain polynomials.
  auto split = [](const Laurent& l) {
    Monomial low;
    for (const auto& [m, c] : l.terms_)
      for (const auto& [v, e] : m) low[v] = 0;
    for (auto& [v, e] : low) {
      e = l.terms_.begin()->first.count(v) ? l.terms_.begin()->first.at(v) : 0;
      for (const auto& [m, c] : l.terms_) e = std::min(e, m.count(v) ? m.at(v) : 0);
    }
    std::erase_if(low, [](const auto& kv) { return kv.second == 0; });
    Laurent poly;
    for (const auto& [m, c] : l.terms_) poly.add_term(mul(m, low, -1), c);
    return std::make_pair(low, poly);
  };
  auto [mn, fn] = split(num);
  auto [md, gd] = split(den);
  auto leading = [](const Laurent& l) {
    auto best = l.terms_.begin();
    for (auto it = l.terms_.begin(); it != l.terms_.end(); ++it)
      if (lex_greater(it->first, best->first)) best = it;
    return *best;
  };
  const auto [lm, lc] = leading(gd);
  Laurent q, r = fn;
  while (!r.is_zero()) {
    const auto [rm, rc] = leading(r);
    if (!divides(lm, rm) || rc % lc != 0) raise("NotLaurent", "quotient is not a Laurent polynomial");
    const Laurent t = monomial(mul(rm, lm, -1), rc / lc);
    q = q + t;
    r = r - t * gd;
  }
  return q * monomial(mul(mn, md, -1));
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  const Monomial den = denominator();
  std::vector<std::pair<Monomial, Integer>> num;
  for (const auto& [m, c] : terms_) num.push_back({mul(m, den), c});
  std::sort(num.begin(), num.end(), [](const auto& a, const auto& b) {
    const int da = degree(a.first), db = degree(b.first);
    if (da != db) return da > db;
    return factor_string(a.first) < factor_string(b.first);
  });
  std::string s;
  for (const auto& [m, c] : num) {
    const std::string f = factor_string(m);
    Integer a = c < 0 ? Integer(-c) : c;
    std::string term;
    if (f.empty()) term = a.str();
    else if (a == 1) term = f;
    else term = a.str() + "*" + f;
    if (s.empty()) s = (c < 0 ? "-" : "") + term;
    else s += (c < 0 ? "-" : "+") + term;
  }
  if (den.empty()) return s;
  const bool compound = num.size() > 1 || (num.size() == 1 && num[0].second < 0);
  const std::string d = factor_string(den);
  const bool multi = degree(den) > 1;
  return (compound ? "(" + s + ")" : s) + "/" + (multi ? "(" + d + ")" : d);
}

namespace {

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  Laurent run() {
    Laurent v = expr();
    skip();
    if (i_ != s_.size()) fail("trailing characters");
    return v;
  }

private:
  const std::string& s_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    raise("MalformedLaurent", why + " at offset " + std::to_string(i_) + " in '" + s_ + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Laurent expr() {
    Laurent v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  Laurent term() {
    Laurent v = power();
    for (;;) {
      if (eat('*')) v = v * power();
      else if (eat('/')) {
        const Laurent d = power();
        try {
          v = Laurent::divide(v, d);
        } catch (const Error&) {
          fail("inexact division");
        }
      } else return v;
    }
  }
  Laurent power() {
    Laurent v = atom();
    if (eat('^')) {
      skip();
      size_t j = i_;
      while (j < s_.size() && std::isdigit((unsigned char)s_[j])) ++j;
      if (j == i_) fail("expected exponent");
      const int n = std::stoi(s_.substr(i_, j - i_));
      i_ = j;
      v = v.pow(n);
    }
    return v;
  }
  Laurent atom() {
    skip();
    if (eat('-')) return -power();
    if (eat('(')) {
      Laurent v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit((unsigned char)s_[j])) ++j;
      Integer n(s_.substr(i_, j - i_));
      i_ = j;
      return Laurent::constant(n);
    }
    if (i_ < s_.size() && std::isalpha((unsigned char)s_[i_])) {
      size_t j = i_;
      while (j < s_.size() && (std::isalnum((unsigned char)s_[j]) || s_[j] == '_')) ++j;
      const std::string name = s_.substr(i_, j - i_);
      i_ = j;
      return Laurent::variable(name);
    }
    fail("unexpected character");
  }
};

}  // namespace

Laurent Laurent::parse(const std::string& text) { return Parser(text).run(); }

}  // namespace annulus
