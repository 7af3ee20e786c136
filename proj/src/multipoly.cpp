/* multipoly.cpp
 *
 * Sparse multivariate polynomials over exact rationals, graded-lex term
 * order, plus the string grammar used by every file format in the toolkit.
 */

#include "nij/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nij {

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(int n, const Rational& c) {
  MultiPoly p(n);
  if (!c.is_zero()) p.terms_[Monomial(n, 0)] = c;
  return p;
}

MultiPoly MultiPoly::var(int n, int i) {
  if (i < 0 || i >= n) throw DimensionError("MultiPoly::var: index out of range");
  Monomial m(n, 0);
  m[i] = 1;
  return monomial(n, m, Rational(1));
}

MultiPoly MultiPoly::monomial(int n, const Monomial& m, const Rational& c) {
  if ((int)m.size() != n) throw DimensionError("MultiPoly::monomial: bad exponent length");
  MultiPoly p(n);
  if (!c.is_zero()) p.terms_[m] = c;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw PreconditionError("MultiPoly::constant_value: not constant");
  return terms_.begin()->second;
}

unsigned MultiPoly::degree() const {
  if (terms_.empty()) return 0;
  return total_degree(terms_.rbegin()->first);
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::check_same_space(const MultiPoly& o) const {
  if (n_ != o.n_) throw DimensionError("MultiPoly: mismatched num_vars");
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(n_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_space(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_space(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_space(b);
  MultiPoly r(a.n_);
  Monomial m(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  MultiPoly r(p.n_);
  if (c.is_zero()) return r;
  for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
  return r;
}

MultiPoly MultiPoly::partial(int var_index) const {
  if (var_index < 0 || var_index >= n_)
    throw DimensionError("MultiPoly::partial: index out of range");
  MultiPoly r(n_);
  for (const auto& [m, c] : terms_) {
    if (m[var_index] == 0) continue;
    Monomial dm = m;
    dm[var_index] -= 1;
    r.add_term(dm, Rational((long)m[var_index]) * c);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending grlex, leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    bool neg = c.sign() < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    bool has_vars = total_degree(m) > 0;
    bool coeff_shown = !(c == Rational(1) && has_vars);
    if (coeff_shown) out << c.str();
    bool need_star = coeff_shown;
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      out << "x" << (i + 1);
      if (m[i] > 1) out << "^" << m[i];
      need_star = true;
    }
    first = false;
  }
  return out.str();
}

namespace {

struct PolyLexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("polynomial parse error at position " + std::to_string(pos) + ": " + msg +
                     " in '" + std::string(s) + "'");
  }
  std::string integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected integer");
    return std::string(s.substr(start, pos - start));
  }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view s, int num_vars) {
  PolyLexer lx{s};
  MultiPoly result(num_vars);
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('-')) {
      sign = -1;
    } else if (lx.accept('+')) {
      // explicit plus
    } else if (!first) {
      lx.fail("expected '+' or '-' between terms");
    }
    // term := coeff? factors?
    Rational coeff(1);
    bool saw_coeff = false;
    if (std::isdigit((unsigned char)lx.peek())) {
      std::string num = lx.integer();
      std::string den;
      if (lx.accept('/')) den = lx.integer();
      coeff = den.empty() ? Rational::parse(num) : Rational::parse(num + "/" + den);
      saw_coeff = true;
    }
    Monomial mono(num_vars, 0);
    bool saw_var = false;
    for (;;) {
      bool starred = lx.accept('*');
      if (lx.peek() == 'x') {
        ++lx.pos;
        std::string idx = lx.integer();
        int i = 0;
        try {
          i = std::stoi(idx);
        } catch (...) {
          lx.fail("variable index out of range");
        }
        if (i < 1 || i > num_vars) lx.fail("variable x" + idx + " out of range");
        unsigned e = 1;
        if (lx.accept('^')) {
          std::string es = lx.integer();
          try {
            unsigned long v = std::stoul(es);
            if (v > 1u << 20) throw std::out_of_range("exponent");
            e = (unsigned)v;
          } catch (...) {
            lx.fail("exponent out of range");
          }
        }
        mono[i - 1] += e;
        saw_var = true;
      } else {
        if (starred) lx.fail("expected variable after '*'");
        break;
      }
    }
    if (!saw_coeff && !saw_var) lx.fail("expected term");
    if (sign < 0) coeff = -coeff;
    result.add_term(mono, coeff);
    first = false;
  }
  if (first) throw ParseError("empty polynomial string");
  return result;
}

}  // namespace nij
