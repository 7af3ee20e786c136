#ifndef NIJ_RATIONAL_HPP
#define NIJ_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nij {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator. Arithmetic is exact; division by zero throws.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  std::string str() const;
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline std::string Rational::str() const {
  return v_.get_str();  // "p" or "p/q", lowest terms, q > 0
}

inline Rational Rational::parse(std::string_view s) {
  // Accepts "p", "p/q", optional leading +/-, surrounding whitespace.
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string_view::npos) throw ParseError("empty rational");
  std::string t(s.substr(b, e - b + 1));
  for (size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '+' || c == '-') && (i == 0 || t[i - 1] == '/'));
    if (!ok) throw ParseError("bad rational: '" + std::string(s) + "'");
  }
  try {
    mpq_class q(t);
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational: '" + std::string(s) + "'");
  }
}

}  // namespace nij

#endif
