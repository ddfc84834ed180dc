#include "tropj/rational.hpp"

#include <numeric>
#include <ostream>

namespace tropj {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  // mpq accepts "p/q" directly but tolerates junk like whitespace forms
  // inconsistently across versions, so validate the shape first.
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits(s)) throw parse_error("bad rational literal: " + s);
  } else {
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!digits(n) || !digits(d) || d[0] == '-' || d[0] == '+')
      throw parse_error("bad rational literal: " + s);
    if (mpz_class(d) == 0) throw parse_error("zero denominator: " + s);
  }
  mpq_class q(s);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return Rational(f);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace tropj
