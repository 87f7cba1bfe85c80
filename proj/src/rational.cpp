#include "bmsep/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bmsep {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("Rat: empty number");

  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("Rat: malformed fraction '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    q = mpq_class(mpz_class(std::string(num), 10), d);
    q.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (!all_digits(frac) || (!whole.empty() && !all_digits(whole)))
      throw std::invalid_argument("Rat: malformed decimal '" + std::string(text) + "'");
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
    mpz_class f(std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    q = mpq_class(w * scale + f, scale);
    q.canonicalize();
  } else {
    if (!all_digits(s))
      throw std::invalid_argument("Rat: malformed number '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(s), 10));
  }
  if (negative) q = -q;
  return Rat(std::move(q));
}

Rat Rat::abs() const {
  Rat r(*this);
  mpq_abs(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

bool Rat::is_integer() const { return q_.get_den() == 1; }

Rat Rat::floor() const {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return Rat(mpq_class(z));
}

Rat Rat::ceil() const {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return Rat(mpq_class(z));
}

long long Rat::to_ll() const {
  if (!is_integer()) throw std::logic_error("Rat::to_ll: not an integer");
  const mpz_class& n = q_.get_num();
  if (!n.fits_slong_p()) throw std::overflow_error("Rat::to_ll: out of range");
  return n.get_si();
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat Rat::operator-() const {
  Rat r(*this);
  mpq_neg(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.sgn() == 0) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

ExtWeight::ExtWeight(Rat value) : value_(std::move(value)) {
  if (value_.sgn() < 0) throw std::invalid_argument("ExtWeight: negative value");
}

ExtWeight ExtWeight::infinity() noexcept {
  ExtWeight w;
  w.finite_ = false;
  return w;
}

const Rat& ExtWeight::value() const {
  if (!finite_) throw std::logic_error("ExtWeight: value of infinity");
  return value_;
}

ExtWeight& ExtWeight::operator+=(const ExtWeight& o) {
  if (!finite_ || !o.finite_) {
    finite_ = false;
    value_ = Rat();
  } else {
    value_ += o.value_;
  }
  return *this;
}

std::string ExtWeight::str() const { return finite_ ? value_.str() : "inf"; }

ExtWeight min_weight(const ExtWeight& a, const ExtWeight& b) { return a <= b ? a : b; }

std::ostream& operator<<(std::ostream& os, const ExtWeight& w) { return os << w.str(); }

}  // namespace bmsep
