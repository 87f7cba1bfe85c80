#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bmsep {

/// Exact arbitrary-precision rational, always kept canonical
/// (gcd-reduced, positive denominator).
class Rat {
public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}
  Rat(long num, long den);

  /// Accepts "p/q", a plain integer, or a base-10 decimal such as "0.35"
  /// (converted exactly).  Throws std::invalid_argument on anything else.
  static Rat parse(std::string_view text);

  int sgn() const noexcept { return mpq_sgn(q_.get_mpq_t()); }
  Rat abs() const;
  bool is_integer() const;
  Rat floor() const;
  Rat ceil() const;
  long long to_ll() const;  // requires is_integer() and 64-bit range

  std::string str() const;  // "p" when the denominator is 1, else "p/q"

  Rat operator-() const;
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Nonnegative rational extended with +infinity.  Addition saturates,
/// comparisons are a total order with infinity greatest.
class ExtWeight {
public:
  ExtWeight() = default;
  ExtWeight(Rat value);  // throws std::invalid_argument when value < 0
  ExtWeight(long n) : ExtWeight(Rat(n)) {}

  static ExtWeight infinity() noexcept;

  bool finite() const noexcept { return finite_; }
  const Rat& value() const;  // finite values only

  std::string str() const;  // "inf" or the rational

  ExtWeight& operator+=(const ExtWeight& o);
  friend ExtWeight operator+(ExtWeight a, const ExtWeight& b) {
    a += b;
    return a;
  }

  friend bool operator==(const ExtWeight& a, const ExtWeight& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtWeight& a, const ExtWeight& b) {
    if (a.finite_ && b.finite_) return a.value_ <=> b.value_;
    if (a.finite_) return std::strong_ordering::less;
    if (b.finite_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  bool finite_ = true;
  Rat value_{};
};

ExtWeight min_weight(const ExtWeight& a, const ExtWeight& b);

std::ostream& operator<<(std::ostream& os, const ExtWeight& w);

/// Total map from edge index to weight, represented densely.
using WeightVector = std::vector<ExtWeight>;

}  // namespace bmsep
