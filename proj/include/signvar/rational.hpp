#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace signvar {

/// Exact arbitrary-precision rational scalar.
///
/// Always kept in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) == 1, so sign queries are O(1) and
/// equality is structural.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den);
    Rational(mpz_class num, mpz_class den);
    explicit Rational(mpz_class n) : v_(std::move(n)) {}

    /// Parses "p/q" or "p" with optional sign. Throws std::invalid_argument
    /// on malformed input (decimal literals are rejected).
    static Rational from_string(std::string_view text);

    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const;
    Rational abs() const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational reciprocal() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    /// "p/q", or just "p" when integral.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;  // canonical at all times
};

inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / Rational(2);
}

/// Largest integer <= r, as a Rational.
Rational floor(const Rational& r);

/// Sign of a rational, as the paper's three-valued sgn.
inline int sgn(const Rational& r) { return r.sign(); }

/// The unique rational of minimal denominator strictly inside (lo, hi)
/// (Stern-Brocot descent). Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace signvar
