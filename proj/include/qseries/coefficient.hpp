#pragma once

#include <gmpxx.h>
#include <string>
#include <utility>

#include "qseries/errors.hpp"

namespace qseries {

/**
 * Exact rational coefficient.
 *
 * Always canonical: lowest terms, positive denominator. Arithmetic is exact;
 * no rounding path exists. Integer-valued coefficients report is_integer()
 * and render as plain decimal strings, which is what certificates store.
 */
class Coefficient {
public:
    Coefficient() : v_(0) {}
    Coefficient(long n) : v_(static_cast<signed long>(n)) {}
    Coefficient(int n) : v_(n) {}

    Coefficient(long num, long den) {
        if (den == 0)
            throw SeriesError("Coefficient: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Coefficient(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Coefficient(const mpz_class& z) : v_(z) {}

    /* Parses "n" or "n/d" in base 10. */
    static Coefficient from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw SeriesError("Coefficient: cannot parse \"" + s + "\"");
        if (v.get_den() == 0)
            throw SeriesError("Coefficient: zero denominator in \"" + s + "\"");
        v.canonicalize();
        return Coefficient(std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /* "n" when integral, "n/d" otherwise; exact decimal digits, never floats. */
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }
    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    Coefficient& operator+=(const Coefficient& o) { v_ += o.v_; return *this; }
    Coefficient& operator-=(const Coefficient& o) { v_ -= o.v_; return *this; }
    Coefficient& operator*=(const Coefficient& o) { v_ *= o.v_; return *this; }
    Coefficient& operator/=(const Coefficient& o) {
        if (o.is_zero())
            throw DegenerateDivisor("Coefficient: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Coefficient operator+(Coefficient a, const Coefficient& b) { a += b; return a; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { a -= b; return a; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { a *= b; return a; }
    friend Coefficient operator/(Coefficient a, const Coefficient& b) { a /= b; return a; }
    friend Coefficient operator-(const Coefficient& a) { return Coefficient(mpq_class(-a.v_)); }

    friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return a.v_ != b.v_; }
    friend bool operator<(const Coefficient& a, const Coefficient& b) { return a.v_ < b.v_; }
    friend bool operator>(const Coefficient& a, const Coefficient& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Coefficient& a, const Coefficient& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Coefficient& a, const Coefficient& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

} // namespace qseries
