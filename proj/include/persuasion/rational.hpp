#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <ostream>
#include <string>
#include <utility>

#include "persuasion/errors.hpp"

namespace persuasion {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Every probability and value in the library is one of these;
/// there is no floating-point anywhere in a value-bearing path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}

    Rational(long num, long den) {
        if (den == 0) throw Error(Errc::bad_parameters, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "a/b" or "a" (base 10, optional leading '-').
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        mpz_class num, den;
        std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
        std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
        if (num_part.empty() || den_part.empty() ||
            mpz_set_str(num.get_mpz_t(), num_part.c_str(), 10) != 0 ||
            mpz_set_str(den.get_mpz_t(), den_part.c_str(), 10) != 0)
            throw Error(Errc::bad_parameters, "cannot parse rational '" + text + "'");
        if (den == 0) throw Error(Errc::bad_parameters, "rational with zero denominator");
        Rational r;
        r.v_ = mpq_class(num) / mpq_class(den);
        return r;
    }

    /// Lowest-terms decimal rendering: "a/b", or "a" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(Errc::bad_parameters, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

} // namespace persuasion
