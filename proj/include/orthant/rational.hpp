#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "orthant/errors.hpp"

namespace orthant {

/// Exact rational scalar backed by GMP. Always stored in lowest terms with a
/// positive denominator (mpq canonical form), so equality is structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor): scalars mix freely
    Rational(long n, long d) {
        if (d == 0) throw InvalidInput("rational with zero denominator");
        v_ = mpq_class(mpz_class(n), mpz_class(d));
        v_.canonicalize();
    }
    explicit Rational(mpz_class n) : v_(std::move(n)) {}
    Rational(mpz_class n, mpz_class d) {
        if (d == 0) throw InvalidInput("rational with zero denominator");
        v_ = mpq_class(std::move(n), std::move(d));
        v_.canonicalize();
    }

    /// Parses "p/q" or "p" (arbitrary precision, optional leading minus).
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(mpz_class(s));
            return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw InvalidInput("not a rational: \"" + s + "\"");
        }
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return den() == 1; }
    bool is_positive() const { return sign() > 0; }
    bool is_negative() const { return sign() < 0; }

    Rational reciprocal() const {
        if (is_zero()) throw InvalidInput("reciprocal of zero");
        return Rational(den(), num());
    }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Canonical string: "p/q", or "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw InvalidInput("division by zero");
        return wrap(a.v_ / b.v_);
    }
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational wrap(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);  // mpq arithmetic keeps canonical form
        return r;
    }

    mpq_class v_;
};

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace orthant
