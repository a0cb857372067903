#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace umbralsum {

using Nat = std::uint64_t;

// Exact rational scalar backed by GMP. Canonical form is maintained after
// every operation: denominator > 0 and gcd(|num|, den) = 1, so equality is
// structural.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<long>(n)) {}
    Rational(unsigned long n) : q_(n) {}
    explicit Rational(const mpz_class& n) : q_(n) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    Rational(long num, long den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }

    // Accepts "p" or "p/q" in base 10; canonicalizes. Anything else throws.
    static Rational fromString(const std::string& s) {
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(mpz_class(s), mpz_class(1));
            }
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            return Rational(num, den);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool isZero() const { return sgn(q_) == 0; }
    bool isInteger() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // Wire format: always "p/q", integers as "p/1".
    std::string toString() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.isZero()) throw std::invalid_argument("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.toString();
    }

    Rational pow(long e) const {
        if (e < 0) {
            if (isZero()) throw std::invalid_argument("Rational: 0^negative");
            return Rational(1) / pow(-e);
        }
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(num, den);
    }

private:
    mpq_class q_;
};

inline Rational pow(const Rational& x, long e) { return x.pow(e); }

}  // namespace umbralsum
