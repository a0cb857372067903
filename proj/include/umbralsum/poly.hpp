#pragma once

#include <string>
#include <vector>

#include "umbralsum/combinatorics.hpp"
#include "umbralsum/rational.hpp"

namespace umbralsum {

// Dense univariate polynomial over Rational, ascending degree order.
// The zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c) {
        if (!c.isZero()) c_.push_back(c);
    }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(std::size_t degree, const Rational& c = Rational(1)) {
        if (c.isZero()) return Poly();
        std::vector<Rational> v(degree + 1, Rational(0));
        v[degree] = c;
        return Poly(std::move(v));
    }

    bool isZero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const Rational& coeff(std::size_t i) const {
        static const Rational zero(0);
        return i < c_.size() ? c_[i] : zero;
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s.isZero()) { c_.clear(); return *this; }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(Poly a, const Rational& s) { a *= s; return a; }
    friend Poly operator*(const Rational& s, Poly a) { a *= s; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.isZero() || b.isZero()) return Poly();
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].isZero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }

    friend Poly operator-(const Poly& a) { return a * Rational(-1); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return Poly(std::move(out));
    }

    // P(x + a)
    Poly shiftArg(const Rational& a) const {
        Poly out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].isZero()) continue;
            // (x+a)^k expanded
            for (std::size_t j = 0; j <= k; ++j) {
                out += Poly::monomial(j, c_[k] * binomial(k, j) * a.pow(static_cast<long>(k - j)));
            }
        }
        return out;
    }

    std::vector<std::string> coeffStrings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(c.toString());
        if (out.empty()) out.push_back("0/1");
        return out;
    }

    std::string toString(const std::string& var = "N") const {
        if (isZero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].isZero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].toString();
            if (i >= 1) s += "*" + var + "^" + std::to_string(i);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        return os << p.toString();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().isZero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace umbralsum
