#ifndef COTLIFT_BASE_SCALAR_HPP
#define COTLIFT_BASE_SCALAR_HPP

#include "cotlift/error.hpp"
#include "cotlift/polynomial.hpp"

#include <string>

namespace cotlift {

// Exact rational function of the base coordinates x1..xn: the coefficient
// field for everything on M. Canonical form: numerator and denominator share
// no factor, the denominator is grlex-monic and never zero. Equality is
// therefore plain component comparison.
class BaseScalar {
public:
    BaseScalar() : num_(), den_(1) {}
    explicit BaseScalar(const Rat& c) : num_(c), den_(1) {}
    explicit BaseScalar(long c) : num_(c), den_(1) {}
    explicit BaseScalar(Poly p) : num_(std::move(p)), den_(1) {}
    BaseScalar(Poly num, Poly den) { normalize(std::move(num), std::move(den)); }

    static BaseScalar variable(int var) { return BaseScalar(Poly::variable(var)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    int max_var() const { return std::max(num_.max_var(), den_.max_var()); }

    friend BaseScalar operator+(const BaseScalar& a, const BaseScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return BaseScalar(a.num_ + b.num_, a.den_);
        Poly g = poly_gcd(a.den_, b.den_);
        if (g.is_one()) return from_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        Poly da = divexact(a.den_, g);
        Poly db = divexact(b.den_, g);
        Poly num = a.num_ * db + b.num_ * da;
        Poly g2 = poly_gcd(num, g);
        if (!g2.is_one()) {
            num = divexact(num, g2);
            g = divexact(g, g2);
        }
        return from_reduced(std::move(num), da * db * g);
    }
    friend BaseScalar operator-(const BaseScalar& a) {
        BaseScalar r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend BaseScalar operator-(const BaseScalar& a, const BaseScalar& b) { return a + (-b); }
    friend BaseScalar operator*(const BaseScalar& a, const BaseScalar& b) {
        if (a.is_zero() || b.is_zero()) return BaseScalar();
        Poly g1 = poly_gcd(a.num_, b.den_);
        Poly g2 = poly_gcd(b.num_, a.den_);
        Poly n1 = g1.is_one() ? a.num_ : divexact(a.num_, g1);
        Poly d2 = g1.is_one() ? b.den_ : divexact(b.den_, g1);
        Poly n2 = g2.is_one() ? b.num_ : divexact(b.num_, g2);
        Poly d1 = g2.is_one() ? a.den_ : divexact(a.den_, g2);
        return from_reduced(n1 * n2, d1 * d2);
    }
    // Division by an identically-zero expression is a structured input error.
    friend BaseScalar operator/(const BaseScalar& a, const BaseScalar& b) {
        if (b.is_zero()) throw input_error("division by an identically-zero expression");
        BaseScalar inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_; // still coprime; operator* re-monicizes
        return a * inv;
    }
    BaseScalar& operator+=(const BaseScalar& o) { return *this = *this + o; }
    BaseScalar& operator-=(const BaseScalar& o) { return *this = *this - o; }
    BaseScalar& operator*=(const BaseScalar& o) { return *this = *this * o; }

    friend bool operator==(const BaseScalar& a, const BaseScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BaseScalar& a, const BaseScalar& b) { return !(a == b); }

    BaseScalar derivative(int var) const { // quotient rule, canonical output
        if (den_.is_one()) return BaseScalar(num_.derivative(var));
        return BaseScalar(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        bool wrap_num = num_.terms().size() > 1;
        std::string n = wrap_num ? "(" + num_.str() + ")" : num_.str();
        bool wrap_den = den_.terms().size() > 1 || !den_.leading_monomial().is_unit();
        std::string d = wrap_den ? "(" + den_.str() + ")" : den_.str();
        return n + "/" + d;
    }

private:
    void normalize(Poly num, Poly den) {
        if (den.is_zero()) throw input_error("division by an identically-zero expression");
        if (num.is_zero()) {
            num_ = Poly();
            den_ = Poly(1);
            return;
        }
        Poly g = poly_gcd(num, den);
        if (!g.is_one()) {
            num = divexact(num, g);
            den = divexact(den, g);
        }
        Rat lc = den.leading_coefficient();
        num_ = num * (Rat(1) / lc);
        den_ = den * (Rat(1) / lc);
    }
    // Inputs already coprime; only monicize.
    static BaseScalar from_reduced(Poly num, Poly den) {
        BaseScalar r;
        if (num.is_zero()) return r;
        Rat lc = den.leading_coefficient();
        r.num_ = num * (Rat(1) / lc);
        r.den_ = den * (Rat(1) / lc);
        return r;
    }

    Poly num_;
    Poly den_;
};

} // namespace cotlift

#endif
