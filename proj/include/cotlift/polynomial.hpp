#ifndef COTLIFT_POLYNOMIAL_HPP
#define COTLIFT_POLYNOMIAL_HPP

#include "cotlift/monomial.hpp"
#include "cotlift/rational.hpp"

#include <map>
#include <string>

namespace cotlift {

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no stored zero coefficients; terms keyed by monomial in
// descending graded-lex order, so begin() is the leading term and equal
// values have identical representations.
class Poly {
public:
    using TermMap = std::map<Mono, Rat, GrlexDesc>;

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) terms_[Mono{}] = c;
    }
    explicit Poly(long c) : Poly(Rat(c)) {}
    static Poly variable(int var) {
        Poly p;
        p.terms_[mono_var(var)] = 1;
        return p;
    }
    static Poly term(const Mono& m, const Rat& c) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1; }
    Rat constant_value() const { // only meaningful when is_constant()
        return terms_.empty() ? Rat(0) : terms_.begin()->second;
    }

    const TermMap& terms() const { return terms_; }
    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
    const Mono& leading_monomial() const { return terms_.begin()->first; }
    const Rat& leading_coefficient() const { return terms_.begin()->second; }
    int max_var() const {
        int v = -1;
        for (const auto& [m, c] : terms_) v = std::max(v, m.max_var());
        return v;
    }
    int degree_in(int var) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max<int>(d, m.e[var]);
        return d;
    }

    void add_term(const Mono& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const Poly& a, const Rat& c) {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, cc] : a.terms_) r.terms_[m] = cc * c;
        return r;
    }
    friend Poly operator*(const Rat& c, const Poly& a) { return a * c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(int var) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Mono d = m;
            d.e[var] -= 1;
            r.add_term(d, c * m.e[var]);
        }
        return r;
    }

    // Scaled so the leading grlex coefficient is 1 (canonical gcd/denominator
    // representative). Zero stays zero.
    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (Rat(1) / leading_coefficient());
    }

    std::string str() const; // canonical text, round-trips through the parser

private:
    TermMap terms_;
};

// Exact division: throws internal_error if b does not divide a.
Poly divexact(const Poly& a, const Poly& b);

// Monic gcd over Q[x_0..x_{kMaxDim-1}] (primitive pseudo-remainder sequences).
Poly poly_gcd(Poly a, Poly b);

std::string poly_to_string(const Poly& p, char letter);

} // namespace cotlift

#endif
