#ifndef COTLIFT_FIBER_SCALAR_HPP
#define COTLIFT_FIBER_SCALAR_HPP

#include "cotlift/base_scalar.hpp"
#include "cotlift/monomial.hpp"

#include <map>
#include <string>

namespace cotlift {

// Polynomial in the momenta p1..pn with BaseScalar coefficients: the function
// space on T*M everything in this project lives in. No stored zero
// coefficients, keys unique, hence canonical.
class FiberScalar {
public:
    using TermMap = std::map<Mono, BaseScalar, GrlexDesc>;

    FiberScalar() = default;
    explicit FiberScalar(BaseScalar c) {
        if (!c.is_zero()) terms_[Mono{}] = std::move(c);
    }
    explicit FiberScalar(const Rat& c) : FiberScalar(BaseScalar(c)) {}
    explicit FiberScalar(long c) : FiberScalar(BaseScalar(c)) {}

    static FiberScalar momentum(int var) { // p_{var+1}
        FiberScalar f;
        f.terms_[mono_var(var)] = BaseScalar(1);
        return f;
    }
    static FiberScalar term(const Mono& m, BaseScalar c) {
        FiberScalar f;
        if (!c.is_zero()) f.terms_[m] = std::move(c);
        return f;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_base() const { // free of the momenta
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    int p_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
    bool is_homogeneous(int d) const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }
    BaseScalar base_value() const { // only meaningful when is_base()
        return terms_.empty() ? BaseScalar() : terms_.begin()->second;
    }
    BaseScalar coefficient(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BaseScalar() : it->second;
    }

    void add_term(const Mono& m, const BaseScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FiberScalar& operator+=(const FiberScalar& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    FiberScalar& operator-=(const FiberScalar& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend FiberScalar operator+(FiberScalar a, const FiberScalar& b) { return a += b; }
    friend FiberScalar operator-(FiberScalar a, const FiberScalar& b) { return a -= b; }
    friend FiberScalar operator-(const FiberScalar& a) {
        FiberScalar r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend FiberScalar operator*(const FiberScalar& a, const FiberScalar& b) {
        FiberScalar r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    FiberScalar& operator*=(const FiberScalar& o) { return *this = *this * o; }
    friend FiberScalar operator*(const FiberScalar& a, const BaseScalar& c) {
        FiberScalar r;
        if (c.is_zero()) return r;
        for (const auto& [m, cc] : a.terms_) r.add_term(m, cc * c);
        return r;
    }
    friend FiberScalar operator*(const BaseScalar& c, const FiberScalar& a) { return a * c; }

    // Defined only for momentum-free nonzero divisors.
    friend FiberScalar operator/(const FiberScalar& a, const FiberScalar& b) {
        if (b.is_zero()) throw input_error("division by an identically-zero expression");
        if (!b.is_base()) throw input_error("division by a momentum-dependent expression");
        BaseScalar inv = BaseScalar(1) / b.base_value();
        return a * inv;
    }

    friend bool operator==(const FiberScalar& a, const FiberScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const FiberScalar& a, const FiberScalar& b) { return !(a == b); }

    FiberScalar dx(int var) const { // d/dx^{var+1}
        FiberScalar r;
        for (const auto& [m, c] : terms_) r.add_term(m, c.derivative(var));
        return r;
    }
    FiberScalar dp(int var) const { // d/dp_{var+1}
        FiberScalar r;
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Mono d = m;
            d.e[var] -= 1;
            r.add_term(d, c * BaseScalar(Rat(static_cast<int>(m.e[var]))));
        }
        return r;
    }

    // The part of exact fiber degree d; summing over all d reproduces the value.
    FiberScalar homogeneous_component(int d) const {
        FiberScalar r;
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) r.terms_[m] = c;
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.str();
            bool multiterm = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
            bool neg = !multiterm && !cs.empty() && cs[0] == '-';
            if (first) {
                first = false;
                if (neg) {
                    out += "-";
                    cs = cs.substr(1);
                }
            } else {
                out += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            }
            bool needs_paren = multiterm;
            std::string mono;
            for (int v = 0; v < kMaxDim; ++v) {
                if (m.e[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "p" + std::to_string(v + 1);
                if (m.e[v] > 1) mono += "^" + std::to_string(static_cast<int>(m.e[v]));
            }
            if (mono.empty()) {
                out += needs_paren ? "(" + cs + ")" : cs;
            } else if (cs == "1") {
                out += mono;
            } else {
                out += (needs_paren ? "(" + cs + ")" : cs) + "*" + mono;
            }
        }
        return out;
    }

private:
    TermMap terms_;
};

} // namespace cotlift

#endif
