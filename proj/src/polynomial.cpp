#include "cotlift/polynomial.hpp"

#include "cotlift/error.hpp"

#include <vector>

namespace cotlift {

Poly divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw internal_error("divexact: division by zero polynomial");
    if (a.is_zero()) return Poly();
    if (b.is_one()) return a;
    Poly q;
    Poly r = a;
    while (!r.is_zero()) {
        const Mono& lr = r.leading_monomial();
        const Mono& lb = b.leading_monomial();
        if (!lb.divides(lr)) throw internal_error("divexact: inexact division");
        Mono qm = lr / lb;
        Rat qc = r.leading_coefficient() / b.leading_coefficient();
        q.add_term(qm, qc);
        r -= Poly::term(qm, qc) * b;
    }
    return q;
}

namespace {

// Univariate view in variable `var`: coefficients are polynomials in the
// remaining variables, indexed by the exponent of `var`.
std::vector<Poly> coeffs_in(const Poly& p, int var) {
    std::vector<Poly> cs(static_cast<size_t>(p.degree_in(var)) + 1);
    for (const auto& [m, c] : p.terms()) {
        Mono rest = m;
        int k = rest.e[var];
        rest.e[var] = 0;
        cs[static_cast<size_t>(k)].add_term(rest, c);
    }
    return cs;
}

Poly from_coeffs(const std::vector<Poly>& cs, int var) {
    Poly p;
    for (size_t k = 0; k < cs.size(); ++k)
        for (const auto& [m, c] : cs[k].terms()) p.add_term(m * mono_var(var, static_cast<int>(k)), c);
    return p;
}

Poly content_in(const Poly& p, int var) {
    Poly g;
    for (const auto& c : coeffs_in(p, var)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Pseudo-remainder of a by b in `var`; the result is only defined up to a
// factor from lc(b) powers, which the primitive PRS discards anyway.
Poly pseudo_rem(const Poly& a, const Poly& b, int var) {
    int db = b.degree_in(var);
    Poly lb = coeffs_in(b, var)[static_cast<size_t>(db)];
    Poly r = a;
    while (!r.is_zero()) {
        int dr = r.degree_in(var);
        if (dr < db) break;
        Poly lr = coeffs_in(r, var)[static_cast<size_t>(dr)];
        Poly shift;
        shift.add_term(mono_var(var, dr - db), Rat(1));
        r = lb * r - lr * shift * b;
    }
    return r;
}

// Univariate fast path: plain monic Euclid over Q.
Poly gcd_univariate(Poly a, Poly b, int var) {
    while (!b.is_zero()) {
        // remainder of a by b
        int db = b.degree_in(var);
        Rat lb = coeffs_in(b, var)[static_cast<size_t>(db)].constant_value();
        while (!a.is_zero() && a.degree_in(var) >= db) {
            int da = a.degree_in(var);
            Rat la = coeffs_in(a, var)[static_cast<size_t>(da)].constant_value();
            Poly shift;
            shift.add_term(mono_var(var, da - db), la / lb);
            a -= shift * b;
        }
        std::swap(a, b);
    }
    return a.monic();
}

} // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(1);
    if (a == b) return a.monic();

    int var = std::max(a.max_var(), b.max_var());
    if (a.degree_in(var) == 0) return poly_gcd(std::move(a), content_in(b, var));
    if (b.degree_in(var) == 0) return poly_gcd(content_in(a, var), std::move(b));

    if (a.max_var() == var && b.max_var() == var) {
        bool univ = true;
        for (const auto& [m, c] : a.terms())
            if (m.degree() != m.e[var]) { univ = false; break; }
        if (univ)
            for (const auto& [m, c] : b.terms())
                if (m.degree() != m.e[var]) { univ = false; break; }
        if (univ) return gcd_univariate(std::move(a), std::move(b), var);
    }

    Poly ca = content_in(a, var);
    Poly cb = content_in(b, var);
    Poly pa = divexact(a, ca);
    Poly pb = divexact(b, cb);
    Poly cg = poly_gcd(ca, cb);

    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    Poly g;
    while (true) {
        if (pb.degree_in(var) == 0) { // nonzero and primitive: parts are coprime
            g = Poly(1);
            break;
        }
        Poly r = pseudo_rem(pa, pb, var);
        if (r.is_zero()) {
            g = pb;
            break;
        }
        pa = std::move(pb);
        pb = divexact(r, content_in(r, var)).monic();
    }
    return (cg * g).monic();
}

std::string poly_to_string(const Poly& p, char letter) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (int v = 0; v < kMaxDim; ++v) {
            if (m.e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += letter;
            mono += std::to_string(v + 1);
            if (m.e[v] > 1) mono += "^" + std::to_string(static_cast<int>(m.e[v]));
        }
        if (mono.empty()) {
            out += to_string(ac);
        } else if (ac == 1) {
            out += mono;
        } else {
            out += to_string(ac) + "*" + mono;
        }
    }
    return out;
}

std::string Poly::str() const { return poly_to_string(*this, 'x'); }

} // namespace cotlift
