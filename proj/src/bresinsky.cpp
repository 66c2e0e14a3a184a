#include "stci/bresinsky.hpp"

#include <numeric>

namespace stci {

BresinskyData bresinsky_reduce(const DefiningEquations& eq) {
    if (eq.kind != RelCase::H1 || !eq.h1)
        throw Error("set-theoretic reduction needs the three-relation case");
    const H1Data& h = *eq.h1;
    const Weights& w = eq.w;
    const SparsePoly& f1 = eq.f[0];
    const SparsePoly& f3 = eq.f[2];

    BresinskyData out;
    out.c = h.c;
    out.k = h.e.a1 * h.e.c2;

    // Eliminate z from f1^c: replace z^c by f3 + x^a1 y^b2 until every term
    // has z-exponent < c. Each rewrite lowers the z-exponent by c, so this
    // terminates; q collects the f3-cofactors.
    SparsePoly rem = poly_pow(f1, out.c);
    SparsePoly q = poly_zero(w);
    for (;;) {
        auto it = std::find_if(rem.terms.begin(), rem.terms.end(),
                               [&](const auto& t) { return t.first.z >= h.c; });
        if (it == rem.terms.end()) break;
        Exps e = it->first;
        Rat coeff = it->second;
        SparsePoly cof =
            poly_monomial(w, coeff, e.x, e.y, e.z - h.c, e.s);
        q = q + cof;
        rem = rem - poly_monomial(w, coeff, e.x, e.y, e.z, e.s) +
              cof * poly_monomial(w, 1, h.e.a1, h.e.b2, 0);
    }

    // Every surviving term is divisible by x^k.
    for (const auto& t : rem.terms)
        if (t.first.x < out.k)
            throw InternalInconsistency("normal form is not divisible by x^k");
    SparsePoly g = poly_zero(w);
    for (const auto& t : rem.terms)
        poly_add_term(g, Exps{t.first.x - out.k, t.first.y, t.first.z, t.first.s},
                      t.second);
    out.q = q;
    out.g = g;

    // Residue of g modulo (x, z): the single term with x = z = 0.
    int found = 0;
    for (const auto& t : g.terms)
        if (t.first.x == 0 && t.first.z == 0) {
            ++found;
            if (t.first.y != w.l)
                throw InternalInconsistency("residue of g is not y^l");
            if (t.second == 1)
                out.residue_sign = 1;
            else if (t.second == -1)
                out.residue_sign = -1;
            else
                throw InternalInconsistency("residue coefficient is not a unit");
        }
    if (found != 1)
        throw InternalInconsistency("g has no unique residue modulo (x, z)");
    if (out.residue_sign != (h.c % 2 == 0 ? 1 : -1))
        throw InternalInconsistency("residue sign differs from (-1)^c");

    // Exact re-verification of the identity.
    SparsePoly lhs = poly_pow(f1, out.c);
    SparsePoly rhs = q * f3 + poly_monomial(w, 1, out.k, 0, 0) * g;
    out.identity_verified = lhs == rhs;
    if (!out.identity_verified)
        throw InternalInconsistency("reduced identity fails exact re-expansion");

    // Homogeneity checks.
    long long d1 = eq.d[0], d3 = eq.d[2];
    if (!q.is_zero()) {
        auto dq = homogeneous_degree(q);
        if (!dq || *dq != out.c * d1 - d3)
            throw InternalInconsistency("f3-cofactor has the wrong degree");
    }
    auto dg = homogeneous_degree(g);
    if (!dg || *dg != out.c * d1 - out.k * w.l)
        throw InternalInconsistency("surface equation has the wrong degree");
    return out;
}

void syzygy_check(const DefiningEquations& eq) {
    if (eq.kind != RelCase::H1 || !eq.h1)
        throw Error("syzygy check needs the three-relation case");
    const H1Data& h = *eq.h1;
    const Weights& w = eq.w;
    const SparsePoly &f1 = eq.f[0], &f2 = eq.f[1], &f3 = eq.f[2];
    SparsePoly s1 = poly_monomial(w, 1, h.e.a1, 0, 0) * f2 +
                    poly_monomial(w, 1, 0, h.e.b1, 0) * f3 +
                    poly_monomial(w, 1, 0, 0, h.e.c1) * f1;
    SparsePoly s2 = poly_monomial(w, 1, 0, 0, h.e.c2) * f2 +
                    poly_monomial(w, 1, h.e.a2, 0, 0) * f3 +
                    poly_monomial(w, 1, 0, h.e.b2, 0) * f1;
    if (!s1.is_zero() || !s2.is_zero())
        throw InternalInconsistency("monomial syzygies of f2 fail");
}

bool moh_check(long long l, long long m, long long n) {
    if (l <= 0 || m <= 0 || n <= 0) throw ZeroGenerator();
    return std::gcd(l, m) == 1 && l < m && (l - 2) * m < n;
}

} // namespace stci
