#include "stci/family.hpp"

#include <numeric>

namespace stci {

FamilyInstance family_instance(long long a, long long b) {
    if (a < 2 || b < 2) throw InvalidParameters("family needs a, b >= 2");
    if (b + 2 >= 2 * a + 1)
        throw InvalidParameters("family needs b + 2 < 2a + 1");
    if (std::gcd(b + 2, 2 * a + 1) != 1)
        throw InvalidParameters("family needs gcd(b+2, 2a+1) = 1");

    FamilyInstance f;
    f.a = a;
    f.b = b;
    const long long l = b + 2, m = 2 * a + 1, n = a * b + b + 1;
    if (n != (a + 1) * l - m)
        throw InternalInconsistency("third generator identity failed");
    f.s = make_semigroup(l, m, n);
    f.conductor = gap_data(f.s).conductor;
    f.h = herzog_data(f.s);
    if (f.h.kind != RelCase::H1 || !(f.h.h1->e == Sextuple{1, a, 1, b, 1, 1}))
        throw InternalInconsistency("family relation data differs from (1,a,1,b,1,1)");
    f.eq = defining_equations(f.h);

    const Weights w{l, m, n};
    SparsePoly f1 = poly_monomial(w, 1, a + 1, 0, 0) - poly_monomial(w, 1, 0, 1, 1);
    SparsePoly f2 = poly_monomial(w, 1, 0, b + 1, 0) - poly_monomial(w, 1, a, 0, 1);
    SparsePoly f3 = poly_monomial(w, 1, 0, 0, 2) - poly_monomial(w, 1, 1, b, 0);
    if (!(f.eq.f[0] == f1) || !(f.eq.f[1] == f2) || !(f.eq.f[2] == f3))
        throw InternalInconsistency("family equations differ from the general ones");
    const long long d1 = (a + 1) * (b + 2), d2 = (2 * a + 1) * (b + 1),
                    d3 = 2 * a * b + 2 * b + 2;
    if (f.eq.d != std::vector<long long>{d1, d2, d3})
        throw InternalInconsistency("family degrees differ from the formulas");
    if (!(d1 < d3 && d3 < d2))
        throw InternalInconsistency("family degree ordering d1 < d3 < d2 failed");

    f.bres = bresinsky_reduce(f.eq);
    if (f.bres.c != 2 || f.bres.k != 1)
        throw InternalInconsistency("family reduction is not the c=2, k=1 one");
    SparsePoly g = poly_monomial(w, 1, 2 * a + 1, 0, 0) -
                   poly_monomial(w, 2, a, 1, 1) + poly_monomial(w, 1, 0, b + 2, 0);
    if (!(f.bres.g == g))
        throw InternalInconsistency("family surface differs from the closed form");
    if (!(f.bres.q == poly_monomial(w, 1, 0, 2, 0)))
        throw InternalInconsistency("family cofactor differs from y^2");
    SparsePoly lhs = f.eq.f[0] * f.eq.f[0] -
                     poly_monomial(w, 1, 0, 2, 0) * f.eq.f[2];
    if (!(lhs == poly_monomial(w, 1, 1, 0, 0) * g))
        throw InternalInconsistency("family identity f1^2 - y^2 f3 = x g failed");
    return f;
}

ConductorBounds conductor_bounds(const FamilyInstance& f) {
    ConductorBounds r;
    const long long l = f.s.l, m = f.s.m;
    const long long d2 = f.eq.d[1], d3 = f.eq.d[2];
    r.lhs = f.conductor + l;
    r.mid = d2 - (m / l) * l;
    r.rhs = d3;
    r.holds = r.lhs <= r.mid && r.mid < r.rhs;
    r.d2_bound = d2 >= f.conductor + 2 * l;
    r.d3_bound = d3 > f.conductor + l;
    return r;
}

ClauseReport family_clauses(const FamilyInstance& f, std::optional<long long> p,
                            std::optional<long long> q) {
    const long long l = f.s.l, m = f.s.m, n = f.s.n;
    if (p && *p <= m) throw InvalidTail("y-tail exponent must exceed m");
    if (q && *q <= n) throw InvalidTail("z-tail exponent must exceed n");

    ClauseReport r;
    r.p = p;
    r.q = q;
    r.canonical_p = f.conductor - 1 - l;
    r.canonical_p_valid = r.canonical_p > m;
    r.canonical_q = f.conductor - 1;
    if (p) r.delta = *p - m;
    if (q && (!r.delta || *q - n < *r.delta)) r.delta = *q - n;

    const long long d1 = f.eq.d[0];
    auto ineq = [&](std::optional<long long> lhs, long long rhs) {
        Inequality iq;
        iq.lhs = lhs;
        iq.rhs = rhs;
        iq.holds = !lhs.has_value() || *lhs >= rhs;
        return iq;
    };
    std::optional<long long> d1d;
    if (r.delta) d1d = d1 + *r.delta;
    r.semigroup_constant = ineq(d1d, f.conductor);
    r.stci = ineq(d1d, f.conductor + l);
    r.size_ok = f.a >= 3 && f.b >= 3;
    if (r.size_ok && !r.canonical_p_valid)
        throw InternalInconsistency("canonical tail exponent at most m despite a, b >= 3");
    r.nonmonomial_stci = ineq(d1 + q.value_or(r.canonical_q) - n, f.conductor + l);
    r.clause_c = r.size_ok && r.canonical_p_valid && r.nonmonomial_stci.holds;
    return r;
}

std::vector<ScanRow> family_scan(long long a_lo, long long a_hi, long long b_lo,
                                 long long b_hi, ScanMode mode) {
    if (a_lo < 2 || b_lo < 2 || a_hi > 64 || b_hi > 64 || a_lo > a_hi ||
        b_lo > b_hi)
        throw InvalidParameters("scan ranges must lie within 2..64");

    std::vector<ScanRow> rows;
    for (long long a = a_lo; a <= a_hi; ++a) {
        for (long long b = b_lo; b <= b_hi; ++b) {
            ScanRow row;
            row.a = a;
            row.b = b;
            if (b + 2 >= 2 * a + 1) {
                row.skip_reason = "b + 2 >= 2a + 1";
                rows.push_back(std::move(row));
                continue;
            }
            if (std::gcd(b + 2, 2 * a + 1) != 1) {
                row.skip_reason = "gcd(b+2, 2a+1) > 1";
                rows.push_back(std::move(row));
                continue;
            }
            FamilyInstance f = family_instance(a, b);
            row.valid = true;
            row.l = f.s.l;
            row.m = f.s.m;
            row.n = f.s.n;
            row.conductor = f.conductor;
            row.d = {f.eq.d[0], f.eq.d[1], f.eq.d[2]};
            row.bounds = conductor_bounds(f);
            row.moh = moh_check(f.s.l, f.s.m, f.s.n);

            std::optional<long long> p;
            if (mode == ScanMode::CanonicalP) {
                long long cp = f.conductor - 1 - f.s.l;
                if (cp > f.s.m) {
                    p = cp;
                } else {
                    GapData gd = gap_data(f.s);
                    for (long long g : gd.gaps)
                        if (g > f.s.m) {
                            p = g;
                            row.p_fallback = true;
                            break;
                        }
                }
            }
            row.p = p;
            row.clauses = family_clauses(f, p, std::nullopt);

            std::array<std::vector<TailTerm>, 3> tails{};
            if (p) tails[1].push_back(TailTerm{*p, Rat(1)});
            Parametrization par = make_parametrization(f.s, tails);
            StciCertificate cert = certify_stci(f.h, f.eq, par);
            row.verdict = cert.verdict;

            if (a == 2 && b == 2 && cert.verdict == CertVerdict::Certified)
                row.note = "certificate holds; germ known trivial";
            else if (a == 3 && b == 2)
                row.note = "germ known nonisomorphic to the monomial curve "
                           "(documented analysis, not computed)";
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace stci
