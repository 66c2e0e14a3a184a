#pragma once

#include "stci/bresinsky.hpp"
#include "stci/deform.hpp"
#include "stci/herzog.hpp"

namespace stci {

// One member of the two-parameter family (l, m, n) = (b+2, 2a+1, ab+b+1) with
// a, b >= 2, b+2 < 2a+1, gcd(b+2, 2a+1) = 1. The relation data is the
// sextuple (1, a, 1, b, 1, 1); equations f1 = x^{a+1} - y z,
// f2 = y^{b+1} - x^a z, f3 = z^2 - x y^b; degrees d1 = (a+1)(b+2),
// d2 = (2a+1)(b+1), d3 = 2ab+2b+2 (d1 < d3 < d2); surface
// g = x^{2a+1} - 2 x^a y z + y^{b+2} with k = 1, multiplier c = 2. All of it
// is cross-checked against the general classification and reduction.
struct FamilyInstance {
    long long a = 0, b = 0;
    NumericalSemigroup s;
    long long conductor = 0;
    HerzogData h;
    DefiningEquations eq;
    BresinskyData bres;
};

FamilyInstance family_instance(long long a, long long b);

// conductor + l <= d2 - floor(m/l)*l < d3, plus the two consequences
// d2 >= conductor + 2l and d3 > conductor + l.
struct ConductorBounds {
    long long lhs = 0, mid = 0, rhs = 0;
    bool holds = false;
    bool d2_bound = false;
    bool d3_bound = false;
};

ConductorBounds conductor_bounds(const FamilyInstance& f);

// The three deformation clauses for tails y: t^p (p > m), z: t^q (q > n),
// either absent. delta = min of the present offsets.
//   semigroup_constant: d1 + delta >= conductor.
//   stci:               d1 + delta >= conductor + l.
//   nonmonomial_stci:   a,b >= 3, canonical p = conductor-1-l > m, and
//                       d1 + q - n >= conductor + l (q defaults to
//                       conductor-1 when absent).
struct ClauseReport {
    std::optional<long long> p, q; // as given
    long long canonical_p = 0;     // conductor - 1 - l
    bool canonical_p_valid = false;
    long long canonical_q = 0;     // conductor - 1
    std::optional<long long> delta;
    Inequality semigroup_constant;
    Inequality stci;
    bool size_ok = false; // a, b >= 3
    Inequality nonmonomial_stci;
    bool clause_c = false; // size_ok && canonical_p_valid && nonmonomial_stci
};

ClauseReport family_clauses(const FamilyInstance& f, std::optional<long long> p,
                            std::optional<long long> q);

// Batch certification over a parameter rectangle. CanonicalP deforms each
// instance with the single y-tail t^p, p = conductor-1-l, falling back to the
// smallest gap above m when that is not above m. Certification rows carry
// exact arithmetic only (no series witnesses).
enum class ScanMode { Monomial, CanonicalP };

struct ScanRow {
    long long a = 0, b = 0;
    bool valid = false;
    std::string skip_reason; // when invalid
    long long l = 0, m = 0, n = 0, conductor = 0;
    std::array<long long, 3> d{0, 0, 0};
    std::optional<long long> p; // tail exponent used
    bool p_fallback = false;    // p is the smallest gap above m
    ConductorBounds bounds;
    ClauseReport clauses;
    CertVerdict verdict = CertVerdict::Undetermined;
    bool moh = false;
    std::string note;
};

std::vector<ScanRow> family_scan(long long a_lo, long long a_hi, long long b_lo,
                                 long long b_hi, ScanMode mode);

} // namespace stci
