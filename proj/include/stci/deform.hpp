#pragma once

#include "stci/herzog.hpp"
#include "stci/poly.hpp"

#include <optional>
#include <string>

namespace stci {

// ---- deformed parametrizations -------------------------------------------

// One tail term c * t^e of a deformed coordinate.
struct TailTerm {
    long long e = 0;
    Rat c;
};

// Deformed space-curve parametrization
//   xi_j = t^{b_j} + sum over tails (c * t^e * s^{e - b_j}),   e > b_j,
// where b = (l, m, n) are the base exponents. shift[j] is the least tail
// offset of coordinate j (nullopt = no tail), delta the minimum over j
// (nullopt when every tail is empty, i.e. the monomial curve).
struct Parametrization {
    NumericalSemigroup s;
    std::array<std::vector<TailTerm>, 3> tails; // x, y, z
    std::array<std::optional<long long>, 3> shift;
    std::optional<long long> delta;
};

// Validates exponents (strictly above base, no duplicates) and coefficients
// (nonzero), sorts tails, computes the shifts.
Parametrization make_parametrization(const NumericalSemigroup& s,
                                     const std::array<std::vector<TailTerm>, 3>& tails);

// The three coordinate series truncated at T, with the s-grading kept
// (every term satisfies e_t - e_s = base weight).
std::array<TruncSeries, 3> parametrization_series(const Parametrization& p, long long T);

// The same with s specialized to 1 (univariate in t) for valuation work.
std::array<TruncSeries, 3> parametrization_series_s1(const Parametrization& p, long long T);

// ---- value semigroup of the deformed curve --------------------------------

enum class ValueVerdict { EqualsGamma, ExceedsGamma, Undetermined };

// Provenance of a newly attained value: the series whose reduction exposed it
// minus the table representative it cancelled against. Labels are exponent
// triples in the coordinates when the series is an unreduced monomial.
struct CancellationWitness {
    long long value = 0;
    std::optional<std::array<long long, 3>> mono_a; // reduced combination
    std::optional<std::array<long long, 3>> mono_b; // table representative
};

struct ValueSemigroupData {
    long long conductor = 0;
    long long trunc = 0;
    std::vector<long long> values; // attained valuations < trunc, sorted
    std::vector<long long> extra;  // attained gap values (all < conductor)
    std::vector<CancellationWitness> witnesses; // first discovery per extra value
    ValueVerdict verdict = ValueVerdict::Undetermined;
    std::string reason; // nonempty iff Undetermined
};

// Subduction over the conductor window: seeds the three coordinates, closes
// under products of claimed representatives, reduces equal-valuation
// collisions, and records every value attained below the conductor. Gap
// values can only occur below the conductor, so the verdict is exact.
// Throws TruncationTooSmall when T <= conductor.
ValueSemigroupData value_semigroup(const Parametrization& p, long long T);

// ---- relation lifting ------------------------------------------------------

struct LiftEquation {
    SparsePoly fprime; // homogeneous of weighted degree d_i + 1 (s counts -1)
    SparsePoly F;      // f_i - s * fprime
    std::optional<long long> ord_margin; // ord(fprime(x,y,z,1)) - d_i; nullopt = infinite
    std::optional<long long> x_div; // largest e with x^e | fprime; nullopt = infinite
    std::optional<long long> jump;  // residual valuation outside the semigroup
};

struct LiftData {
    long long trunc = 0;
    std::vector<LiftEquation> eq;
    bool any_jump = false;
    bool verified = false; // every residual vanished below trunc, no jumps
};

// Greedy graded lift of each defining equation through the deformation:
// peels the lowest residual term c*t^u*s^v, factors u over the generators
// (preferring x-exponent >= k when u >= conductor + k*l for the first and
// last equation), and accumulates c*x^a*y^b*z^g*s^{v-1} into fprime so that
// f_i(xi) = fprime_i(xi, s) * s holds below T (re-verified by substitution).
LiftData lift_relations(const DefiningEquations& e, const Parametrization& p,
                        long long T);

// ---- certificates ----------------------------------------------------------

struct Inequality {
    std::optional<long long> lhs; // nullopt = infinite (no tails)
    long long rhs = 0;
    bool holds = false;
};

enum class CertVerdict { Certified, NotCertified, Undetermined };

// Numeric certificate that the deformed parametrization keeps the value
// semigroup (semigroup_constancy: min d + delta >= conductor) and stays a
// set-theoretic complete intersection (stci_bound:
// min(d1, d2 + k*l, d3) + delta >= conductor + k*l, with the equivalent
// split form asserted). Certified means the bound holds; NotCertified means
// the criterion is silent, not a disproof.
struct StciCertificate {
    NumericalSemigroup s;
    long long conductor = 0;
    RelCase kind = RelCase::H1;
    std::vector<long long> d;
    long long k = 0; // a1 * c2
    std::optional<long long> delta;
    Inequality semigroup_constancy; // min d + delta >= conductor
    Inequality stci_bound;          // min(d1, d2+k*l, d3) + delta >= conductor + k*l
    Inequality stci_bound_xz;       // min(d1, d3) + delta >= conductor + k*l
    Inequality stci_bound_y;        // d2 + delta >= conductor
    CertVerdict verdict = CertVerdict::Undetermined;
    std::string note;
    std::optional<ValueSemigroupData> value_check;
    std::optional<LiftData> lift;
    std::optional<long long> one_form_val; // when the one-form shape applies
    std::optional<bool> nonmonomial;       // one_form_val outside the semigroup
};

StciCertificate certify_stci(const HerzogData& h, const DefiningEquations& e,
                             const Parametrization& p,
                             std::optional<ValueSemigroupData> vs = {},
                             std::optional<LiftData> lift = {});

// Default series truncation: conductor + max(d) + k*l + 8*l.
long long default_truncation(const NumericalSemigroup& s,
                             const std::vector<long long>& d, long long k);

// ---- one-form witness ------------------------------------------------------

// Valuation (order + 1) of m*eta*d(xi) - l*xi*d(eta) on the deformed curve,
// for the shape "x-tail empty, y-tail a single term t^p" (z-tail ignored);
// equals p + l. Throws ShapeMismatch otherwise.
long long one_form_valuation(const Parametrization& p);

// True iff one_form_valuation(p) is a gap: the deformed germ cannot be the
// monomial germ.
bool nonmonomial_witness(const Parametrization& p);

} // namespace stci
