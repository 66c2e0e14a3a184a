#pragma once

#include "stci/errors.hpp"
#include "stci/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace stci {

// Weighted grading deg(x,y,z) = (l,m,n), deg s = -1, deg t = +1. Every
// polynomial carries its weights; mixing weights is an error, not a silent
// reinterpretation.
struct Weights {
    long long l = 0, m = 0, n = 0;
    friend bool operator==(const Weights&, const Weights&) = default;
};

struct Exps {
    long long x = 0, y = 0, z = 0, s = 0;
    friend auto operator<=>(const Exps&, const Exps&) = default;
};

// Sparse exact polynomial in x, y, z, s. Invariant: no zero coefficients are
// stored.
struct SparsePoly {
    Weights w;
    std::map<Exps, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    long long degree_of(const Exps& e) const {
        return e.x * w.l + e.y * w.m + e.z * w.n - e.s;
    }
};

SparsePoly poly_zero(const Weights& w);
SparsePoly poly_monomial(const Weights& w, const Rat& c, long long ex,
                         long long ey, long long ez, long long es = 0);

void poly_add_term(SparsePoly& p, const Exps& e, const Rat& c);

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator*(const Rat& c, const SparsePoly& a);
bool operator==(const SparsePoly& a, const SparsePoly& b);

// Exponentiation by repeated squaring; e >= 0.
SparsePoly poly_pow(const SparsePoly& a, long long e);

// Minimal weighted degree over the terms of p; the sum of the terms attaining
// it. Both reject the zero polynomial.
long long weighted_order(const SparsePoly& p);
SparsePoly initial_part(const SparsePoly& p);

// All terms share one weighted degree (the zero polynomial is homogeneous of
// any degree; reported as nullopt).
std::optional<long long> homogeneous_degree(const SparsePoly& p);

// Truncated exact series in t and s: terms e_t < trunc, anything at or above
// trunc is dropped and the drop is recorded. A set flag never resets.
struct TruncSeries {
    std::map<std::pair<long long, long long>, Rat> terms; // (e_t, e_s) -> coeff
    long long trunc = 0;
    bool truncated = false;

    bool is_zero() const { return terms.empty(); }
};

TruncSeries series_zero(long long trunc);
TruncSeries series_monomial(long long trunc, const Rat& c, long long et,
                            long long es = 0);

void series_add_term(TruncSeries& r, long long et, long long es, const Rat& c);

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_scale(const Rat& c, const TruncSeries& a);

// t-adic valuation: least e_t of a nonzero term. Rejects the (stored-)zero
// series; callers must consult .truncated before claiming the underlying
// object is zero.
long long series_valuation(const TruncSeries& a);

// p(X, Y, Z) with s left alone, truncated at trunc. X, Y, Z substitute for
// x, y, z and must share the truncation order. When p is homogeneous of
// weighted degree d the result satisfies e_t - e_s = d on every term
// (checked internally).
TruncSeries substitute(const SparsePoly& p, const TruncSeries& X,
                       const TruncSeries& Y, const TruncSeries& Z,
                       long long trunc);

// Canonical text forms used by golden tests and the CLI: polynomial terms
// sorted by descending weighted degree, ties by reverse-lexicographic
// comparison on (x,y,z) then by s; series terms by ascending (e_t, e_s).
std::string poly_to_string(const SparsePoly& p);
std::string series_to_string(const TruncSeries& a);

} // namespace stci
