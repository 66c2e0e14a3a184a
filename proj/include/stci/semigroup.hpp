#pragma once

#include "stci/errors.hpp"

#include <optional>
#include <vector>

namespace stci {

// Additive submonoid of N generated by three positive integers with
// gcd(l,m,n) = 1. Generators are kept in the order given; no l < m < n
// assumption is made anywhere. d = gcd(l,m) is cached because the pair (l,m)
// plays a distinguished role in the curve constructions.
struct NumericalSemigroup {
    long long l = 0, m = 0, n = 0;
    long long d = 0; // gcd(l, m)
};

NumericalSemigroup make_semigroup(long long l, long long m, long long n);

bool contains(const NumericalSemigroup& s, long long k);

struct GapData {
    std::vector<long long> gaps; // sorted ascending
    long long frobenius = -1;    // max gap; -1 when the semigroup is N
    long long conductor = 0;     // frobenius + 1
};

GapData gap_data(const NumericalSemigroup& s);

// Least member in each residue class mod w, indexed by residue 0..w-1.
// w must be a member (typically a generator).
std::vector<long long> apery_set(const NumericalSemigroup& s, long long w);

struct Factorization {
    long long x = 0, y = 0, z = 0; // k = x*l + y*m + z*n
};

// Representation of k over the generators with x >= min_x, if any exists.
// Deterministic choice: largest x first, then smallest y (z is determined).
// The large-x preference matches the divisibility-by-x^k arguments used by
// the deformation lift.
std::optional<Factorization> factorize(const NumericalSemigroup& s, long long k,
                                       long long min_x = 0);

// --- plumbing shared with the relation search ---

// Membership table (size bound+1) of the monoid generated by gens; gens need
// not generate a numerical semigroup.
std::vector<char> span_table(const std::vector<long long>& gens, long long bound);

// Upper bound B such that every integer >= B is a member; reduces the pair
// (l,m) by its gcd so inputs like <4,6,7> are handled.
long long gap_search_bound(const NumericalSemigroup& s);

} // namespace stci
