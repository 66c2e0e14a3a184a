#pragma once

#include "stci/herzog.hpp"
#include "stci/poly.hpp"

namespace stci {

// Exact witness of the set-theoretic complete intersection identity
//   f1^c = q * f3 + x^k * g,   k = a1 * c2,
// obtained by eliminating z from f1^c with the rewrite z^c = f3 + x^a1 y^b2
// until no term has z-exponent >= c, then splitting off the guaranteed x^k.
// The identity is re-verified by exact multiplication, and the residue of g
// modulo (x, z) is sign * y^l (sign = (-1)^c recorded, never normalized away).
struct BresinskyData {
    long long c = 0;      // multiplier of n, exponent on f1
    long long k = 0;      // a1 * c2
    SparsePoly q;         // cofactor of f3, homogeneous of degree c*d1 - d3
    SparsePoly g;         // surface equation, homogeneous of degree c*d1 - k*l
    int residue_sign = 1; // g == residue_sign * y^l  mod (x, z)
    bool identity_verified = false;
};

BresinskyData bresinsky_reduce(const DefiningEquations& eq);

// The two monomial syzygies tying f2 to f1 and f3:
//   x^a1 * f2 = -y^b1 * f3 - z^c1 * f1,
//   z^c2 * f2 = -x^a2 * f3 - y^b2 * f1,
// i.e. the rows of the presentation matrix. Throws on failure.
void syzygy_check(const DefiningEquations& eq);

// Plane-curve criterion for (t^l, t^m + ..., ...) germs:
// gcd(l, m) = 1, l < m, and (l - 2) * m < n.
bool moh_check(long long l, long long m, long long n);

} // namespace stci
