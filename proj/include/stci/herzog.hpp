#pragma once

#include "stci/poly.hpp"
#include "stci/semigroup.hpp"

#include <array>
#include <optional>
#include <vector>

namespace stci {

// Classification of the minimal relations of a semigroup generated by three
// elements: either three relations, all six split coefficients positive and
// unique (H1, the non-complete-intersection case), or two relations, one of
// them pure between a pair of generators (H2).
enum class RelCase { H1, H2 };

// Split exponents of the three H1 relations:
//   a*l = b1*m + c2*n,  b*m = a2*l + c1*n,  c*n = a1*l + b2*m,
// with a = a1+a2, b = b1+b2, c = c1+c2.
struct Sextuple {
    long long a1 = 0, a2 = 0, b1 = 0, b2 = 0, c1 = 0, c2 = 0;
    friend bool operator==(const Sextuple&, const Sextuple&) = default;
};

struct H1Data {
    long long a = 0, b = 0, c = 0; // minimal multipliers of l, m, n
    Sextuple e;
};

enum class H2Subcase { PureXY, PureXZ, PureYZ, Overlap };

// Two-relation case, written in permuted variables (w1,w2,w3):
//   a*w1 = b*w2   and   c*w3 = a1*w1 + b2*w2,
// second row canonicalized so that 0 <= a1 < a.
struct H2Data {
    H2Subcase subcase = H2Subcase::PureXY;
    std::array<int, 3> perm{0, 1, 2}; // original positions of (w1,w2,w3)
    long long a = 0, b = 0, c = 0;
    long long a1 = 0, b2 = 0;
};

struct HerzogData {
    NumericalSemigroup s;
    RelCase kind = RelCase::H1;
    std::optional<H1Data> h1;
    std::optional<H2Data> h2;
};

HerzogData herzog_data(const NumericalSemigroup& s);

// Relation matrix rows in the original variable order: 3 rows for H1, 2 for
// H2. Every row r satisfies r[0]*l + r[1]*m + r[2]*n = 0.
std::vector<std::array<long long, 3>> relation_matrix(const HerzogData& h);

// Defining equations of the associated monomial curve. In H1 these are the
// signed maximal minors of the 2x3 matrix m0 = ((z^c1, x^a1, y^b1),
// (y^b2, z^c2, x^a2)):
//   f1 = x^a - y^b1 z^c2, f2 = y^b - x^a2 z^c1, f3 = z^c - x^a1 y^b2,
// and the rows of m0 are syzygies of (f1,f2,f3). In H2 there are two
// binomials. Construction cross-checks minors, syzygies, and vanishing under
// (x,y,z) -> (t^l, t^m, t^n).
struct DefiningEquations {
    RelCase kind = RelCase::H1;
    Weights w;
    std::vector<SparsePoly> f;
    std::vector<long long> d; // weighted degrees of f
    std::optional<std::array<std::array<SparsePoly, 3>, 2>> m0;
    std::optional<H1Data> h1; // carried for downstream consumers (k = a1*c2)
};

DefiningEquations defining_equations(const HerzogData& h);

// ---- inverse constructions: from relation data back to generators ----

// From a positive sextuple, the candidate generator triple
//   l' = b1c1 + b1c2 + b2c2, m' = a1c1 + a2c1 + a2c2, n' = a1b1 + a1b2 + a2b2
// (each also computable in two contracted forms, asserted equal; they are the
// principal 2x2 cofactors of the relation matrix) and e' = gcd(l',m',n').
struct Gs1Result {
    long long l = 0, m = 0, n = 0;
    long long e = 0;
};

Gs1Result gs1_forward(const Sextuple& t);

// The sextuple arises from an actual semigroup iff e' = 1; in that case the
// recomputed classification of <l',m',n'> reproduces the sextuple exactly
// (asserted).
struct Gs1Image {
    Gs1Result forward;
    bool is_image = false;
    std::optional<H1Data> round_trip;
};

Gs1Image gs1_is_image(const Sextuple& t);

// Two-relation inverse: input the matrix data (a, b, c, a1, b2).
struct Gs2Input {
    long long a = 0, b = 0, c = 0, a1 = 0, b2 = 0;
};

struct Gs2Result {
    long long l = 0, m = 0, n = 0;
    long long dprime = 0; // c / gcd(a1*b + a*b2, c)
};

Gs2Result gs2_forward(const Gs2Input& in);

// Image test: gcd(a,b) = 1, the row-gcd condition over the admissible shifts
// q in [0, floor(a1/a)], and recomputation of the minimal relations of the
// constructed triple, which must land in the matching two-relation shape with
// the same canonicalized data.
struct Gs2Image {
    Gs2Result forward;
    bool coprime_ab = false;
    bool row_gcd_ok = false;
    bool recomputation_ok = false;
    bool is_image = false;
    std::string reason; // empty when is_image
};

Gs2Image gs2_is_image(const Gs2Input& in);

// Exponents of the pure binomial x^nt - z^lt in the kernel: the coprime
// reduction of (n, l) by g = gcd(b1, b2). Asserts gcd(nt, lt) = 1 and the
// independent characterization nt = n / gcd(l, n).
struct XzBinomial {
    long long nt = 0, lt = 0, g = 0;
};

XzBinomial xz_binomial_exponents(const NumericalSemigroup& s, const H1Data& h);

} // namespace stci
