#include "stci/herzog.hpp"

#include <algorithm>
#include <numeric>

namespace stci {

namespace {

// Minimal a >= 1 with a*w ∈ <p, q> (monoid span; p, q need not be coprime).
// a <= min(p, q) since p*w ∈ <p>.
long long minimal_multiplier(long long w, long long p, long long q) {
    long long cap = std::min(p, q);
    auto in = span_table({p, q}, w * cap);
    for (long long a = 1; a <= cap; ++a)
        if (in[static_cast<size_t>(a * w)]) return a;
    throw InternalInconsistency("no multiple landed in the partner span");
}

// All (alpha, beta) >= 0 with alpha*p + beta*q = v.
std::vector<std::pair<long long, long long>> witnesses(long long v, long long p,
                                                       long long q) {
    std::vector<std::pair<long long, long long>> out;
    for (long long alpha = 0; alpha * p <= v; ++alpha) {
        long long rem = v - alpha * p;
        if (rem % q == 0) out.emplace_back(alpha, rem / q);
    }
    return out;
}

} // namespace

HerzogData herzog_data(const NumericalSemigroup& s) {
    const long long w[3] = {s.l, s.m, s.n};
    long long A[3];
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        A[i] = minimal_multiplier(w[i], w[j], w[k]);
    }

    // A pure relation between two generators at their minimal multipliers
    // shows up as equality of the minimal multiples.
    std::vector<std::pair<int, int>> pure;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (A[i] * w[i] == A[j] * w[j]) pure.emplace_back(i, j);

    HerzogData out;
    out.s = s;

    if (pure.empty()) {
        // Three-relation case. Witness order convention: relation of w[0]
        // splits over (w[1], w[2]), of w[1] over (w[0], w[2]), of w[2] over
        // (w[0], w[1]).
        auto wits1 = witnesses(A[0] * w[0], w[1], w[2]);
        auto wits2 = witnesses(A[1] * w[1], w[0], w[2]);
        auto wits3 = witnesses(A[2] * w[2], w[0], w[1]);
        for (auto* ws : {&wits1, &wits2, &wits3}) {
            if (ws->size() != 1)
                throw NonUniqueH1Witness(std::to_string(ws->size()) +
                                         " splittings of a minimal relation");
            if (ws->front().first <= 0 || ws->front().second <= 0)
                throw InternalInconsistency(
                    "no pure pair but a relation splits with a zero part");
        }
        H1Data h;
        h.a = A[0];
        h.b = A[1];
        h.c = A[2];
        h.e.b1 = wits1.front().first;
        h.e.c2 = wits1.front().second;
        h.e.a2 = wits2.front().first;
        h.e.c1 = wits2.front().second;
        h.e.a1 = wits3.front().first;
        h.e.b2 = wits3.front().second;
        if (h.a != h.e.a1 + h.e.a2 || h.b != h.e.b1 + h.e.b2 ||
            h.c != h.e.c1 + h.e.c2)
            throw InternalInconsistency("split coefficients do not sum to the multipliers");
        out.kind = RelCase::H1;
        out.h1 = h;
        return out;
    }

    // Two-relation case. With two or more pure pairs all three minimal
    // multiples coincide (overlap).
    H2Data h;
    int i, j, k;
    if (pure.size() > 1) {
        if (!(A[0] * w[0] == A[1] * w[1] && A[1] * w[1] == A[2] * w[2]))
            throw InternalInconsistency("multiple pure pairs without full overlap");
        h.subcase = H2Subcase::Overlap;
        i = 0, j = 1, k = 2;
    } else {
        std::tie(i, j) = pure.front();
        k = 3 - i - j;
        h.subcase = (i == 0 && j == 1)   ? H2Subcase::PureXY
                    : (i == 0 && j == 2) ? H2Subcase::PureXZ
                                         : H2Subcase::PureYZ;
    }
    h.perm = {i, j, k};
    h.a = A[i];
    h.b = A[j];
    h.c = A[k];
    // Second relation c*w3 = a1*w1 + b2*w2, witness with smallest a1; shifts
    // by the pure relation step (a, -b) make that the unique one in [0, a).
    auto wits = witnesses(h.c * w[k], w[i], w[j]);
    if (wits.empty())
        throw InternalInconsistency("minimal multiple lost its witnesses");
    h.a1 = wits.front().first;
    h.b2 = wits.front().second;
    if (h.a1 >= h.a)
        throw InternalInconsistency("canonical second row out of range");
    out.kind = RelCase::H2;
    out.h2 = h;
    return out;
}

std::vector<std::array<long long, 3>> relation_matrix(const HerzogData& h) {
    std::vector<std::array<long long, 3>> rows;
    if (h.kind == RelCase::H1) {
        const auto& e = h.h1->e;
        rows.push_back({h.h1->a, -e.b1, -e.c2});
        rows.push_back({-e.a2, h.h1->b, -e.c1});
        rows.push_back({-e.a1, -e.b2, h.h1->c});
    } else {
        const auto& d = *h.h2;
        std::array<long long, 3> r1{0, 0, 0}, r2{0, 0, 0};
        r1[static_cast<size_t>(d.perm[0])] = d.a;
        r1[static_cast<size_t>(d.perm[1])] = -d.b;
        r2[static_cast<size_t>(d.perm[0])] = -d.a1;
        r2[static_cast<size_t>(d.perm[1])] = -d.b2;
        r2[static_cast<size_t>(d.perm[2])] = d.c;
        rows.push_back(r1);
        rows.push_back(r2);
    }
    const long long w[3] = {h.s.l, h.s.m, h.s.n};
    for (const auto& r : rows)
        if (r[0] * w[0] + r[1] * w[1] + r[2] * w[2] != 0)
            throw InternalInconsistency("relation row does not annihilate the generators");
    return rows;
}

namespace {

SparsePoly mono(const Weights& w, long long ex, long long ey, long long ez) {
    return poly_monomial(w, 1, ex, ey, ez);
}

// Monomial with exponent e placed at original variable position pos.
SparsePoly var_power(const Weights& w, int pos, long long e) {
    return mono(w, pos == 0 ? e : 0, pos == 1 ? e : 0, pos == 2 ? e : 0);
}

void check_vanishing(const DefiningEquations& eq, const NumericalSemigroup& s) {
    long long t = *std::max_element(eq.d.begin(), eq.d.end()) + 1;
    TruncSeries X = series_monomial(t, 1, s.l), Y = series_monomial(t, 1, s.m),
                Z = series_monomial(t, 1, s.n);
    for (const auto& f : eq.f)
        if (!substitute(f, X, Y, Z, t).is_zero())
            throw InternalInconsistency("defining equation does not vanish on the monomial curve");
}

} // namespace

DefiningEquations defining_equations(const HerzogData& h) {
    DefiningEquations eq;
    eq.kind = h.kind;
    eq.w = Weights{h.s.l, h.s.m, h.s.n};

    if (h.kind == RelCase::H2) {
        const auto& d = *h.h2;
        SparsePoly g1 = var_power(eq.w, d.perm[0], d.a) - var_power(eq.w, d.perm[1], d.b);
        SparsePoly g2 = var_power(eq.w, d.perm[2], d.c) -
                        var_power(eq.w, d.perm[0], d.a1) * var_power(eq.w, d.perm[1], d.b2);
        eq.f = {g1, g2};
        const long long w[3] = {h.s.l, h.s.m, h.s.n};
        eq.d = {d.a * w[d.perm[0]], d.c * w[d.perm[2]]};
        check_vanishing(eq, h.s);
        return eq;
    }

    const auto& e = h.h1->e;
    const long long a = h.h1->a, b = h.h1->b, c = h.h1->c;
    SparsePoly f1 = mono(eq.w, a, 0, 0) - mono(eq.w, 0, e.b1, e.c2);
    SparsePoly f2 = mono(eq.w, 0, b, 0) - mono(eq.w, e.a2, 0, e.c1);
    SparsePoly f3 = mono(eq.w, 0, 0, c) - mono(eq.w, e.a1, e.b2, 0);
    eq.f = {f1, f2, f3};
    eq.d = {a * h.s.l, b * h.s.m, c * h.s.n};
    eq.h1 = h.h1;

    std::array<std::array<SparsePoly, 3>, 2> m0{{
        {mono(eq.w, 0, 0, e.c1), mono(eq.w, e.a1, 0, 0), mono(eq.w, 0, e.b1, 0)},
        {mono(eq.w, 0, e.b2, 0), mono(eq.w, 0, 0, e.c2), mono(eq.w, e.a2, 0, 0)},
    }};

    // Maximal minors are the defining equations up to sign.
    auto minor = [&](int drop) {
        int c1 = drop == 0 ? 1 : 0;
        int c2 = drop == 2 ? 1 : 2;
        return m0[0][static_cast<size_t>(c1)] * m0[1][static_cast<size_t>(c2)] -
               m0[0][static_cast<size_t>(c2)] * m0[1][static_cast<size_t>(c1)];
    };
    if (!(minor(0) == f1) || !(minor(1) == Rat(-1) * f2) || !(minor(2) == f3))
        throw InternalInconsistency("maximal minors differ from the defining equations");

    // Both rows of m0 are syzygies of (f1, f2, f3).
    for (const auto& row : m0) {
        SparsePoly acc = row[0] * f1 + row[1] * f2 + row[2] * f3;
        if (!acc.is_zero())
            throw InternalInconsistency("presentation matrix row is not a syzygy");
    }

    check_vanishing(eq, h.s);
    eq.m0 = m0;
    return eq;
}

// ------------------------------------------------------- inverse: 3 relations

Gs1Result gs1_forward(const Sextuple& t) {
    for (long long v : {t.a1, t.a2, t.b1, t.b2, t.c1, t.c2})
        if (v <= 0) throw Error("sextuple entries must be positive");
    long long a = t.a1 + t.a2, b = t.b1 + t.b2, c = t.c1 + t.c2;
    Gs1Result r;
    r.l = t.b1 * t.c1 + t.b1 * t.c2 + t.b2 * t.c2;
    r.m = t.a1 * t.c1 + t.a2 * t.c1 + t.a2 * t.c2;
    r.n = t.a1 * t.b1 + t.a1 * t.b2 + t.a2 * t.b2;
    if (r.l != t.b1 * c + t.b2 * t.c2 || r.l != t.b1 * t.c1 + b * t.c2 ||
        r.m != a * t.c1 + t.a2 * t.c2 || r.m != t.a1 * t.c1 + t.a2 * c ||
        r.n != t.a1 * b + t.a2 * t.b2 || r.n != t.a1 * t.b1 + a * t.b2)
        throw InternalInconsistency("contracted generator formulas disagree");
    // Principal 2x2 cofactors of the relation matrix.
    if (r.l != b * c - t.c1 * t.b2 || r.m != a * c - t.a1 * t.c2 ||
        r.n != a * b - t.a2 * t.b1)
        throw InternalInconsistency("generators differ from the matrix cofactors");
    r.e = std::gcd(std::gcd(r.l, r.m), r.n);
    return r;
}

Gs1Image gs1_is_image(const Sextuple& t) {
    Gs1Image out;
    out.forward = gs1_forward(t);
    out.is_image = out.forward.e == 1;
    if (!out.is_image) return out;
    HerzogData h = herzog_data(make_semigroup(out.forward.l, out.forward.m, out.forward.n));
    if (h.kind != RelCase::H1 || !(h.h1->e == t))
        throw InternalInconsistency("round trip did not reproduce the sextuple");
    out.round_trip = h.h1;
    return out;
}

// ------------------------------------------------------- inverse: 2 relations

Gs2Result gs2_forward(const Gs2Input& in) {
    if (in.a <= 0 || in.b <= 0 || in.c <= 0 || in.a1 < 0 || in.b2 < 0)
        throw Error("multipliers must be positive, split entries nonnegative");
    long long num = in.a1 * in.b + in.a * in.b2;
    if (num == 0) throw DegenerateRelation();
    long long g = std::gcd(num, in.c);
    Gs2Result r;
    r.dprime = in.c / g;
    r.n = num / g;
    r.l = in.b * r.dprime;
    r.m = in.a * r.dprime;
    return r;
}

Gs2Image gs2_is_image(const Gs2Input& in) {
    Gs2Image out;
    out.forward = gs2_forward(in);
    out.coprime_ab = std::gcd(in.a, in.b) == 1;

    out.row_gcd_ok = true;
    for (long long q = 0; q * in.a <= in.a1; ++q) {
        long long x = in.a1 - q * in.a;      // |-a1 + q a|
        long long y = in.b2 + q * in.b;      // |-b2 - q b|
        if (std::gcd(std::gcd(x, y), in.c) != 1) {
            out.row_gcd_ok = false;
            break;
        }
    }

    if (!out.coprime_ab) {
        out.reason = "pure relation multipliers are not coprime";
        return out;
    }
    if (!out.row_gcd_ok) {
        out.reason = "a shifted second row has a common factor";
        return out;
    }

    // Recompute the classification of the constructed triple and compare
    // against the canonicalized input data.
    long long g = std::gcd(std::gcd(out.forward.l, out.forward.m), out.forward.n);
    if (g != 1) {
        out.reason = "constructed triple is not numerical";
        return out;
    }
    HerzogData h = herzog_data(make_semigroup(out.forward.l, out.forward.m, out.forward.n));
    if (h.kind != RelCase::H1) {
        const auto& d = *h.h2;
        bool first_pair = d.perm[0] == 0 && d.perm[1] == 1;
        long long q = in.a1 / in.a;
        long long a1c = in.a1 - q * in.a;
        long long b2c = in.b2 + q * in.b;
        out.recomputation_ok = first_pair && d.a == in.a && d.b == in.b &&
                               d.c == in.c && d.a1 == a1c && d.b2 == b2c;
    }
    if (!out.recomputation_ok) {
        out.reason = h.kind == RelCase::H1
                         ? "constructed triple has three minimal relations"
                         : "input relations are not the minimal ones of the triple";
        return out;
    }
    out.is_image = true;
    return out;
}

XzBinomial xz_binomial_exponents(const NumericalSemigroup& s, const H1Data& h) {
    XzBinomial r;
    r.g = std::gcd(h.e.b1, h.e.b2);
    if (s.n % r.g != 0 || s.l % r.g != 0)
        throw InternalInconsistency("gcd(b1,b2) does not divide the pure pair");
    r.nt = s.n / r.g;
    r.lt = s.l / r.g;
    if (std::gcd(r.nt, r.lt) != 1)
        throw InternalInconsistency("reduced pure pair is not coprime");
    if (r.nt != s.n / std::gcd(s.l, s.n))
        throw InternalInconsistency("gcd(b1,b2) differs from gcd(l,n)");
    return r;
}

} // namespace stci
