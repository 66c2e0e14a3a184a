#include "stci/semigroup.hpp"
#include "stci/rational.hpp"

#include <algorithm>
#include <numeric>

namespace stci {

std::string rat_to_string(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in rational literal: " + s);
    return Rat(num, den);
}

Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

NumericalSemigroup make_semigroup(long long l, long long m, long long n) {
    if (l <= 0 || m <= 0 || n <= 0) throw ZeroGenerator();
    long long g = std::gcd(std::gcd(l, m), n);
    if (g != 1) throw NotNumerical(g);
    return NumericalSemigroup{l, m, n, std::gcd(l, m)};
}

std::vector<char> span_table(const std::vector<long long>& gens, long long bound) {
    std::vector<char> in(static_cast<size_t>(bound) + 1, 0);
    in[0] = 1;
    for (long long k = 1; k <= bound; ++k)
        for (long long g : gens)
            if (g <= k && in[static_cast<size_t>(k - g)]) {
                in[static_cast<size_t>(k)] = 1;
                break;
            }
    return in;
}

long long gap_search_bound(const NumericalSemigroup& s) {
    // Frobenius bound for <l,m,n>: reduce (l,m) by d = gcd(l,m), use the
    // two-generator bound on the reduced pair, undo the reduction. Equals
    // (l-1)(m-1) when d = 1.
    long long d = s.d;
    long long b = (s.l / d) * s.m - s.l - s.m + (d - 1) * s.n;
    return std::max(b, 0LL) + 1;
}

bool contains(const NumericalSemigroup& s, long long k) {
    if (k < 0) return false;
    auto in = span_table({s.l, s.m, s.n}, k);
    return in[static_cast<size_t>(k)] != 0;
}

GapData gap_data(const NumericalSemigroup& s) {
    long long bound = gap_search_bound(s);
    long long min_gen = std::min({s.l, s.m, s.n});
    auto in = span_table({s.l, s.m, s.n}, bound + min_gen);
    GapData g;
    for (long long k = 1; k <= bound; ++k)
        if (!in[static_cast<size_t>(k)]) g.gaps.push_back(k);
    g.frobenius = g.gaps.empty() ? -1 : g.gaps.back();
    g.conductor = g.frobenius + 1;
    // Soundness of the bound: the min_gen integers past the last found gap
    // must all be members, which forces every larger integer in as well.
    for (long long k = g.conductor; k < g.conductor + min_gen; ++k)
        if (!in[static_cast<size_t>(k)])
            throw InternalInconsistency("gap search bound too small");
    return g;
}

std::vector<long long> apery_set(const NumericalSemigroup& s, long long w) {
    if (!contains(s, w)) throw NotMember(w);
    long long conductor = gap_data(s).conductor;
    long long bound = conductor + w;
    auto in = span_table({s.l, s.m, s.n}, bound);
    std::vector<long long> ap(static_cast<size_t>(w), -1);
    long long found = 0;
    for (long long k = 0; k <= bound && found < w; ++k) {
        if (!in[static_cast<size_t>(k)]) continue;
        auto& slot = ap[static_cast<size_t>(k % w)];
        if (slot < 0) {
            slot = k;
            ++found;
        }
    }
    if (found < w) throw InternalInconsistency("apery search bound too small");
    return ap;
}

std::optional<Factorization> factorize(const NumericalSemigroup& s, long long k,
                                       long long min_x) {
    if (k < 0) return std::nullopt;
    for (long long x = k / s.l; x >= min_x; --x) {
        long long rem_x = k - x * s.l;
        for (long long y = 0; y * s.m <= rem_x; ++y) {
            long long rem = rem_x - y * s.m;
            if (rem % s.n == 0) return Factorization{x, y, rem / s.n};
        }
    }
    return std::nullopt;
}

} // namespace stci
