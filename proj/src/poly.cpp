#include "stci/poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace stci {

SparsePoly poly_zero(const Weights& w) { return SparsePoly{w, {}}; }

SparsePoly poly_monomial(const Weights& w, const Rat& c, long long ex,
                         long long ey, long long ez, long long es) {
    SparsePoly p{w, {}};
    if (c != 0) p.terms[Exps{ex, ey, ez, es}] = c;
    return p;
}

void poly_add_term(SparsePoly& p, const Exps& e, const Rat& c) {
    auto it = p.terms.find(e);
    if (it == p.terms.end()) {
        if (c != 0) p.terms.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
}

static void require_same_weights(const SparsePoly& a, const SparsePoly& b) {
    if (!(a.w == b.w)) throw WeightMismatch();
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    require_same_weights(a, b);
    SparsePoly r = a;
    for (const auto& [e, c] : b.terms) poly_add_term(r, e, c);
    return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    require_same_weights(a, b);
    SparsePoly r = a;
    for (const auto& [e, c] : b.terms) poly_add_term(r, e, -c);
    return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    require_same_weights(a, b);
    SparsePoly r = poly_zero(a.w);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms)
            poly_add_term(r, Exps{ea.x + eb.x, ea.y + eb.y, ea.z + eb.z, ea.s + eb.s},
                          ca * cb);
    return r;
}

SparsePoly operator*(const Rat& c, const SparsePoly& a) {
    SparsePoly r = poly_zero(a.w);
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms) r.terms[e] = c * k;
    return r;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.w == b.w && a.terms == b.terms;
}

SparsePoly poly_pow(const SparsePoly& a, long long e) {
    if (e < 0) throw Error("negative polynomial power");
    SparsePoly acc = poly_monomial(a.w, 1, 0, 0, 0, 0);
    SparsePoly base = a;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

long long weighted_order(const SparsePoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    long long best = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        long long d = p.degree_of(e);
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

SparsePoly initial_part(const SparsePoly& p) {
    long long d = weighted_order(p);
    SparsePoly r = poly_zero(p.w);
    for (const auto& [e, c] : p.terms)
        if (p.degree_of(e) == d) r.terms[e] = c;
    return r;
}

std::optional<long long> homogeneous_degree(const SparsePoly& p) {
    if (p.is_zero()) return std::nullopt;
    long long d = p.degree_of(p.terms.begin()->first);
    for (const auto& [e, c] : p.terms)
        if (p.degree_of(e) != d) return std::nullopt;
    return d;
}

// ---------------------------------------------------------------- series --

TruncSeries series_zero(long long trunc) { return TruncSeries{{}, trunc, false}; }

TruncSeries series_monomial(long long trunc, const Rat& c, long long et, long long es) {
    TruncSeries r = series_zero(trunc);
    series_add_term(r, et, es, c);
    return r;
}

void series_add_term(TruncSeries& r, long long et, long long es, const Rat& c) {
    if (c == 0) return;
    if (et >= r.trunc) {
        r.truncated = true;
        return;
    }
    auto key = std::make_pair(et, es);
    auto it = r.terms.find(key);
    if (it == r.terms.end()) {
        r.terms.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) r.terms.erase(it);
}

static TruncSeries retruncate(const TruncSeries& a, long long trunc) {
    if (trunc >= a.trunc) {
        TruncSeries r = a;
        r.trunc = trunc; // no information past a.trunc; keep the flag
        return r;
    }
    TruncSeries r = series_zero(trunc);
    r.truncated = a.truncated;
    for (const auto& [e, c] : a.terms) series_add_term(r, e.first, e.second, c);
    return r;
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    long long t = std::min(a.trunc, b.trunc);
    TruncSeries r = retruncate(a, t);
    r.truncated = r.truncated || b.truncated;
    for (const auto& [e, c] : b.terms) series_add_term(r, e.first, e.second, c);
    return r;
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
    long long t = std::min(a.trunc, b.trunc);
    TruncSeries r = retruncate(a, t);
    r.truncated = r.truncated || b.truncated;
    for (const auto& [e, c] : b.terms) series_add_term(r, e.first, e.second, -c);
    return r;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    long long t = std::min(a.trunc, b.trunc);
    TruncSeries r = series_zero(t);
    r.truncated = a.truncated || b.truncated;
    for (const auto& [ea, ca] : a.terms) {
        if (ea.first >= t) {
            r.truncated = true;
            continue;
        }
        for (const auto& [eb, cb] : b.terms)
            series_add_term(r, ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
    return r;
}

TruncSeries series_scale(const Rat& c, const TruncSeries& a) {
    TruncSeries r = series_zero(a.trunc);
    r.truncated = a.truncated;
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms) r.terms[e] = c * k;
    return r;
}

long long series_valuation(const TruncSeries& a) {
    if (a.is_zero()) throw ValuationOfZero();
    long long best = a.terms.begin()->first.first;
    for (const auto& [e, c] : a.terms) best = std::min(best, e.first);
    return best;
}

TruncSeries substitute(const SparsePoly& p, const TruncSeries& X,
                       const TruncSeries& Y, const TruncSeries& Z,
                       long long trunc) {
    if (X.trunc != trunc || Y.trunc != trunc || Z.trunc != trunc)
        throw Error("substitution series must share the truncation order");
    // Incremental power tables; exponents in practice are small.
    auto powers = [&](const TruncSeries& g, long long emax) {
        std::vector<TruncSeries> ps;
        ps.push_back(series_monomial(trunc, 1, 0, 0));
        for (long long i = 1; i <= emax; ++i) ps.push_back(series_mul(ps.back(), g));
        return ps;
    };
    long long mx = 0, my = 0, mz = 0;
    for (const auto& [e, c] : p.terms) {
        mx = std::max(mx, e.x);
        my = std::max(my, e.y);
        mz = std::max(mz, e.z);
    }
    auto px = powers(X, mx), py = powers(Y, my), pz = powers(Z, mz);
    TruncSeries r = series_zero(trunc);
    for (const auto& [e, c] : p.terms) {
        TruncSeries term = series_mul(px[static_cast<size_t>(e.x)],
                                      py[static_cast<size_t>(e.y)]);
        term = series_mul(term, pz[static_cast<size_t>(e.z)]);
        // multiply by c * s^{e.s}
        TruncSeries shifted = series_zero(trunc);
        shifted.truncated = term.truncated;
        for (const auto& [te, tc] : term.terms)
            series_add_term(shifted, te.first, te.second + e.s, c * tc);
        r = series_add(r, shifted);
    }
    if (auto d = homogeneous_degree(p)) {
        for (const auto& [e, c] : r.terms)
            if (e.first - e.second != *d)
                throw InternalInconsistency("graded substitution produced a term off the grading");
    }
    return r;
}

// -------------------------------------------------------------- rendering --

// Within one weighted degree: reverse-lexicographic on (x,y,z), i.e. the term
// whose difference vector ends in a negative entry is the larger; s breaks
// remaining ties.
static bool display_before(const SparsePoly& p, const Exps& a, const Exps& b) {
    long long da = p.degree_of(a), db = p.degree_of(b);
    if (da != db) return da > db;
    long long d[3] = {a.x - b.x, a.y - b.y, a.z - b.z};
    for (int i = 2; i >= 0; --i)
        if (d[i] != 0) return d[i] < 0;
    return a.s < b.s;
}

static void append_factor(std::string& s, const char* v, long long e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e != 1) s += "^" + std::to_string(e);
}

static std::string term_body(const Exps& e) {
    std::string s;
    append_factor(s, "x", e.x);
    append_factor(s, "y", e.y);
    append_factor(s, "z", e.z);
    append_factor(s, "s", e.s);
    return s;
}

static std::string join_terms(const std::vector<std::pair<std::string, Rat>>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [body, c] : parts) {
        Rat a = c < 0 ? Rat(-c) : c;
        std::string mag = rat_to_string(a);
        std::string piece;
        if (body.empty()) piece = mag;
        else if (mag == "1") piece = body;
        else piece = mag + "*" + body;
        if (first) {
            out = (c < 0 ? "-" : "") + piece;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + piece;
        }
    }
    return out;
}

std::string poly_to_string(const SparsePoly& p) {
    std::vector<std::pair<Exps, Rat>> ts(p.terms.begin(), p.terms.end());
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        return display_before(p, a.first, b.first);
    });
    std::vector<std::pair<std::string, Rat>> parts;
    for (const auto& [e, c] : ts) parts.emplace_back(term_body(e), c);
    return join_terms(parts);
}

std::string series_to_string(const TruncSeries& a) {
    std::vector<std::pair<std::string, Rat>> parts;
    for (const auto& [e, c] : a.terms) { // map order is ascending (e_t, e_s)
        std::string body;
        append_factor(body, "s", e.second);
        append_factor(body, "t", e.first);
        parts.emplace_back(body, c);
    }
    return join_terms(parts);
}

} // namespace stci
