#include "stci/deform.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace stci {

Parametrization make_parametrization(const NumericalSemigroup& s,
                                     const std::array<std::vector<TailTerm>, 3>& tails) {
    Parametrization p;
    p.s = s;
    p.tails = tails;
    const long long base[3] = {s.l, s.m, s.n};
    for (int j = 0; j < 3; ++j) {
        auto& ts = p.tails[static_cast<size_t>(j)];
        std::sort(ts.begin(), ts.end(),
                  [](const TailTerm& a, const TailTerm& b) { return a.e < b.e; });
        long long prev = -1;
        for (const auto& t : ts) {
            if (t.e <= base[j]) throw TailAtOrBelowBase(t.e, base[j]);
            if (t.e == prev) throw InvalidTail("duplicate tail exponent");
            if (t.c == 0) throw InvalidTail("zero tail coefficient");
            prev = t.e;
        }
        if (!ts.empty()) p.shift[static_cast<size_t>(j)] = ts.front().e - base[j];
    }
    for (const auto& sh : p.shift)
        if (sh && (!p.delta || *sh < *p.delta)) p.delta = *sh;
    return p;
}

std::array<TruncSeries, 3> parametrization_series(const Parametrization& p,
                                                  long long T) {
    const long long base[3] = {p.s.l, p.s.m, p.s.n};
    std::array<TruncSeries, 3> out{series_zero(T), series_zero(T), series_zero(T)};
    for (int j = 0; j < 3; ++j) {
        TruncSeries& r = out[static_cast<size_t>(j)];
        series_add_term(r, base[j], 0, 1);
        if (base[j] >= T) r.truncated = true;
        for (const auto& t : p.tails[static_cast<size_t>(j)]) {
            series_add_term(r, t.e, t.e - base[j], t.c);
            if (t.e >= T) r.truncated = true;
        }
    }
    return out;
}

std::array<TruncSeries, 3> parametrization_series_s1(const Parametrization& p,
                                                     long long T) {
    auto graded = parametrization_series(p, T);
    std::array<TruncSeries, 3> out{series_zero(T), series_zero(T), series_zero(T)};
    for (int j = 0; j < 3; ++j) {
        out[static_cast<size_t>(j)].truncated = graded[static_cast<size_t>(j)].truncated;
        for (const auto& [e, c] : graded[static_cast<size_t>(j)].terms)
            series_add_term(out[static_cast<size_t>(j)], e.first, 0, c);
    }
    return out;
}

// ------------------------------------------------------------ subduction --

namespace {

using Label = std::array<long long, 3>;

struct TableEntry {
    TruncSeries rep; // monic
    std::optional<Label> label;
};

struct PendingItem {
    long long value = 0;   // valuation at insertion
    int unlabeled = 0;     // labeled items first (deterministic witnesses)
    Label label{0, 0, 0};  // lexicographic tie-break among labeled items
    long long seq = 0;     // insertion order, makes the key total
    TruncSeries ser;
    std::optional<Label> origin;

    bool operator<(const PendingItem& o) const {
        return std::tie(value, unlabeled, label, seq) <
               std::tie(o.value, o.unlabeled, o.label, o.seq);
    }
};

} // namespace

ValueSemigroupData value_semigroup(const Parametrization& p, long long T) {
    ValueSemigroupData out;
    GapData gd = gap_data(p.s);
    const long long conductor = gd.conductor;
    out.conductor = conductor;
    out.trunc = T;
    if (T < conductor + 1) throw TruncationTooSmall(T, conductor + 1);

    const long long W = std::max<long long>(conductor, 1); // working window
    auto coords = parametrization_series_s1(p, W);

    std::map<long long, TableEntry> table;
    std::set<PendingItem> pending;
    long long seq = 0;

    auto push = [&](TruncSeries ser, std::optional<Label> origin) {
        if (ser.terms.empty()) return; // valuation at or above the conductor
        PendingItem it;
        it.value = series_valuation(ser);
        it.unlabeled = origin ? 0 : 1;
        if (origin) it.label = *origin;
        it.seq = seq++;
        it.ser = std::move(ser);
        it.origin = origin;
        pending.insert(std::move(it));
    };

    push(coords[0], Label{1, 0, 0});
    push(coords[1], Label{0, 1, 0});
    push(coords[2], Label{0, 0, 1});

    while (!pending.empty()) {
        PendingItem item = std::move(pending.extract(pending.begin()).value());
        TruncSeries cur = std::move(item.ser);
        std::optional<Label> origin = item.origin;
        bool reduced = false;
        std::optional<Label> first_a, first_b;

        for (;;) {
            if (cur.terms.empty()) break; // resolved at or above the conductor
            long long u = series_valuation(cur);
            auto hit = table.find(u);
            if (hit != table.end()) {
                if (!reduced) {
                    first_a = origin;
                    first_b = hit->second.label;
                    reduced = true;
                }
                cur = series_sub(cur, series_scale(cur.terms.begin()->second,
                                                   hit->second.rep));
                continue;
            }
            // claim u
            Rat lead = cur.terms.begin()->second;
            TableEntry ent;
            ent.rep = series_scale(Rat(1) / lead, cur);
            ent.label = reduced ? std::nullopt : origin;
            if (!contains(p.s, u)) {
                if (!reduced)
                    throw InternalInconsistency(
                        "an unreduced monomial attained a gap value");
                out.extra.push_back(u);
                CancellationWitness w;
                w.value = u;
                w.mono_a = first_a;
                w.mono_b = first_b;
                out.witnesses.push_back(w);
            }
            auto [pos, ok] = table.emplace(u, std::move(ent));
            (void)ok;
            for (const auto& [v, other] : table) {
                if (u + v >= conductor) break;
                std::optional<Label> plab;
                if (pos->second.label && other.label)
                    plab = Label{(*pos->second.label)[0] + (*other.label)[0],
                                 (*pos->second.label)[1] + (*other.label)[1],
                                 (*pos->second.label)[2] + (*other.label)[2]};
                push(series_mul(pos->second.rep, other.rep), plab);
            }
            break;
        }
    }

    out.values.push_back(0);
    for (const auto& [v, ent] : table)
        if (v > 0) out.values.push_back(v);
    for (long long v = std::max<long long>(conductor, 1); v < T; ++v)
        out.values.push_back(v);
    std::sort(out.values.begin(), out.values.end());
    out.values.erase(std::unique(out.values.begin(), out.values.end()),
                     out.values.end());
    std::sort(out.extra.begin(), out.extra.end());
    out.verdict = out.extra.empty() ? ValueVerdict::EqualsGamma
                                    : ValueVerdict::ExceedsGamma;
    return out;
}

// ------------------------------------------------------------------- lift --

namespace {

TruncSeries series_shift_s(const TruncSeries& a, long long v) {
    TruncSeries r = series_zero(a.trunc);
    r.truncated = a.truncated;
    for (const auto& [e, c] : a.terms)
        series_add_term(r, e.first, e.second + v, c);
    return r;
}

const TruncSeries& cached_pow(std::vector<TruncSeries>& cache,
                              const TruncSeries& base, long long e) {
    while (static_cast<long long>(cache.size()) <= e)
        cache.push_back(series_mul(cache.back(), base));
    return cache[static_cast<size_t>(e)];
}

} // namespace

LiftData lift_relations(const DefiningEquations& e, const Parametrization& p,
                        long long T) {
    if (!(e.w == Weights{p.s.l, p.s.m, p.s.n}))
        throw InternalInconsistency("equations and parametrization disagree on weights");
    GapData gd = gap_data(p.s);
    const long long conductor = gd.conductor;
    if (T < conductor + 1) throw TruncationTooSmall(T, conductor + 1);
    const long long k =
        (e.kind == RelCase::H1 && e.h1) ? e.h1->e.a1 * e.h1->e.c2 : 0;

    auto coords = parametrization_series(p, T);
    std::vector<TruncSeries> px{series_monomial(T, 1, 0)},
        py{series_monomial(T, 1, 0)}, pz{series_monomial(T, 1, 0)};

    LiftData out;
    out.trunc = T;
    out.verified = true;
    for (size_t i = 0; i < e.f.size(); ++i) {
        const SparsePoly& f = e.f[i];
        const long long di = e.d[i];
        const TruncSeries r0 = substitute(f, coords[0], coords[1], coords[2], T);
        TruncSeries res = r0;
        LiftEquation le;
        le.fprime = poly_zero(e.w);

        while (!res.terms.empty()) {
            auto [et, coeff] = *res.terms.begin();
            const long long u = et.first, v = et.second;
            if (u - v != di)
                throw InternalInconsistency("lift residual fell off the grading");
            if (v < 1)
                throw InternalInconsistency("lift residual has an s-free term");
            if (!contains(p.s, u)) {
                le.jump = u;
                out.any_jump = true;
                out.verified = false;
                break;
            }
            std::optional<Factorization> fac;
            bool prefer = (i == 0 || i == 2) && k > 0 && u >= conductor + k * e.w.l;
            if (prefer) fac = factorize(p.s, u, k);
            if (!fac) fac = factorize(p.s, u, 0);
            if (!fac)
                throw InternalInconsistency("member of the semigroup failed to factor");
            poly_add_term(le.fprime, Exps{fac->x, fac->y, fac->z, v - 1}, coeff);
            TruncSeries mono = series_mul(
                series_mul(cached_pow(px, coords[0], fac->x),
                           cached_pow(py, coords[1], fac->y)),
                cached_pow(pz, coords[2], fac->z));
            res = series_sub(res, series_scale(coeff, series_shift_s(mono, v)));
        }

        // F_i = f_i - s * fprime_i
        le.F = f;
        for (const auto& [ex, c] : le.fprime.terms)
            poly_add_term(le.F, Exps{ex.x, ex.y, ex.z, ex.s + 1}, -c);

        if (!le.fprime.is_zero()) {
            long long ord = 0, xdiv = 0;
            bool first = true;
            for (const auto& [ex, c] : le.fprime.terms) {
                long long wdeg = ex.x * e.w.l + ex.y * e.w.m + ex.z * e.w.n;
                if (first || wdeg < ord) ord = wdeg;
                if (first || ex.x < xdiv) xdiv = ex.x;
                first = false;
                if (wdeg - (ex.s + 1) != di)
                    throw InternalInconsistency("lift monomial off the graded degree");
            }
            le.ord_margin = ord - di;
            le.x_div = xdiv;
            if (p.delta && *le.ord_margin < *p.delta)
                throw InternalInconsistency("lift order margin fell below the tail shift");
        }

        if (!le.jump) {
            // Re-verify f_i(xi) = fprime_i(xi, s) * s below T.
            TruncSeries back =
                substitute(le.fprime, coords[0], coords[1], coords[2], T);
            if (!series_sub(r0, series_shift_s(back, 1)).terms.empty())
                throw InternalInconsistency("lift identity failed re-substitution");
        }
        out.eq.push_back(std::move(le));
    }
    return out;
}

// ----------------------------------------------------------- certificates --

namespace {

Inequality make_ineq(std::optional<long long> base, std::optional<long long> delta,
                     long long rhs) {
    Inequality q;
    if (base && delta) q.lhs = *base + *delta;
    q.rhs = rhs;
    q.holds = !q.lhs.has_value() || *q.lhs >= rhs;
    return q;
}

} // namespace

StciCertificate certify_stci(const HerzogData& h, const DefiningEquations& e,
                             const Parametrization& p,
                             std::optional<ValueSemigroupData> vs,
                             std::optional<LiftData> lift) {
    if (h.kind != RelCase::H1 || !e.h1)
        throw Error("certificate requires the three-relation case");
    if (h.s.l != p.s.l || h.s.m != p.s.m || h.s.n != p.s.n)
        throw InternalInconsistency("certificate inputs disagree on the semigroup");

    StciCertificate c;
    c.s = h.s;
    c.conductor = gap_data(h.s).conductor;
    c.kind = h.kind;
    c.d = e.d;
    c.k = e.h1->e.a1 * e.h1->e.c2;
    c.delta = p.delta;

    const long long d1 = e.d[0], d2 = e.d[1], d3 = e.d[2];
    const long long kl = c.k * h.s.l;
    c.semigroup_constancy =
        make_ineq(std::min({d1, d2, d3}), c.delta, c.conductor);
    c.stci_bound =
        make_ineq(std::min({d1, d2 + kl, d3}), c.delta, c.conductor + kl);
    c.stci_bound_xz = make_ineq(std::min(d1, d3), c.delta, c.conductor + kl);
    c.stci_bound_y = make_ineq(d2, c.delta, c.conductor);
    if (c.stci_bound.holds != (c.stci_bound_xz.holds && c.stci_bound_y.holds))
        throw InternalInconsistency("the two certificate displays disagree");

    c.verdict = c.stci_bound.holds ? CertVerdict::Certified
                                   : CertVerdict::NotCertified;
    if (!c.delta)
        c.note = "no tails: monomial curve, bound holds trivially";
    else if (c.verdict == CertVerdict::NotCertified)
        c.note = "criterion silent: this is not a disproof";

    if (vs) {
        if (c.semigroup_constancy.holds && vs->verdict == ValueVerdict::ExceedsGamma)
            throw InternalInconsistency(
                "constancy bound holds but the value semigroup jumped");
        c.value_check = std::move(vs);
    }
    if (lift) c.lift = std::move(lift);

    if (p.tails[0].empty() && p.tails[1].size() == 1) {
        c.one_form_val = one_form_valuation(p);
        c.nonmonomial = !contains(p.s, *c.one_form_val);
    }
    return c;
}

long long default_truncation(const NumericalSemigroup& s,
                             const std::vector<long long>& d, long long k) {
    long long mx = 0;
    for (long long v : d) mx = std::max(mx, v);
    return gap_data(s).conductor + mx + k * s.l + 8 * s.l;
}

// -------------------------------------------------------- one-form witness --

namespace {

TruncSeries series_ddt(const TruncSeries& a) {
    TruncSeries r = series_zero(a.trunc);
    r.truncated = a.truncated;
    for (const auto& [e, c] : a.terms)
        if (e.first > 0) series_add_term(r, e.first - 1, e.second, Rat(e.first) * c);
    return r;
}

} // namespace

long long one_form_valuation(const Parametrization& p) {
    if (!p.tails[0].empty())
        throw ShapeMismatch("the one-form witness needs an undeformed first coordinate");
    if (p.tails[1].size() != 1)
        throw ShapeMismatch("the one-form witness needs a single-term second tail");
    const long long l = p.s.l, m = p.s.m, pe = p.tails[1][0].e;
    const long long T = l + pe + 2;
    TruncSeries xi = series_monomial(T, 1, l);
    TruncSeries eta = series_monomial(T, 1, m);
    series_add_term(eta, pe, 0, p.tails[1][0].c);
    TruncSeries w = series_sub(series_scale(Rat(m), series_mul(eta, series_ddt(xi))),
                               series_scale(Rat(l), series_mul(xi, series_ddt(eta))));
    if (w.terms.empty())
        throw InternalInconsistency("the one-form vanished below its truncation");
    long long val = series_valuation(w) + 1;
    if (val != pe + l)
        throw InternalInconsistency("one-form valuation differs from tail + base");
    return val;
}

bool nonmonomial_witness(const Parametrization& p) {
    return !contains(p.s, one_form_valuation(p));
}

} // namespace stci
