#include "stci/cli.hpp"

#include "stci/json_io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace stci {

namespace {

struct Options {
    bool json = false;
    bool quiet = false;
};

// Fixed envelope for machine output; human output is line-oriented text.
void emit(const Options& o, std::ostream& out, const std::string& command,
          const OJson& inputs, const OJson& result,
          const std::vector<std::string>& human) {
    if (o.quiet) return;
    if (o.json) {
        OJson env;
        env["tool_version"] = kToolVersion;
        env["command"] = command;
        env["inputs"] = inputs;
        env["result"] = result;
        out << env.dump(2) << "\n";
    } else {
        for (const auto& line : human) out << line << "\n";
    }
}

std::string join(const std::vector<long long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string triple(const NumericalSemigroup& s) {
    return "<" + std::to_string(s.l) + "," + std::to_string(s.m) + "," +
           std::to_string(s.n) + ">";
}

std::string verdict_display(CertVerdict v) {
    switch (v) {
        case CertVerdict::Certified: return "Certified";
        case CertVerdict::NotCertified: return "NotCertified";
        default: return "Undetermined";
    }
}

std::string ineq_display(const Inequality& iq) {
    std::string lhs = iq.lhs ? std::to_string(*iq.lhs) : std::string("inf");
    return lhs + " >= " + std::to_string(iq.rhs) + "  " +
           (iq.holds ? "holds" : "fails");
}

void describe_relations(const HerzogData& h, std::vector<std::string>& human) {
    if (h.kind == RelCase::H1) {
        const H1Data& d = *h.h1;
        human.push_back("case: H1 (three relations)");
        human.push_back("multipliers: a=" + std::to_string(d.a) +
                        " b=" + std::to_string(d.b) + " c=" + std::to_string(d.c));
        human.push_back("sextuple: a1=" + std::to_string(d.e.a1) +
                        " a2=" + std::to_string(d.e.a2) +
                        " b1=" + std::to_string(d.e.b1) +
                        " b2=" + std::to_string(d.e.b2) +
                        " c1=" + std::to_string(d.e.c1) +
                        " c2=" + std::to_string(d.e.c2));
    } else {
        const H2Data& d = *h.h2;
        human.push_back("case: H2 (two relations, subcase " +
                        subcase_name(d.subcase) + ")");
        human.push_back(
            "rows: a=" + std::to_string(d.a) + " b=" + std::to_string(d.b) +
            " c=" + std::to_string(d.c) + " a1=" + std::to_string(d.a1) +
            " b2=" + std::to_string(d.b2) + " (variables permuted " +
            std::to_string(d.perm[0]) + std::to_string(d.perm[1]) +
            std::to_string(d.perm[2]) + ")");
    }
    human.push_back("relation matrix (rows annihilate the generators):");
    for (const auto& row : relation_matrix(h))
        human.push_back("  [" + std::to_string(row[0]) + ", " +
                        std::to_string(row[1]) + ", " + std::to_string(row[2]) +
                        "]");
}

void describe_equations(const DefiningEquations& eq,
                        std::vector<std::string>& human) {
    human.push_back("defining equations (weights " + std::to_string(eq.w.l) +
                    "," + std::to_string(eq.w.m) + "," + std::to_string(eq.w.n) +
                    "):");
    for (size_t i = 0; i < eq.f.size(); ++i)
        human.push_back("  f" + std::to_string(i + 1) + " = " +
                        poly_to_string(eq.f[i]) + "   [degree " +
                        std::to_string(eq.d[i]) + "]");
}

int cmd_semigroup(long long l, long long m, long long n, const Options& o,
                  std::ostream& out) {
    NumericalSemigroup s = make_semigroup(l, m, n);
    GapData gd = gap_data(s);
    std::vector<long long> ap = apery_set(s, s.l);

    OJson result = to_json(s);
    result["gaps"] = gd.gaps;
    result["frobenius"] = gd.frobenius;
    result["conductor"] = gd.conductor;
    result["apery"] = OJson{{"mod", s.l}, {"least", ap}};

    std::vector<std::string> human;
    human.push_back("semigroup " + triple(s));
    human.push_back("gaps (" + std::to_string(gd.gaps.size()) +
                    "): " + join(gd.gaps));
    human.push_back("frobenius: " + std::to_string(gd.frobenius));
    human.push_back("conductor: " + std::to_string(gd.conductor));
    human.push_back("apery mod " + std::to_string(s.l) + ": " + join(ap));

    OJson inputs{{"l", l}, {"m", m}, {"n", n}};
    emit(o, out, "semigroup", inputs, result, human);
    return 0;
}

int cmd_herzog(long long l, long long m, long long n, const Options& o,
               std::ostream& out) {
    NumericalSemigroup s = make_semigroup(l, m, n);
    HerzogData h = herzog_data(s);
    DefiningEquations eq = defining_equations(h);

    OJson result;
    result["semigroup"] = to_json(s);
    result["herzog"] = to_json(h);
    result["equations"] = to_json(eq);

    std::vector<std::string> human;
    human.push_back("semigroup " + triple(s));
    describe_relations(h, human);
    describe_equations(eq, human);

    OJson inputs{{"l", l}, {"m", m}, {"n", n}};
    emit(o, out, "herzog", inputs, result, human);
    return 0;
}

int cmd_stci(long long l, long long m, long long n, const Options& o,
             std::ostream& out) {
    NumericalSemigroup s = make_semigroup(l, m, n);
    HerzogData h = herzog_data(s);
    DefiningEquations eq = defining_equations(h);

    OJson result;
    result["semigroup"] = to_json(s);
    result["herzog"] = to_json(h);
    result["equations"] = to_json(eq);

    std::vector<std::string> human;
    human.push_back("semigroup " + triple(s));
    describe_relations(h, human);
    describe_equations(eq, human);

    if (h.kind == RelCase::H1) {
        BresinskyData b = bresinsky_reduce(eq);
        XzBinomial xz = xz_binomial_exponents(s, *h.h1);
        result["bresinsky"] = to_json(b);
        result["xz_binomial"] =
            OJson{{"nt", xz.nt}, {"lt", xz.lt}, {"g", xz.g}};
        human.push_back(
            "power identity: f1^" + std::to_string(b.c) + " = (" +
            poly_to_string(b.q) + ") * f3 + x^" + std::to_string(b.k) + " * (" +
            poly_to_string(b.g) + ")");
        human.push_back(std::string("  residue sign ") +
                        (b.residue_sign > 0 ? "+1" : "-1") + ", verified " +
                        (b.identity_verified ? "yes" : "no"));
        human.push_back("pure binomial in x,z: x^" + std::to_string(xz.nt) +
                        " - z^" + std::to_string(xz.lt) +
                        "  (common factor " + std::to_string(xz.g) + ")");
    } else {
        result["bresinsky"] = nullptr;
        result["xz_binomial"] = nullptr;
        human.push_back(
            "power identity: not formed (two-relation case, the curve is "
            "already a complete intersection)");
    }
    bool moh = moh_check(s.l, s.m, s.n);
    result["moh"] = moh;
    human.push_back(std::string("moh bound ((l-2)*m < n, l < m coprime): ") +
                    (moh ? "yes" : "no"));

    OJson inputs{{"l", l}, {"m", m}, {"n", n}};
    emit(o, out, "stci", inputs, result, human);
    return 0;
}

long long resolve_truncation(const std::optional<long long>& flag,
                             const NumericalSemigroup& s,
                             const std::vector<long long>& d, long long k) {
    if (flag) return *flag;
    if (const char* env = std::getenv("STCI_TRUNC")) {
        std::string v(env);
        size_t idx = 0;
        long long t = 0;
        try {
            t = std::stoll(v, &idx);
        } catch (const std::exception&) {
            throw ParseError("STCI_TRUNC must be a positive integer, got \"" +
                             v + "\"");
        }
        if (idx != v.size() || t <= 0)
            throw ParseError("STCI_TRUNC must be a positive integer, got \"" +
                             v + "\"");
        return t;
    }
    return default_truncation(s, d, k);
}

std::string tail_display(const Parametrization& p) {
    const char* names[3] = {"x", "y", "z"};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        for (const auto& t : p.tails[i]) {
            if (!s.empty()) s += ", ";
            std::string c = rat_to_string(t.c);
            s += names[i];
            s += ": ";
            if (c != "1") s += c + "*";
            s += "t^" + std::to_string(t.e);
        }
    }
    if (s.empty()) s = "none (monomial curve)";
    return s;
}

int cmd_deform(const std::string& path, const std::optional<long long>& trunc,
               const Options& o, std::ostream& out) {
    Parametrization p = parse_parametrization_file(path);
    HerzogData h = herzog_data(p.s);
    DefiningEquations eq = defining_equations(h);
    long long k = h.kind == RelCase::H1 ? h.h1->e.a1 * h.h1->e.c2 : 0;
    long long T = resolve_truncation(trunc, p.s, eq.d, k);

    OJson inputs{{"file", path},
                 {"trunc", trunc ? OJson(*trunc) : OJson(nullptr)}};

    std::vector<std::string> human;
    human.push_back("parametrization over " + triple(p.s) +
                    ", tails: " + tail_display(p));
    human.push_back("truncation: " + std::to_string(T));

    if (h.kind == RelCase::H2) {
        ValueSemigroupData vs = value_semigroup(p, T);
        OJson result;
        result["parametrization"] = to_json(p);
        result["trunc"] = T;
        result["kind"] = "H2";
        result["value_check"] = to_json(vs);
        result["verdict"] = verdict_name(CertVerdict::Undetermined);
        result["note"] = "certificate criteria are defined for the "
                         "three-relation case";
        human.push_back("case: H2 (two relations)");
        human.push_back("value semigroup: " + verdict_name(vs.verdict) +
                        " (conductor " + std::to_string(vs.conductor) + ")");
        if (!vs.extra.empty())
            human.push_back("  gap values attained: " + join(vs.extra));
        human.push_back("verdict: Undetermined (certificate criteria are "
                        "defined for the three-relation case)");
        emit(o, out, "deform", inputs, result, human);
        return 1;
    }

    ValueSemigroupData vs = value_semigroup(p, T);
    LiftData lift = lift_relations(eq, p, T);
    StciCertificate cert = certify_stci(h, eq, p, vs, lift);

    OJson result;
    result["parametrization"] = to_json(p);
    result["trunc"] = T;
    result["certificate"] = to_json(cert);

    human.push_back("value semigroup: " + verdict_name(vs.verdict) +
                    " (conductor " + std::to_string(vs.conductor) + ")");
    if (!vs.extra.empty())
        human.push_back("  gap values attained: " + join(vs.extra));
    std::string margins;
    for (const auto& e : lift.eq) {
        if (!margins.empty()) margins += ' ';
        margins += e.ord_margin ? std::to_string(*e.ord_margin)
                                : std::string("inf");
    }
    human.push_back(std::string("lift: ") +
                    (lift.verified ? "verified" : "not verified") +
                    (lift.any_jump ? ", jump found" : "") + ", margins " +
                    margins);
    human.push_back(
        "delta: " + (cert.delta ? std::to_string(*cert.delta)
                                : std::string("inf (no tails)")));
    human.push_back("semigroup constancy: " +
                    ineq_display(cert.semigroup_constancy));
    human.push_back("stci bound: " + ineq_display(cert.stci_bound));
    human.push_back("verdict: " + verdict_display(cert.verdict));
    if (!cert.note.empty()) human.push_back("note: " + cert.note);
    if (cert.one_form_val)
        human.push_back(
            "one-form valuation: " + std::to_string(*cert.one_form_val) +
            (cert.nonmonomial && *cert.nonmonomial
                 ? " (gap: the germ is not the monomial one)"
                 : " (member of the semigroup)"));

    emit(o, out, "deform", inputs, result, human);
    return cert.verdict == CertVerdict::Certified ? 0 : 1;
}

int cmd_inverse_gs1(const Sextuple& t, const Options& o, std::ostream& out) {
    Gs1Image img = gs1_is_image(t);

    OJson inputs = to_json(t);
    OJson result = to_json(img);

    std::vector<std::string> human;
    human.push_back("candidate generators: l'=" + std::to_string(img.forward.l) +
                    " m'=" + std::to_string(img.forward.m) +
                    " n'=" + std::to_string(img.forward.n) +
                    "  gcd=" + std::to_string(img.forward.e));
    if (img.is_image) {
        human.push_back("is image: yes (the triple realizes the sextuple)");
    } else {
        human.push_back("is image: no (common factor " +
                        std::to_string(img.forward.e) + " > 1)");
    }
    emit(o, out, "inverse gs1", inputs, result, human);
    return img.is_image ? 0 : 1;
}

int cmd_inverse_gs2(const Gs2Input& in, const Options& o, std::ostream& out) {
    Gs2Image img = gs2_is_image(in);

    OJson inputs{{"a", in.a}, {"b", in.b}, {"c", in.c}, {"a1", in.a1},
                 {"b2", in.b2}};
    OJson result = to_json(img);

    std::vector<std::string> human;
    human.push_back("candidate generators: l'=" + std::to_string(img.forward.l) +
                    " m'=" + std::to_string(img.forward.m) +
                    " n'=" + std::to_string(img.forward.n) +
                    "  d'=" + std::to_string(img.forward.dprime));
    human.push_back(std::string("is image: ") + (img.is_image ? "yes" : "no") +
                    (img.reason.empty() ? "" : " (" + img.reason + ")"));
    emit(o, out, "inverse gs2", inputs, result, human);
    return img.is_image ? 0 : 1;
}

int cmd_family(long long a, long long b, const std::optional<long long>& p,
               const std::optional<long long>& q, const Options& o,
               std::ostream& out) {
    FamilyInstance f = family_instance(a, b);
    ConductorBounds cb = conductor_bounds(f);
    ClauseReport cr = family_clauses(f, p, q);

    std::array<std::vector<TailTerm>, 3> tails{};
    if (p) tails[1].push_back(TailTerm{*p, Rat(1)});
    if (q) tails[2].push_back(TailTerm{*q, Rat(1)});
    Parametrization par = make_parametrization(f.s, tails);
    StciCertificate cert = certify_stci(f.h, f.eq, par);

    OJson inputs{{"a", a},
                 {"b", b},
                 {"p", p ? OJson(*p) : OJson(nullptr)},
                 {"q", q ? OJson(*q) : OJson(nullptr)}};
    OJson result;
    result["family"] = to_json(f);
    result["bounds"] = to_json(cb);
    result["clauses"] = to_json(cr);
    result["certificate"] = to_json(cert);

    std::vector<std::string> human;
    human.push_back("family (" + std::to_string(a) + "," + std::to_string(b) +
                    "): semigroup " + triple(f.s) + ", conductor " +
                    std::to_string(f.conductor));
    human.push_back("degrees: d1=" + std::to_string(f.eq.d[0]) +
                    " d2=" + std::to_string(f.eq.d[1]) +
                    " d3=" + std::to_string(f.eq.d[2]));
    human.push_back("surface: g = " + poly_to_string(f.bres.g) +
                    ", identity f1^2 = y^2*f3 + x*g");
    human.push_back(
        "conductor bounds: " + std::to_string(cb.lhs) + " <= " +
        std::to_string(cb.mid) + " < " + std::to_string(cb.rhs) + "  " +
        (cb.holds ? "hold" : "fail"));
    human.push_back("tails: " + tail_display(par));
    human.push_back("semigroup constancy: " +
                    ineq_display(cert.semigroup_constancy));
    human.push_back("stci bound: " + ineq_display(cert.stci_bound));
    human.push_back("canonical tail clause (largest gap shifted by l): p=" +
                    std::to_string(cr.canonical_p) + ", inequality " +
                    ineq_display(cr.nonmonomial_stci) +
                    (cr.clause_c ? "  [applies]" : "  [does not apply]"));
    human.push_back("verdict: " + verdict_display(cert.verdict));
    if (cert.one_form_val)
        human.push_back(
            "one-form valuation: " + std::to_string(*cert.one_form_val) +
            (cert.nonmonomial && *cert.nonmonomial
                 ? " (gap: the germ is not the monomial one)"
                 : " (member of the semigroup)"));

    emit(o, out, "family", inputs, result, human);
    return cert.verdict == CertVerdict::Certified ? 0 : 1;
}

std::pair<long long, long long> parse_range(const std::string& s) {
    auto bad = [&]() {
        return ParseError("bad range \"" + s + "\" (use A or A..B)");
    };
    try {
        size_t pos = s.find("..");
        size_t idx = 0;
        if (pos == std::string::npos) {
            long long v = std::stoll(s, &idx);
            if (idx != s.size()) throw bad();
            return {v, v};
        }
        std::string lo = s.substr(0, pos), hi = s.substr(pos + 2);
        long long a = std::stoll(lo, &idx);
        if (idx != lo.size()) throw bad();
        long long b = std::stoll(hi, &idx);
        if (idx != hi.size()) throw bad();
        return {a, b};
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

int cmd_scan(const std::string& ra, const std::string& rb, bool canonical_p,
             bool csv, const Options& o, std::ostream& out) {
    auto [a0, a1] = parse_range(ra);
    auto [b0, b1] = parse_range(rb);
    std::vector<ScanRow> rows = family_scan(
        a0, a1, b0, b1, canonical_p ? ScanMode::CanonicalP : ScanMode::Monomial);
    if (!o.quiet) out << (csv ? scan_csv(rows) : scan_jsonl(rows));
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"three-generator numerical semigroups, their monomial space "
                 "curves, and set-theoretic complete-intersection "
                 "certificates for deformations"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "machine-readable JSON output");
    app.add_flag("--quiet", opt.quiet,
                 "no stdout; the exit code carries the verdict");

    int rc = 0;

    long long sg_l = 0, sg_m = 0, sg_n = 0;
    auto* sg = app.add_subcommand(
        "semigroup", "gaps, Frobenius number, conductor, Apery set");
    sg->fallthrough();
    sg->add_option("l", sg_l, "first generator")->required();
    sg->add_option("m", sg_m, "second generator")->required();
    sg->add_option("n", sg_n, "third generator")->required();
    sg->callback([&]() { rc = cmd_semigroup(sg_l, sg_m, sg_n, opt, out); });

    long long hz_l = 0, hz_m = 0, hz_n = 0;
    auto* hz = app.add_subcommand(
        "herzog", "minimal relations and defining equations of the monomial curve");
    hz->fallthrough();
    hz->add_option("l", hz_l, "first generator")->required();
    hz->add_option("m", hz_m, "second generator")->required();
    hz->add_option("n", hz_n, "third generator")->required();
    hz->callback([&]() { rc = cmd_herzog(hz_l, hz_m, hz_n, opt, out); });

    auto* inv = app.add_subcommand(
        "inverse", "reconstruct generators from relation data");
    inv->require_subcommand(1);
    inv->fallthrough();

    Sextuple gs1_t;
    auto* g1 = inv->add_subcommand(
        "gs1", "three-relation data: sextuple a1 a2 b1 b2 c1 c2");
    g1->fallthrough();
    g1->add_option("a1", gs1_t.a1, "")->required();
    g1->add_option("a2", gs1_t.a2, "")->required();
    g1->add_option("b1", gs1_t.b1, "")->required();
    g1->add_option("b2", gs1_t.b2, "")->required();
    g1->add_option("c1", gs1_t.c1, "")->required();
    g1->add_option("c2", gs1_t.c2, "")->required();
    g1->callback([&]() { rc = cmd_inverse_gs1(gs1_t, opt, out); });

    Gs2Input gs2_in;
    auto* g2 = inv->add_subcommand(
        "gs2", "two-relation data: a b c a1 b2");
    g2->fallthrough();
    g2->add_option("a", gs2_in.a, "")->required();
    g2->add_option("b", gs2_in.b, "")->required();
    g2->add_option("c", gs2_in.c, "")->required();
    g2->add_option("a1", gs2_in.a1, "")->required();
    g2->add_option("b2", gs2_in.b2, "")->required();
    g2->callback([&]() { rc = cmd_inverse_gs2(gs2_in, opt, out); });

    long long st_l = 0, st_m = 0, st_n = 0;
    auto* st = app.add_subcommand(
        "stci", "power identity presenting the curve as a set-theoretic "
                "complete intersection");
    st->fallthrough();
    st->add_option("l", st_l, "first generator")->required();
    st->add_option("m", st_m, "second generator")->required();
    st->add_option("n", st_n, "third generator")->required();
    st->callback([&]() { rc = cmd_stci(st_l, st_m, st_n, opt, out); });

    std::string df_file;
    long long df_trunc = 0;
    auto* df = app.add_subcommand(
        "deform", "certify a deformed parametrization from a JSON file");
    df->fallthrough();
    df->add_option("file", df_file, "parametrization JSON file")->required();
    auto* df_topt =
        df->add_option("--trunc", df_trunc,
                       "series truncation order (default: STCI_TRUNC or a "
                       "bound computed from the data)");
    df->callback([&]() {
        std::optional<long long> t;
        if (df_topt->count()) t = df_trunc;
        rc = cmd_deform(df_file, t, opt, out);
    });

    long long fa_a = 0, fa_b = 0, fa_p = 0, fa_q = 0;
    auto* fa = app.add_subcommand(
        "family", "one member of the certified deformation family");
    fa->fallthrough();
    fa->add_option("a", fa_a, "family parameter a")->required();
    fa->add_option("b", fa_b, "family parameter b")->required();
    auto* fa_popt = fa->add_option("--p", fa_p, "y-tail exponent (> m)");
    auto* fa_qopt = fa->add_option("--q", fa_q, "z-tail exponent (> n)");
    fa->callback([&]() {
        std::optional<long long> p, q;
        if (fa_popt->count()) p = fa_p;
        if (fa_qopt->count()) q = fa_q;
        rc = cmd_family(fa_a, fa_b, p, q, opt, out);
    });

    std::string sc_ra, sc_rb;
    bool sc_canp = false, sc_csv = false;
    auto* sc = app.add_subcommand(
        "scan", "sweep the family over parameter ranges");
    sc->fallthrough();
    sc->add_option("a-range", sc_ra, "a range, e.g. 2..12")->required();
    sc->add_option("b-range", sc_rb, "b range, e.g. 2..12")->required();
    sc->add_flag("--canonical-p", sc_canp,
                 "attach the canonical y-tail (largest gap shifted by l) to "
                 "each member");
    sc->add_flag("--csv", sc_csv, "CSV output instead of JSON lines");
    sc->callback(
        [&]() { rc = cmd_scan(sc_ra, sc_rb, sc_canp, sc_csv, opt, out); });

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("stci");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

} // namespace stci
