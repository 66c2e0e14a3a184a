#include "stci/json_io.hpp"

#include <fstream>
#include <sstream>

namespace stci {

std::string verdict_name(CertVerdict v) {
    switch (v) {
        case CertVerdict::Certified: return "certified";
        case CertVerdict::NotCertified: return "not_certified";
        default: return "undetermined";
    }
}

std::string verdict_name(ValueVerdict v) {
    switch (v) {
        case ValueVerdict::EqualsGamma: return "equals_conductor";
        case ValueVerdict::ExceedsGamma: return "exceeds_conductor";
        default: return "undetermined";
    }
}

std::string subcase_name(H2Subcase c) {
    switch (c) {
        case H2Subcase::PureXY: return "pure_xy";
        case H2Subcase::PureXZ: return "pure_xz";
        case H2Subcase::PureYZ: return "pure_yz";
        default: return "overlap";
    }
}

namespace {

OJson opt_or_inf(const std::optional<long long>& v) {
    if (v) return *v;
    return "inf";
}

OJson opt_or_null(const std::optional<long long>& v) {
    if (v) return *v;
    return nullptr;
}

} // namespace

OJson to_json(const NumericalSemigroup& s) {
    return OJson{{"l", s.l}, {"m", s.m}, {"n", s.n}};
}

OJson to_json(const GapData& g) {
    return OJson{{"gaps", g.gaps},
                 {"frobenius", g.frobenius},
                 {"conductor", g.conductor}};
}

OJson to_json(const Sextuple& t) {
    return OJson{{"a1", t.a1}, {"a2", t.a2}, {"b1", t.b1},
                 {"b2", t.b2}, {"c1", t.c1}, {"c2", t.c2}};
}

OJson to_json(const HerzogData& h) {
    OJson j;
    j["kind"] = h.kind == RelCase::H1 ? "H1" : "H2";
    if (h.kind == RelCase::H1) {
        j["multipliers"] =
            OJson{{"a", h.h1->a}, {"b", h.h1->b}, {"c", h.h1->c}};
        j["sextuple"] = to_json(h.h1->e);
    } else {
        j["subcase"] = subcase_name(h.h2->subcase);
        j["perm"] = h.h2->perm;
        j["a"] = h.h2->a;
        j["b"] = h.h2->b;
        j["c"] = h.h2->c;
        j["a1"] = h.h2->a1;
        j["b2"] = h.h2->b2;
    }
    j["relations"] = relation_matrix(h);
    return j;
}

OJson to_json(const DefiningEquations& e) {
    OJson j;
    j["kind"] = e.kind == RelCase::H1 ? "H1" : "H2";
    j["weights"] = OJson::array({e.w.l, e.w.m, e.w.n});
    OJson eqs = OJson::array();
    for (const auto& f : e.f) eqs.push_back(poly_to_string(f));
    j["equations"] = eqs;
    j["degrees"] = e.d;
    if (e.m0) {
        OJson m = OJson::array();
        for (const auto& row : *e.m0) {
            OJson r = OJson::array();
            for (const auto& entry : row) r.push_back(poly_to_string(entry));
            m.push_back(r);
        }
        j["matrix"] = m;
    } else {
        j["matrix"] = nullptr;
    }
    return j;
}

OJson to_json(const Gs1Image& r) {
    OJson j;
    j["l"] = r.forward.l;
    j["m"] = r.forward.m;
    j["n"] = r.forward.n;
    j["e"] = r.forward.e;
    j["is_image"] = r.is_image;
    if (r.round_trip) {
        j["round_trip"] = OJson{{"a", r.round_trip->a},
                                {"b", r.round_trip->b},
                                {"c", r.round_trip->c},
                                {"sextuple", to_json(r.round_trip->e)}};
    } else {
        j["round_trip"] = nullptr;
    }
    return j;
}

OJson to_json(const Gs2Image& r) {
    return OJson{{"l", r.forward.l},
                 {"m", r.forward.m},
                 {"n", r.forward.n},
                 {"dprime", r.forward.dprime},
                 {"coprime_ab", r.coprime_ab},
                 {"row_gcd_ok", r.row_gcd_ok},
                 {"recomputation_ok", r.recomputation_ok},
                 {"is_image", r.is_image},
                 {"reason", r.reason}};
}

OJson to_json(const BresinskyData& b) {
    return OJson{{"c", b.c},
                 {"k", b.k},
                 {"q", poly_to_string(b.q)},
                 {"g", poly_to_string(b.g)},
                 {"residue_sign", b.residue_sign},
                 {"identity_verified", b.identity_verified}};
}

OJson to_json(const Parametrization& p) {
    OJson j = to_json(p.s);
    OJson tails;
    const char* names[3] = {"x", "y", "z"};
    for (int i = 0; i < 3; ++i) {
        OJson list = OJson::array();
        for (const auto& t : p.tails[i])
            list.push_back(OJson::array({t.e, rat_to_string(t.c)}));
        tails[names[i]] = list;
    }
    j["tails"] = tails;
    j["delta"] = opt_or_inf(p.delta);
    return j;
}

OJson to_json(const CancellationWitness& w) {
    OJson j;
    j["value"] = w.value;
    j["reduced"] = w.mono_a ? OJson(*w.mono_a) : OJson(nullptr);
    j["table"] = w.mono_b ? OJson(*w.mono_b) : OJson(nullptr);
    return j;
}

OJson to_json(const ValueSemigroupData& v) {
    OJson j;
    j["conductor"] = v.conductor;
    j["trunc"] = v.trunc;
    j["verdict"] = verdict_name(v.verdict);
    j["values"] = v.values;
    j["extra"] = v.extra;
    OJson w = OJson::array();
    for (const auto& witness : v.witnesses) w.push_back(to_json(witness));
    j["witnesses"] = w;
    if (!v.reason.empty()) j["reason"] = v.reason;
    return j;
}

OJson to_json(const LiftData& l) {
    OJson j;
    j["trunc"] = l.trunc;
    j["verified"] = l.verified;
    j["any_jump"] = l.any_jump;
    OJson eqs = OJson::array();
    for (const auto& e : l.eq) {
        OJson je;
        je["fprime"] = poly_to_string(e.fprime);
        je["F"] = poly_to_string(e.F);
        je["ord_margin"] = opt_or_inf(e.ord_margin);
        je["x_div"] = opt_or_inf(e.x_div);
        je["jump"] = opt_or_null(e.jump);
        eqs.push_back(je);
    }
    j["equations"] = eqs;
    return j;
}

OJson to_json(const Inequality& iq) {
    return OJson{{"lhs", opt_or_inf(iq.lhs)}, {"rhs", iq.rhs}, {"holds", iq.holds}};
}

OJson to_json(const StciCertificate& c) {
    OJson j = to_json(c.s);
    j["conductor"] = c.conductor;
    j["kind"] = c.kind == RelCase::H1 ? "H1" : "H2";
    j["degrees"] = c.d;
    j["k"] = c.k;
    j["delta"] = opt_or_inf(c.delta);
    j["semigroup_constancy"] = to_json(c.semigroup_constancy);
    j["stci_bound"] = to_json(c.stci_bound);
    j["stci_bound_xz"] = to_json(c.stci_bound_xz);
    j["stci_bound_y"] = to_json(c.stci_bound_y);
    j["verdict"] = verdict_name(c.verdict);
    j["note"] = c.note;
    j["value_check"] = c.value_check ? to_json(*c.value_check) : OJson(nullptr);
    j["lift"] = c.lift ? to_json(*c.lift) : OJson(nullptr);
    j["one_form_valuation"] = opt_or_null(c.one_form_val);
    j["nonmonomial"] = c.nonmonomial ? OJson(*c.nonmonomial) : OJson(nullptr);
    return j;
}

OJson to_json(const FamilyInstance& f) {
    OJson j;
    j["a"] = f.a;
    j["b"] = f.b;
    j["l"] = f.s.l;
    j["m"] = f.s.m;
    j["n"] = f.s.n;
    j["conductor"] = f.conductor;
    j["degrees"] = f.eq.d;
    OJson eqs = OJson::array();
    for (const auto& fi : f.eq.f) eqs.push_back(poly_to_string(fi));
    j["equations"] = eqs;
    j["cofactor"] = poly_to_string(f.bres.q);
    j["surface"] = poly_to_string(f.bres.g);
    j["k"] = f.bres.k;
    return j;
}

OJson to_json(const ConductorBounds& b) {
    return OJson{{"lhs", b.lhs},           {"mid", b.mid},
                 {"rhs", b.rhs},           {"holds", b.holds},
                 {"d2_bound", b.d2_bound}, {"d3_bound", b.d3_bound}};
}

OJson to_json(const ClauseReport& r) {
    OJson j;
    j["p"] = opt_or_null(r.p);
    j["q"] = opt_or_null(r.q);
    j["delta"] = opt_or_inf(r.delta);
    j["canonical_p"] = r.canonical_p;
    j["canonical_p_valid"] = r.canonical_p_valid;
    j["canonical_q"] = r.canonical_q;
    j["semigroup_constant"] = to_json(r.semigroup_constant);
    j["stci"] = to_json(r.stci);
    j["size_ok"] = r.size_ok;
    j["nonmonomial_stci"] = to_json(r.nonmonomial_stci);
    j["clause_c"] = r.clause_c;
    return j;
}

OJson to_json(const ScanRow& r) {
    OJson j;
    j["a"] = r.a;
    j["b"] = r.b;
    j["valid"] = r.valid;
    if (!r.valid) {
        j["skip_reason"] = r.skip_reason;
        return j;
    }
    j["l"] = r.l;
    j["m"] = r.m;
    j["n"] = r.n;
    j["conductor"] = r.conductor;
    j["d"] = r.d;
    j["p"] = opt_or_null(r.p);
    j["p_fallback"] = r.p_fallback;
    j["bounds"] = to_json(r.bounds);
    j["clauses"] = to_json(r.clauses);
    j["verdict"] = verdict_name(r.verdict);
    j["moh"] = r.moh;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

namespace {

long long require_int(const OJson& j, const std::string& key) {
    if (!j.contains(key)) throw ParseError("missing key \"" + key + "\"");
    const OJson& v = j.at(key);
    if (!v.is_number_integer())
        throw ParseError("key \"" + key + "\" must be an integer");
    return v.get<long long>();
}

std::vector<TailTerm> parse_tail(const OJson& list, const std::string& name) {
    if (!list.is_array())
        throw ParseError("tail \"" + name + "\" must be an array of pairs");
    std::vector<TailTerm> out;
    for (const auto& entry : list) {
        if (!entry.is_array() || entry.size() != 2)
            throw ParseError("tail \"" + name +
                             "\" entries must be [exponent, coefficient]");
        if (!entry[0].is_number_integer())
            throw ParseError("tail \"" + name + "\" exponent must be an integer");
        TailTerm t;
        t.e = entry[0].get<long long>();
        if (entry[1].is_number_integer()) {
            t.c = Rat(entry[1].get<long long>());
        } else if (entry[1].is_string()) {
            const std::string cs = entry[1].get<std::string>();
            try {
                t.c = rat_from_string(cs);
            } catch (const std::exception&) {
                throw ParseError("cannot parse rational \"" + cs + "\" in tail \"" +
                                 name + "\"");
            }
        } else {
            throw ParseError("tail \"" + name +
                             "\" coefficient must be an integer or a rational string");
        }
        out.push_back(t);
    }
    return out;
}

} // namespace

Parametrization parse_parametrization(const OJson& j) {
    if (!j.is_object()) throw ParseError("top level must be an object");
    for (const auto& item : j.items()) {
        const std::string& k = item.key();
        if (k != "l" && k != "m" && k != "n" && k != "tails")
            throw ParseError("unknown key \"" + k + "\"");
    }
    const long long l = require_int(j, "l");
    const long long m = require_int(j, "m");
    const long long n = require_int(j, "n");
    NumericalSemigroup s = make_semigroup(l, m, n);

    std::array<std::vector<TailTerm>, 3> tails{};
    if (j.contains("tails")) {
        const OJson& t = j.at("tails");
        if (!t.is_object()) throw ParseError("\"tails\" must be an object");
        for (const auto& item : t.items()) {
            const std::string& k = item.key();
            int idx = k == "x" ? 0 : k == "y" ? 1 : k == "z" ? 2 : -1;
            if (idx < 0)
                throw ParseError("unknown tail \"" + k + "\" (use x, y, z)");
            tails[idx] = parse_tail(item.value(), k);
        }
    }
    return make_parametrization(s, tails);
}

Parametrization parse_parametrization_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    OJson j;
    try {
        j = OJson::parse(in);
    } catch (const std::exception& ex) {
        throw ParseError("invalid JSON in \"" + path + "\": " + ex.what());
    }
    return parse_parametrization(j);
}

std::string scan_jsonl(const std::vector<ScanRow>& rows) {
    std::string out;
    for (const auto& r : rows) {
        out += to_json(r).dump();
        out += '\n';
    }
    return out;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "a,b,l,m,n,conductor,d1,d2,d3,p,bounds,constancy,stci,clause_c,"
          "verdict,moh,note\n";
    for (const auto& r : rows) {
        os << r.a << ',' << r.b << ',';
        if (!r.valid) {
            os << ",,,,,,,,,,,,,," << csv_field(r.skip_reason) << '\n';
            continue;
        }
        os << r.l << ',' << r.m << ',' << r.n << ',' << r.conductor << ','
           << r.d[0] << ',' << r.d[1] << ',' << r.d[2] << ',';
        if (r.p) os << *r.p;
        os << ',' << (r.bounds.holds ? 1 : 0) << ','
           << (r.clauses.semigroup_constant.holds ? 1 : 0) << ','
           << (r.clauses.stci.holds ? 1 : 0) << ',' << (r.clauses.clause_c ? 1 : 0)
           << ',' << verdict_name(r.verdict) << ',' << (r.moh ? 1 : 0) << ','
           << csv_field(r.note) << '\n';
    }
    return os.str();
}

} // namespace stci
