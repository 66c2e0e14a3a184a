#include "stci/family.hpp"

#include "doctest.h"

using namespace stci;

TEST_CASE("family instances expand to the expected triples and data") {
    FamilyInstance f = family_instance(2, 2);
    CHECK(f.s.l == 4);
    CHECK(f.s.m == 5);
    CHECK(f.s.n == 7);
    CHECK(f.conductor == 7);
    CHECK(f.eq.d == std::vector<long long>{12, 15, 14});
    CHECK(f.h.h1->e == Sextuple{1, 2, 1, 2, 1, 1});
    CHECK(f.bres.c == 2);
    CHECK(f.bres.k == 1);
    CHECK(poly_to_string(f.bres.q) == "y^2");
    CHECK(poly_to_string(f.bres.g) == "x^5 + y^4 - 2*x^2*y*z");

    f = family_instance(3, 3);
    CHECK(f.s.l == 5);
    CHECK(f.s.m == 7);
    CHECK(f.s.n == 13);
    CHECK(f.conductor == 17);
    CHECK(f.eq.d == std::vector<long long>{20, 28, 26});
    CHECK(poly_to_string(f.bres.g) == "x^7 + y^5 - 2*x^3*y*z");

    f = family_instance(8, 3);
    CHECK(f.s.l == 5);
    CHECK(f.s.m == 17);
    CHECK(f.s.n == 28);
    CHECK(f.conductor == 47);
    CHECK(f.eq.d == std::vector<long long>{45, 68, 56});

    // d1 < d3 < d2 on a sweep
    for (long long a = 2; a <= 7; ++a)
        for (long long b = 2; b <= 7; ++b) {
            if (b + 2 >= 2 * a + 1) continue;
            if (int_gcd(b + 2, 2 * a + 1) != 1) continue;
            FamilyInstance g = family_instance(a, b);
            CHECK(g.eq.d[0] < g.eq.d[2]);
            CHECK(g.eq.d[2] < g.eq.d[1]);
        }
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_WITH_AS(family_instance(1, 2),
                         "invalid family parameters: family needs a, b >= 2",
                         InvalidParameters);
    CHECK_THROWS_WITH_AS(
        family_instance(2, 3),
        "invalid family parameters: family needs b + 2 < 2a + 1",
        InvalidParameters);
    CHECK_THROWS_WITH_AS(
        family_instance(4, 4),
        "invalid family parameters: family needs gcd(b+2, 2a+1) = 1",
        InvalidParameters);
}

TEST_CASE("conductor bounds of the family") {
    ConductorBounds cb = conductor_bounds(family_instance(2, 2));
    CHECK(cb.lhs == 11);
    CHECK(cb.mid == 11);
    CHECK(cb.rhs == 14);
    CHECK(cb.holds);
    CHECK(cb.d2_bound);
    CHECK(cb.d3_bound);

    cb = conductor_bounds(family_instance(3, 3));
    CHECK(cb.lhs == 22);
    CHECK(cb.mid == 23);
    CHECK(cb.rhs == 26);
    CHECK(cb.holds);

    cb = conductor_bounds(family_instance(8, 3));
    CHECK(cb.lhs == 52);
    CHECK(cb.mid == 53);
    CHECK(cb.rhs == 56);
    CHECK(cb.holds);

    for (long long a = 2; a <= 9; ++a)
        for (long long b = 2; b <= 9; ++b) {
            if (b + 2 >= 2 * a + 1) continue;
            if (int_gcd(b + 2, 2 * a + 1) != 1) continue;
            ConductorBounds c = conductor_bounds(family_instance(a, b));
            CHECK(c.holds);
            CHECK(c.d2_bound);
            CHECK(c.d3_bound);
        }
}

TEST_CASE("deformation clauses at the canonical exponent") {
    FamilyInstance f = family_instance(3, 3);
    ClauseReport r = family_clauses(f, 11, {});
    CHECK(r.delta == 4);
    CHECK(r.semigroup_constant.lhs == 24);
    CHECK(r.semigroup_constant.rhs == 17);
    CHECK(r.semigroup_constant.holds);
    CHECK(r.stci.lhs == 24);
    CHECK(r.stci.rhs == 22);
    CHECK(r.stci.holds);
    CHECK(r.canonical_p == 11);
    CHECK(r.canonical_p_valid);
    CHECK(r.canonical_q == 16);
    CHECK(r.size_ok);
    CHECK(r.nonmonomial_stci.lhs == 23);
    CHECK(r.nonmonomial_stci.rhs == 22);
    CHECK(r.nonmonomial_stci.holds);
    CHECK(r.clause_c);

    // constancy can hold at the edge while the curve bound fails
    r = family_clauses(family_instance(8, 3), 19, {});
    CHECK(r.delta == 2);
    CHECK(r.semigroup_constant.lhs == 47);
    CHECK(r.semigroup_constant.rhs == 47);
    CHECK(r.semigroup_constant.holds);
    CHECK(r.stci.lhs == 47);
    CHECK(r.stci.rhs == 52);
    CHECK_FALSE(r.stci.holds);

    // no tails: clauses hold vacuously
    r = family_clauses(f, {}, {});
    CHECK_FALSE(r.delta.has_value());
    CHECK_FALSE(r.semigroup_constant.lhs.has_value());
    CHECK(r.semigroup_constant.holds);
    CHECK(r.stci.holds);

    CHECK_THROWS_WITH_AS(family_clauses(f, 7, {}),
                         "invalid tail: y-tail exponent must exceed m",
                         InvalidTail);
    CHECK_THROWS_WITH_AS(family_clauses(f, {}, 13),
                         "invalid tail: z-tail exponent must exceed n",
                         InvalidTail);
}

TEST_CASE("canonical-exponent scan over a small rectangle") {
    auto rows = family_scan(2, 4, 2, 4, ScanMode::CanonicalP);
    REQUIRE(rows.size() == 9);

    auto at = [&](long long a, long long b) -> const ScanRow& {
        for (const auto& r : rows)
            if (r.a == a && r.b == b) return r;
        FAIL("row not found");
        return rows.front();
    };

    const ScanRow& r22 = at(2, 2);
    CHECK(r22.valid);
    CHECK(r22.l == 4);
    CHECK(r22.p == 6); // canonical 2 is below m = 5, smallest gap above wins
    CHECK(r22.p_fallback);
    CHECK(r22.verdict == CertVerdict::Certified);
    CHECK(r22.note == "certificate holds; germ known trivial");
    CHECK_FALSE(r22.moh);

    const ScanRow& r32 = at(3, 2);
    CHECK(r32.valid);
    CHECK(r32.l == 4);
    CHECK(r32.m == 7);
    CHECK(r32.n == 9);
    CHECK(r32.conductor == 11);
    CHECK(r32.p == 10);
    CHECK(r32.p_fallback);
    CHECK(r32.verdict == CertVerdict::Certified);
    CHECK(r32.note == "germ known nonisomorphic to the monomial curve "
                      "(documented analysis, not computed)");

    const ScanRow& r33 = at(3, 3);
    CHECK(r33.valid);
    CHECK(r33.p == 11);
    CHECK_FALSE(r33.p_fallback);
    CHECK(r33.verdict == CertVerdict::Certified);
    CHECK(r33.note.empty());

    CHECK_FALSE(at(2, 3).valid);
    CHECK(at(2, 3).skip_reason == "b + 2 >= 2a + 1");
    CHECK_FALSE(at(2, 4).valid);
    CHECK_FALSE(at(4, 4).valid);
    CHECK(at(4, 4).skip_reason == "gcd(b+2, 2a+1) > 1");

    for (const auto& r : rows) {
        if (!r.valid) continue;
        CHECK(r.bounds.holds);
        CHECK_FALSE(r.moh);
        CHECK(r.verdict == CertVerdict::Certified);
    }
}

TEST_CASE("monomial scan leaves the tail empty") {
    auto rows = family_scan(3, 3, 3, 3, ScanMode::Monomial);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].valid);
    CHECK_FALSE(rows[0].p.has_value());
    CHECK_FALSE(rows[0].p_fallback);
    CHECK(rows[0].verdict == CertVerdict::Certified);
    CHECK_FALSE(rows[0].clauses.delta.has_value());
}

TEST_CASE("scan range limits") {
    CHECK_THROWS_WITH_AS(
        family_scan(1, 3, 2, 3, ScanMode::Monomial),
        "invalid family parameters: scan ranges must lie within 2..64",
        InvalidParameters);
    CHECK_THROWS_AS(family_scan(2, 65, 2, 3, ScanMode::Monomial),
                    InvalidParameters);
}
