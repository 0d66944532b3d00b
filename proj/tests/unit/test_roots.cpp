#include <doctest.h>
#include <ellqp/roots.hpp>

#include <random>

using namespace ellqp;

TEST_CASE("squarefree_part") {
    ZPoly f = ZPoly{1, -1} * ZPoly{1, -1} * ZPoly{2, 1};  // (x-1)^2 (x+2)
    ZPoly sf = squarefree_part(f);
    ZPoly want = (ZPoly{1, -1} * ZPoly{2, 1}).primitive_part();
    CHECK(sf == want);

    ZPoly g = ZPoly{3, 1, 2};  // squarefree already
    CHECK(squarefree_part(g) == g.primitive_part());

    ZPoly x3 = ZPoly::monomial(1, 3);
    CHECK(squarefree_part(x3) == ZPoly::monomial(1, 1));
}

TEST_CASE("separability_depth") {
    ZPoly g{1, 0, 1};  // x^2 + 1: Res(g, g') = 4
    CHECK(separability_depth(g, *LocalField::qp(5)) == 1);
    CHECK(separability_depth(g, *LocalField::cyclotomic(2, 2)) == 9);
    CHECK(separability_depth(ZPoly{-7, 1}, *LocalField::qp(5)) == 1);
    // non-squarefree input is rejected via the vanishing resultant
    CHECK_THROWS_AS(separability_depth(ZPoly{1, 2, 1}, *LocalField::qp(5)), std::domain_error);
}

TEST_CASE("roots of x^2 + 1") {
    ZPoly g{1, 0, 1};

    auto q5 = LocalField::qp(5);
    auto r5 = roots_in_field(g, q5);
    REQUIRE(r5.size() == 2);
    bool has2 = false;
    for (const auto& r : r5) {
        CHECK(!KPoly::from_zpoly(g, q5).evaluate(r).is_provably_nonzero());
        if ((r.scalar().unit() - 2) % 5 == 0) has2 = true;
    }
    CHECK(has2);

    CHECK(roots_in_field(g, LocalField::qp(3)).empty());

    auto K = LocalField::cyclotomic(2, 2);
    auto rK = roots_in_field(g, K);
    REQUIRE(rK.size() == 2);
    FieldElement zeta = K->uniformizer() + K->one();
    CHECK((rK[0].equals(zeta) || rK[0].equals(-zeta)));
    CHECK((rK[1].equals(zeta) || rK[1].equals(-zeta)));
    CHECK(!rK[0].equals(rK[1]));
}

TEST_CASE("quadratic_roots_in_y") {
    auto q3 = LocalField::qp(3);
    auto r = quadratic_roots_in_y(q3->zero(), -q3->one());  // T^2 - 1
    REQUIRE(r.size() == 2);
    CHECK((r[0].equals(q3->one()) || r[0].equals(-q3->one())));

    auto q2 = LocalField::qp(2);
    CHECK(quadratic_roots_in_y(q2->one(), q2->one()).empty());  // T^2+T+1 over Q_2
    auto F = LocalField::extend_int(q2, {1, 1}, FieldKind::unramified);
    CHECK(quadratic_roots_in_y(F->one(), F->one()).size() == 2);  // mu_3 lives in F

    CHECK(quadratic_roots_in_y(q2->zero(), q2->integer(2)).empty());  // T^2 + 2: odd valuation

    // provably zero discriminant: the double root
    auto dbl = quadratic_roots_in_y(q3->integer(-2), q3->one());  // (T-1)^2
    REQUIRE(dbl.size() == 1);
    CHECK(dbl[0].equals(q3->one()));
}

namespace {

// Reference oracle: residues mod p^3 where g vanishes and Newton applies,
// refined by Newton steps on integers mod p^12.
std::vector<Int> oracle_integral_roots(const ZPoly& g, long p) {
    ZPoly dg = g.derivative();
    Int p3 = pow_int(p, 3), p12 = pow_int(p, 12);
    std::vector<Int> lifts;
    for (Int r = 0; r < p3; ++r) {
        if (mod_pos(g.evaluate(r), p3) != 0) continue;
        Int d = dg.evaluate(r);
        long vd = (mod_pos(d, p) != 0) ? 0 : (mod_pos(d, p * p) != 0 ? 1 : 2);
        if (vd >= 2) continue;  // Newton not certified from this window
        if (3 <= 2 * vd) continue;
        Int x = r;
        for (int it = 0; it < 40; ++it) {
            Int fx = mod_pos(g.evaluate(x), p12);
            if (fx == 0) break;
            Int dfx = dg.evaluate(x);
            long v = valuation_int(dfx, p);
            Int unit = dfx / pow_int(p, v);
            Int corr = (fx / pow_int(p, v)) * mod_inverse(unit, p12);
            x = mod_pos(x - corr, p12);
        }
        if (mod_pos(g.evaluate(x), pow_int(p, 9)) != 0) continue;
        Int key = mod_pos(x, pow_int(p, 8));
        bool seen = false;
        for (const auto& k : lifts) seen = seen || k == key;
        if (!seen) lifts.push_back(key);
    }
    return lifts;
}

}  // namespace

TEST_CASE("root finder agrees with the mod-p^3 lifting oracle (sample)") {
    std::mt19937 rng(2024);
    int done = 0;
    while (done < 40) {
        long p = std::vector<long>{2, 3, 5, 7}[rng() % 4];
        std::vector<Int> c;
        long deg = 2 + rng() % 5;
        for (long i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 101) - 50);
        ZPoly g(std::move(c));
        if (g.degree() < 2) continue;
        g = squarefree_part(g);
        if (g.degree() < 1) continue;
        ++done;

        auto K = LocalField::qp(p);
        auto found = roots_in_field(g, K);
        ZPoly dg = g.derivative();
        Int p8 = pow_int(p, 8);

        auto oracle = oracle_integral_roots(g, p);
        // every oracle lift corresponds to exactly one found root
        for (const auto& r : oracle) {
            int hits = 0;
            for (const auto& x : found) {
                if (x.is_provably_nonzero() && x.valuation() < 0) continue;
                Int xv = x.is_provably_nonzero()
                             ? mod_pos(x.scalar().unit() * pow_int(p, x.valuation()), p8)
                             : Int(0);
                if (xv == r) ++hits;
            }
            CHECK(hits == 1);
        }
        // every integral simple-enough found root appears in the oracle
        for (const auto& x : found) {
            if (x.is_provably_nonzero() && x.valuation() < 0) continue;
            Int xv = x.is_provably_nonzero()
                         ? mod_pos(x.scalar().unit() * pow_int(p, x.valuation()), p8)
                         : Int(0);
            Int d = dg.evaluate(xv);
            long vd = d == 0 ? 99 : valuation_int(d, p);
            if (vd >= 2) continue;
            bool seen = false;
            for (const auto& r : oracle) seen = seen || r == xv;
            CHECK(seen);
        }
        // generic invariants
        CHECK(static_cast<long>(found.size()) <= g.degree());
        for (size_t i = 0; i < found.size(); ++i)
            for (size_t j = i + 1; j < found.size(); ++j) CHECK(!found[i].equals(found[j]));
        for (const auto& x : found) {
            FieldElement res = KPoly::from_zpoly(g, K).evaluate(x);
            CHECK(!res.is_provably_nonzero());
        }
    }
}
