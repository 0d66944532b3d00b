#include <doctest.h>
#include <ellqp/local_field.hpp>

#include <random>

using namespace ellqp;

TEST_CASE("cyclotomic field construction") {
    auto K = LocalField::cyclotomic(2, 2);
    REQUIRE(K->rel_degree() == 2);
    CHECK(K->abs_e() == 2);
    CHECK(K->abs_f() == 1);
    // Phi_4(x+1) = x^2 + 2x + 2
    CHECK(K->defining_low_coeffs()[0].equals(K->base()->integer(2)));
    CHECK(K->defining_low_coeffs()[1].equals(K->base()->integer(2)));

    auto K31 = LocalField::cyclotomic(3, 1);
    CHECK(K31->rel_degree() == 2);
    CHECK(K31->abs_e() == 2);
    CHECK(K31->defining_low_coeffs()[0].equals(K31->base()->integer(3)));
    CHECK(K31->defining_low_coeffs()[1].equals(K31->base()->integer(3)));

    CHECK(LocalField::cyclotomic(2, 4)->abs_degree() == 8);
    // phi(2) = 1: Q_2 itself
    CHECK(LocalField::cyclotomic(2, 1)->abs_degree() == 1);
}

TEST_CASE("generator of Q_p(mu_{p^n}) is zeta - 1") {
    for (auto [p, n] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        auto K = LocalField::cyclotomic(p, n);
        FieldElement pi = K->uniformizer();
        CHECK(pi.valuation() == 1);
        CHECK(K->integer(p).valuation() == K->abs_e());
        FieldElement zeta = pi + K->one();
        CHECK(zeta.valuation() == 0);
        long pn = 1;
        for (long i = 0; i < n; ++i) pn *= p;
        CHECK(zeta.pow(pn).equals(K->one()));
        // Phi_{p^n}(zeta) = 0 at full precision: evaluate the defining polynomial at pi
        FieldElement acc = pi.pow(K->rel_degree());
        for (long i = 0; i < K->rel_degree(); ++i)
            acc = acc + K->from_base(K->defining_low_coeffs()[i]) * pi.pow(i);
        CHECK(!acc.is_provably_nonzero());
    }
}

TEST_CASE("unramified quadratic over Q_2") {
    auto Q2 = LocalField::qp(2);
    auto F = LocalField::extend_int(Q2, {1, 1}, FieldKind::unramified);  // x^2+x+1
    CHECK(F->abs_f() == 2);
    CHECK(F->abs_e() == 1);
    CHECK(F->residue_field().f == 2);
    // residue/lift section property over F_4
    for (const auto& r : F->residue_field().all_elements()) {
        auto back = F->lift(r).residue();
        CHECK(F->residue_field().equal(back, r));
    }
    // stacking an Eisenstein layer: F(mu_4), absolute degree 4
    auto Fmu4 = LocalField::extend_int(F, {2, 2}, FieldKind::eisenstein);
    CHECK(Fmu4->abs_degree() == 4);
    CHECK(Fmu4->abs_e() == 2);
    CHECK(Fmu4->abs_f() == 2);
    // L_3 = Q_2[x]/(x^2+2)
    auto L3 = LocalField::extend_int(Q2, {2, 0}, FieldKind::eisenstein);
    CHECK(L3->abs_e() == 2);
}

TEST_CASE("extension kind validation") {
    auto Q2 = LocalField::qp(2);
    CHECK_THROWS_AS(LocalField::extend_int(Q2, {1, 1}, FieldKind::eisenstein), std::invalid_argument);
    CHECK_THROWS_AS(LocalField::extend_int(Q2, {4, 2}, FieldKind::eisenstein), std::invalid_argument);
    CHECK_THROWS_AS(LocalField::extend_int(Q2, {1, 0}, FieldKind::unramified), std::invalid_argument);
}

TEST_CASE("residue and lift in a ramified field") {
    auto K = LocalField::cyclotomic(2, 2);
    CHECK(K->residue_field().is_zero(K->uniformizer().residue()));
    CHECK_THROWS_AS(K->integer(2).inverse().residue(), std::domain_error);
    auto one_back = K->lift(K->one().residue());
    CHECK(one_back.equals(K->one()));
}

TEST_CASE("valuation is multiplicative and ultrametric (randomized)") {
    std::mt19937 rng(17);
    auto K = LocalField::cyclotomic(2, 2);
    auto rand_elem = [&]() {
        FieldElement x = K->zero();
        FieldElement pi = K->uniformizer();
        for (int i = 0; i < 4; ++i) {
            long c = rng() % 17;
            if (c) x = x + K->integer(c) * pi.pow(rng() % 5);
        }
        return x;
    };
    for (int i = 0; i < 60; ++i) {
        FieldElement a = rand_elem(), b = rand_elem();
        if (!a.is_provably_nonzero() || !b.is_provably_nonzero()) continue;
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
        FieldElement s = a + b;
        if (s.is_provably_nonzero()) CHECK(s.valuation() >= std::min(a.valuation(), b.valuation()));
    }
}

TEST_CASE("inverse in towers") {
    std::mt19937 rng(23);
    auto Q2 = LocalField::qp(2);
    auto F = LocalField::extend_int(Q2, {1, 1}, FieldKind::unramified);
    auto Fmu4 = LocalField::extend_int(F, {2, 2}, FieldKind::eisenstein);
    for (const FieldPtr& K : {LocalField::cyclotomic(3, 2), Fmu4}) {
        for (int i = 0; i < 12; ++i) {
            FieldElement x = K->zero();
            FieldElement g = K->kind() == FieldKind::qp ? K->one() : K->generator();
            for (long j = 0; j < K->rel_degree(); ++j)
                x = x + g.pow(j).mul_int(static_cast<long>(rng() % 19) - 9);
            if (!x.is_provably_nonzero()) continue;
            CHECK((x * x.inverse()).equals(K->one()));
        }
    }
}
