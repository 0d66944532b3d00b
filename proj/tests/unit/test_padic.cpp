#include <doctest.h>
#include <ellqp/padic.hpp>

#include <random>

using namespace ellqp;

TEST_CASE("from_rational basics") {
    CHECK(Padic::from_rational(0, 1, 5, 20).is_zero_marker());

    Padic x = Padic::from_rational(1, 3, 2, 3);
    CHECK(x.valuation() == 0);
    CHECK(x.unit() % 8 == 3);  // 3 * 3 = 1 mod 8

    Padic y = Padic::from_rational(12, 1, 2, 10);
    CHECK(y.valuation() == 2);
    CHECK(y.unit() == 3);

    CHECK_THROWS_AS(Padic::from_rational(1, 0, 5, 8), division_by_zero);
}

TEST_CASE("inversion") {
    Padic t = Padic::from_rational(3, 1, 2, 3).invert();
    CHECK(t.valuation() == 0);
    CHECK(t.unit() % 8 == 3);
    CHECK_THROWS_AS(Padic::zero(2).invert(), division_by_zero);

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        long p = std::vector<long>{2, 3, 5, 7}[rng() % 4];
        Int n = static_cast<long>(rng() % 5000) + 1;
        Padic a = Padic::from_rational(n, 1 + 2 * (rng() % 300), p, 32);
        if (!a.is_provably_nonzero()) continue;
        Padic prod = a * a.invert();
        CHECK(prod.equals(Padic::from_integer(1, p, 32)));
    }
}

TEST_CASE("valuation rules and ultrametric") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        long p = std::vector<long>{2, 3, 5}[rng() % 3];
        Int na = static_cast<long>(rng() % 9999) + 1, nb = static_cast<long>(rng() % 9999) + 1;
        Padic a = Padic::from_integer(na, p, 30), b = Padic::from_integer(nb, p, 30);
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
        Padic s = a + b;
        if (s.is_provably_nonzero()) {
            CHECK(s.valuation() >= std::min(a.valuation(), b.valuation()));
            if (a.valuation() != b.valuation())
                CHECK(s.valuation() == std::min(a.valuation(), b.valuation()));
        }
    }
}

TEST_CASE("additive identity and zero semantics") {
    Padic x = Padic::from_integer(20, 2, 10);
    Padic z = Padic::zero(2);
    CHECK((x + z).equals(x));
    CHECK((z + x).equals(x));
    // a zero marker of absolute precision 3 equals anything of valuation >= 3
    Padic z3 = Padic::zero(2, 3);
    CHECK(z3.equals(Padic::from_integer(8, 2, 10)));
    CHECK(!z3.equals(Padic::from_integer(4, 2, 10)));
    // x - x is zero to the working precision
    CHECK(!(x - x).is_provably_nonzero());
}

TEST_CASE("from_rational is a ring homomorphism at shared precision") {
    std::mt19937 rng(5);
    for (int i = 0; i < 60; ++i) {
        long p = std::vector<long>{2, 3, 7}[rng() % 3];
        auto rnd = [&](bool unit_den) {
            Int num = static_cast<long>(rng() % 2000) - 1000;
            Int den = 1 + static_cast<long>(rng() % 50);
            while (unit_den && den % p == 0) den += 1;
            if (num == 0) num = 1;
            return std::pair(num, den);
        };
        auto [n1, d1] = rnd(true);
        auto [n2, d2] = rnd(true);
        Padic a = Padic::from_rational(n1, d1, p, 24);
        Padic b = Padic::from_rational(n2, d2, p, 24);
        Padic sum = Padic::from_rational(n1 * d2 + n2 * d1, d1 * d2, p, 24);
        Padic prod = Padic::from_rational(n1 * n2, d1 * d2, p, 24);
        CHECK((a + b).equals(sum));
        CHECK((a * b).equals(prod));
    }
}

TEST_CASE("equality at shared precision") {
    Padic a = Padic::from_unit(5, 7, 2, 10);
    Padic b = Padic::from_unit(5, 7 + 25, 2, 3);
    CHECK(!a.equals(b));
    Padic c = Padic::from_unit(5, Int(7) + pow_int(5, 3), 2, 3);
    CHECK(c.equals(Padic::from_unit(5, 7, 2, 3)));
}

TEST_CASE("rendering") {
    Padic y = Padic::from_rational(12, 1, 2, 10);
    CHECK(y.to_string() == std::string("2^2 * (1 + 1*2) + O(2^12)"));
}
