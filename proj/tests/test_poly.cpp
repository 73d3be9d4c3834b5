/*
   Copyright 2026 charp-sing contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include "charp/order.hpp"
#include "charp/polynomial.hpp"
#include "test_util.hpp"

using namespace charp;
using charp_test::random_poly;

TEST_CASE("ring construction checks primality and capacity") {
    CHECK_THROWS_AS(Ring::make(4, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Ring::make(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Ring::make(7, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(Ring::make(65537, 2, 1), std::invalid_argument); // p^2 > 2^31
    Ring r = Ring::make(7, 2, {"x", "y"});
    CHECK(r.modulus() == 49);
    CHECK(r.reduce(-3) == 46);
    CHECK(r.mul(r.inv(5), 5) == 1);
    CHECK_THROWS_AS(r.inv(7), std::domain_error);
}

TEST_CASE("additive cancellation lands in canonical zero") {
    Ring f3 = Ring::make(3, 1, {"x", "y"});
    Poly x = Poly::variable(f3, 0), y = Poly::variable(f3, 1);

    CHECK((x + (-x)).is_zero());

    Ring f2 = Ring::make(2, 1, {"x", "y"});
    Poly s = Poly::variable(f2, 0) + Poly::variable(f2, 1);
    CHECK((s + s).is_zero());

    // (2x+1) + (x+2) = 3x+3 = 0 mod 3
    Poly a = 2 * x + Poly::constant(f3, 1);
    Poly b = x + Poly::constant(f3, 2);
    CHECK((a + b).is_zero());
}

TEST_CASE("multiplication and powers") {
    Ring f3 = Ring::make(3, 1, {"x", "y"});
    Poly x = Poly::variable(f3, 0), y = Poly::variable(f3, 1);
    CHECK((x + y).pow(0) == Poly::constant(f3, 1));
    CHECK((x + y).pow(3) == x.pow(3) + y.pow(3)); // freshman's dream mod 3

    Ring z9 = Ring::make(3, 2, {"x"});
    Poly u = Poly::variable(z9, 0);
    CHECK((2 * u).pow(3) == 8 * u.pow(3));
}

TEST_CASE("cross-ring operations are rejected") {
    Ring a = Ring::make(3, 1, {"x"});
    Ring b = Ring::make(5, 1, {"x"});
    CHECK_THROWS_AS(Poly::variable(a, 0) + Poly::variable(b, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(Poly::variable(a, 0) * Poly::variable(b, 0),
                    std::invalid_argument);
}

TEST_CASE("frobenius p-th power examples") {
    Ring f3 = Ring::make(3, 1, {"x", "y"});
    Poly x = Poly::variable(f3, 0), y = Poly::variable(f3, 1);
    CHECK((x + y).frobenius_pth_power() == x.pow(3) + y.pow(3));
    CHECK((2 * x).frobenius_pth_power() == 2 * x.pow(3)); // 2^3 = 2 in F_3

    Ring f2 = Ring::make(2, 1, {"x", "y", "z"});
    Poly f = Poly::variable(f2, 0) * Poly::variable(f2, 1) +
             Poly::variable(f2, 2);
    Poly g = Poly::variable(f2, 0).pow(2) * Poly::variable(f2, 1).pow(2) +
             Poly::variable(f2, 2).pow(2);
    CHECK(f.frobenius_pth_power() == g);

    Ring z9 = Ring::make(3, 2, {"x"});
    CHECK_THROWS_AS(Poly::variable(z9, 0).frobenius_pth_power(),
                    std::domain_error);
}

TEST_CASE("frobenius equals the p-th power on random inputs") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        Ring r = Ring::make(p, 1, 3);
        std::mt19937_64 rng(1000 + p);
        for (int i = 0; i < 30; ++i) {
            Poly f = random_poly(rng, r, 5, 3);
            CHECK(f.frobenius_pth_power() == f.pow(p));
        }
    }
}

TEST_CASE("witt frobenius endomorphism on Z/p^2") {
    Ring z9 = Ring::make(3, 2, {"x", "y"});
    Poly x = Poly::variable(z9, 0), y = Poly::variable(z9, 1);
    CHECK(x.witt_frobenius_endo() == x.pow(3));
    CHECK((2 * x).witt_frobenius_endo() == 2 * x.pow(3));
    CHECK((x + 3 * y).witt_frobenius_endo() == x.pow(3) + 3 * y.pow(3));

    Ring f3 = Ring::make(3, 1, {"x", "y"});
    CHECK_THROWS_AS(Poly::variable(f3, 0).witt_frobenius_endo(),
                    std::domain_error);
}

TEST_CASE("witt frobenius differs from the p-th power by a multiple of p") {
    Ring z25 = Ring::make(5, 2, 2);
    std::mt19937_64 rng(42);
    for (int i = 0; i < 20; ++i) {
        Poly f = random_poly(rng, z25, 4, 2);
        Poly d = f.witt_frobenius_endo() - f.pow(5);
        for (const auto& t : d.terms()) CHECK(t.coeff % 5 == 0);
    }
}

TEST_CASE("canonical lift, reduction, exact division by p") {
    Ring f3 = Ring::make(3, 1, {"x", "y"});
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        Poly f = random_poly(rng, f3, 5, 4);
        CHECK(f.canonical_lift().reduce_mod_p() == f);
    }

    Ring z9 = Ring::make(3, 2, {"x", "y"});
    Poly x = Poly::variable(z9, 0), y = Poly::variable(z9, 1);
    Poly q = (3 * x + 6 * y).exact_divide_by_p();
    Ring f3b = z9.with_exponent(1);
    CHECK(q == Poly::variable(f3b, 0) + 2 * Poly::variable(f3b, 1));
    CHECK(3 * q.canonical_lift() == 3 * x + 6 * y);

    CHECK_THROWS_AS(x.exact_divide_by_p(), std::domain_error);
}

TEST_CASE("partial derivatives") {
    Ring f5 = Ring::make(5, 1, {"x", "y", "z"});
    Poly x = Poly::variable(f5, 0), y = Poly::variable(f5, 1),
         z = Poly::variable(f5, 2);
    CHECK((x.pow(2) + y.pow(3) + z.pow(4)).partial_derivative(0) == 2 * x);
    CHECK(x.pow(5).partial_derivative(0).is_zero());
    CHECK_THROWS_AS(x.partial_derivative(3), std::out_of_range);
}

TEST_CASE("specializing the 10-variable quadric to 6 variables") {
    Ring r10 = Ring::make(3, 1, 10);
    Poly f10(r10);
    for (int i = 0; i < 5; ++i)
        f10 = f10 + Poly::variable(r10, 2 * i) * Poly::variable(r10, 2 * i + 1);
    std::vector<std::optional<Poly>> assignment(10);
    for (int i = 6; i < 10; ++i) assignment[i] = Poly::zero(r10);
    Poly f6(r10);
    for (int i = 0; i < 3; ++i)
        f6 = f6 + Poly::variable(r10, 2 * i) * Poly::variable(r10, 2 * i + 1);
    CHECK(f10.substitute(assignment) == f6);
}

TEST_CASE("no operation stores a zero coefficient") {
    Ring f3 = Ring::make(3, 1, 2);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        Poly a = random_poly(rng, f3, 4, 3);
        Poly b = random_poly(rng, f3, 4, 3);
        for (const Poly& f : {a + b, a - b, a * b, a.pow(2)})
            for (const auto& t : f.terms()) CHECK(t.coeff != 0);
    }
}

TEST_CASE("monomial order properties on sampled triples") {
    std::mt19937_64 rng(3);
    std::vector<MonomialOrder> orders = {
        MonomialOrder::grevlex(), MonomialOrder::lex(),
        MonomialOrder::weighted({2, 3, 5}), MonomialOrder::eliminate_last()};
    for (const auto& ord : orders) {
        for (int i = 0; i < 200; ++i) {
            Monomial a = charp_test::random_monomial(rng, 3, 5);
            Monomial b = charp_test::random_monomial(rng, 3, 5);
            Monomial c = charp_test::random_monomial(rng, 3, 5);
            // totality and antisymmetry
            int ab = ord.compare(a, b);
            CHECK(ab == -ord.compare(b, a));
            CHECK((ab == 0) == (a == b));
            // compatibility with multiplication
            CHECK(ord.compare(a.mul(c), b.mul(c)) == ab);
            // 1 is minimal
            Monomial one(3);
            if (a != one) CHECK(ord.greater(a, one));
        }
    }
}

TEST_CASE("grevlex and lex disagree in the standard way") {
    // x*z^2 vs y^3: grevlex prefers y^3 (same degree, smaller last exponent),
    // lex prefers x*z^2.
    Monomial xz2{{1, 0, 2}};
    Monomial y3{{0, 3, 0}};
    CHECK(MonomialOrder::grevlex().greater(y3, xz2));
    CHECK(MonomialOrder::lex().greater(xz2, y3));
}

TEST_CASE("printing round-trips through term construction") {
    Ring f5 = Ring::make(5, 1, {"x", "y"});
    Poly x = Poly::variable(f5, 0), y = Poly::variable(f5, 1);
    Poly f = 2 * x.pow(2) * y + 4 * y + Poly::constant(f5, 3);
    CHECK(f.str() == "2*x^2*y + 4*y + 3");
    CHECK(Poly::zero(f5).str() == "0");
}
