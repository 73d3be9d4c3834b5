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

#include "charp/flift.hpp"
#include "test_util.hpp"

using namespace charp;
using charp_test::random_poly;

namespace {

// x1x2 + x3x4 + ... over 2n (or +x_{2n+1}^2 over odd) variables
Poly quadric(const Ring& r) {
    Poly f(r);
    std::uint32_t n = r.nvars();
    for (std::uint32_t i = 0; i + 1 < n; i += 2)
        f = f + Poly::variable(r, i) * Poly::variable(r, i + 1);
    if (n % 2) f = f + Poly::variable(r, n - 1).pow(2);
    return f;
}

} // namespace

TEST_CASE("defect polynomial basics") {
    SECTION("P_x = 0 for any p") {
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            Ring r = Ring::make(p, 1, {"x"});
            CHECK(compute_Pf(Poly::variable(r, 0)).value.is_zero());
        }
    }
    SECTION("P_{x+y} = xy at p = 2") {
        Ring r = Ring::make(2, 1, {"x", "y"});
        Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
        CHECK(compute_Pf(x + y).value == x * y);
    }
    SECTION("unit-coefficient monomials have zero defect") {
        Ring r = Ring::make(5, 1, {"x", "y"});
        Poly m = Poly::variable(r, 0).pow(2) * Poly::variable(r, 1);
        CHECK(compute_Pf(m).value.is_zero());
        // c = 2: FQ(2) = (2 - 32)/5 = -6 = 4 mod 5
        CHECK(compute_Pf(2 * m).value == 4 * m.pow(5));
    }
    SECTION("lift invariant replays: p * lift(P) = F(lift) - lift^p") {
        Ring r = Ring::make(3, 1, 2);
        std::mt19937_64 rng(4);
        for (int i = 0; i < 20; ++i) {
            Poly f = random_poly(rng, r, 4, 3);
            DefectPolynomial d = compute_Pf(f);
            CHECK(3 * d.value.canonical_lift() ==
                  d.lift.witt_frobenius_endo() - d.lift.pow(3));
        }
    }
}

TEST_CASE("defect of the six-variable quadric against the multinomial formula") {
    Ring r = Ring::make(3, 1, 6);
    Poly f6 = quadric(r);
    Poly m1 = Poly::variable(r, 0) * Poly::variable(r, 1);
    Poly m2 = Poly::variable(r, 2) * Poly::variable(r, 3);
    Poly m3 = Poly::variable(r, 4) * Poly::variable(r, 5);
    // integer oracle: -(sum over compositions of 3 with parts < 3 of
    // 2!/(i!j!k!) m1^i m2^j m3^k) = -(2*m1m2m3 + sum of m_a^2 m_b)
    Poly expect = -2 * (m1 * m2 * m3);
    for (const Poly* a : {&m1, &m2, &m3})
        for (const Poly* b : {&m1, &m2, &m3})
            if (a != b) expect = expect - a->pow(2) * (*b);
    CHECK(compute_Pf(f6).value == expect);
    CHECK(compute_Pf_oracle(f6) == expect);
}

TEST_CASE("oracle path equals the lift path on random inputs") {
    SECTION("spec examples") {
        Ring r3 = Ring::make(3, 1, {"x"});
        Poly x = Poly::variable(r3, 0);
        CHECK(compute_Pf_oracle(x).is_zero());
        CHECK(compute_Pf_oracle(2 * x) == x.pow(3)); // FQ(2) = -2 = 1 mod 3
    }
    SECTION("random agreement") {
        for (std::uint32_t p : {2u, 3u, 5u}) {
            Ring r = Ring::make(p, 1, 3);
            std::mt19937_64 rng(600 + p);
            for (int i = 0; i < 40; ++i) {
                Poly f = random_poly(rng, r, 5, 4);
                CHECK(compute_Pf(f).value == compute_Pf_oracle(f));
            }
        }
    }
    SECTION("composition cap") {
        Ring r = Ring::make(13, 1, 2);
        std::mt19937_64 rng(9);
        Poly f = random_poly(rng, r, 6, 2, false);
        CHECK_THROWS_AS(compute_Pf_oracle(f, 10), std::domain_error);
    }
}

TEST_CASE("changing the lift changes P by exactly a p-th power") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Ring r = Ring::make(p, 1, 2);
        std::mt19937_64 rng(70 + p);
        for (int i = 0; i < 30; ++i) {
            Poly f = random_poly(rng, r, 4, 3);
            Poly g = random_poly(rng, r, 3, 2);
            Poly lift2 = f.canonical_lift() + g.canonical_lift().scaled(p);
            Poly diff = compute_P_from_lift(lift2) - compute_Pf(f).value;
            CHECK(diff == g.frobenius_pth_power());
        }
    }
}

TEST_CASE("quasi-homogeneous weight detection") {
    Ring r = Ring::make(7, 1, {"x", "y", "z"});
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1),
         z = Poly::variable(r, 2);
    SECTION("E-type equation gets (6,4,3)") {
        auto w = detect_quasi_homogeneous({x.pow(2) + y.pow(3) + z.pow(4)});
        REQUIRE(w);
        CHECK(*w == std::vector<std::uint32_t>{6, 4, 3});
    }
    SECTION("monomials take all-ones weights") {
        auto w = detect_quasi_homogeneous({x * y});
        REQUIRE(w);
        CHECK(*w == std::vector<std::uint32_t>{1, 1, 1});
    }
    SECTION("homogeneous quadrics take all-ones weights") {
        Ring r6 = Ring::make(3, 1, 6);
        auto w = detect_quasi_homogeneous({quadric(r6)});
        REQUIRE(w);
        CHECK(*w == std::vector<std::uint32_t>(6, 1));
    }
    SECTION("x^2 + x^3 admits no positive weights") {
        Ring r1 = Ring::make(3, 1, {"x"});
        Poly u = Poly::variable(r1, 0);
        CHECK_FALSE(detect_quasi_homogeneous({u.pow(2) + u.pow(3)}));
    }
}

TEST_CASE("hypersurface liftability verdicts") {
    SECTION("toric monomial is liftable with zero witnesses") {
        Ring r = Ring::make(3, 1, {"x", "y"});
        Poly f = Poly::variable(r, 0) * Poly::variable(r, 1);
        LiftVerdict v = hypersurface_f_liftable(f);
        REQUIRE(v.liftable());
        CHECK(v.g[0].is_zero());
        for (const auto& h : v.h) CHECK(h.is_zero());
        CHECK(verify_flift_witness({f}, v.g, v.h));
    }
    SECTION("five-variable quadric cone is not liftable at p = 3") {
        Ring r = Ring::make(3, 1, 5);
        Poly f(r);
        for (int i = 0; i < 5; ++i) f = f + Poly::variable(r, i).pow(2);
        LiftVerdict v = hypersurface_f_liftable(f);
        CHECK(v.kind == LiftVerdict::Kind::NotLiftable);
        CHECK(v.method == "graded-linear-algebra");
        // the shipped evidence replays through normal_form
        CHECK_FALSE(v.obstruction.normal_form.is_zero());
        GroebnerBasis gb = buchberger(Ideal::make(r, {f}));
        CHECK(normal_form(compute_Pf(f).value, gb) ==
              v.obstruction.normal_form);
    }
    SECTION("E6 singularity is liftable at p = 7 with a replayable witness") {
        Ring r = Ring::make(7, 1, {"x", "y", "z"});
        Poly f = Poly::variable(r, 0).pow(2) + Poly::variable(r, 1).pow(3) +
                 Poly::variable(r, 2).pow(4);
        LiftVerdict v = hypersurface_f_liftable(f);
        REQUIRE(v.liftable());
        CHECK(verify_flift_witness({f}, v.g, v.h));
    }
    SECTION("units and zero are rejected") {
        Ring r = Ring::make(3, 1, {"x"});
        CHECK_THROWS_AS(hypersurface_f_liftable(Poly::constant(r, 1)),
                        std::invalid_argument);
        CHECK_THROWS_AS(hypersurface_f_liftable(Poly::zero(r)),
                        std::invalid_argument);
    }
}

TEST_CASE("witness verification is rigid") {
    Ring r = Ring::make(7, 1, {"x", "y", "z"});
    Poly f = Poly::variable(r, 0).pow(3) + Poly::variable(r, 1).pow(3) +
             Poly::variable(r, 2).pow(3);
    LiftVerdict v = hypersurface_f_liftable(f);
    REQUIRE(v.liftable());
    REQUIRE(verify_flift_witness({f}, v.g, v.h));
    auto broken = v.h;
    broken[0] = broken[0] + 1;
    CHECK_FALSE(verify_flift_witness({f}, v.g, broken));
}

TEST_CASE("descent instance encodes and decodes") {
    Ring r = Ring::make(3, 1, {"x", "y"});
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    Poly f = x.pow(2) * y + 2 * y.pow(4) + x;
    DescentInstance inst = build_descent_instance({f});
    CHECK(inst.rank == 9);
    // target decodes back to P_f
    CHECK(decode_descent_component(inst, inst.target, 0) ==
          compute_Pf(f).value);
    // an ideal-multiplier generator decodes back to f * x^a
    for (std::size_t t = 0; t < inst.tags.size(); ++t) {
        if (inst.tags[t].kind != DescentInstance::GenTag::Kind::ideal_mult)
            continue;
        CHECK(decode_descent_component(inst, inst.gens[t], 0) ==
              f.mul_term(inst.tags[t].basis_mon, 1));
        break;
    }
}

TEST_CASE("descent on trivial and small instances") {
    SECTION("f = x in one variable: zero target, liftable with zeros") {
        Ring r = Ring::make(3, 1, {"x"});
        Poly f = Poly::variable(r, 0);
        LiftVerdict v = solve_descent({f}, build_descent_instance({f}));
        REQUIRE(v.liftable());
        CHECK(v.g[0].is_zero());
        CHECK(v.h[0].is_zero());
    }
    SECTION("graded and descent paths agree on a non-liftable instance") {
        Ring r = Ring::make(3, 1, 5);
        Poly f(r);
        for (int i = 0; i < 5; ++i) f = f + Poly::variable(r, i).pow(2);
        LiftVerdict graded = graded_solver({f}, std::vector<std::uint32_t>(5, 1));
        LiftOptions opts;
        opts.method = LiftOptions::Method::module_groebner;
        LiftVerdict descent = hypersurface_f_liftable(f, opts);
        CHECK(graded.kind == LiftVerdict::Kind::NotLiftable);
        CHECK(descent.kind == LiftVerdict::Kind::NotLiftable);
        REQUIRE(descent.module_obstruction);
        CHECK_FALSE(descent.module_obstruction->normal_form.is_zero());
    }
    SECTION("graded and descent paths agree on a liftable instance") {
        Ring r = Ring::make(3, 1, {"x", "y", "z"});
        Poly f = Poly::variable(r, 0).pow(2) +
                 Poly::variable(r, 1) * Poly::variable(r, 2);
        LiftOptions opts;
        opts.method = LiftOptions::Method::module_groebner;
        LiftVerdict descent = hypersurface_f_liftable(f, opts);
        LiftVerdict graded = hypersurface_f_liftable(f); // auto: graded
        CHECK(graded.liftable());
        CHECK(descent.liftable());
        CHECK(descent.method == "module-groebner");
    }
}

TEST_CASE("m = 1 complete intersection reduces to the hypersurface engine") {
    Ring r = Ring::make(3, 1, 3);
    std::mt19937_64 rng(31);
    int done = 0;
    for (int i = 0; i < 80 && done < 25; ++i) {
        Poly f = random_poly(rng, r, 3, 2);
        if (f.is_zero() || f.is_constant()) continue;
        ++done;
        LiftVerdict a = hypersurface_f_liftable(f);
        LiftVerdict b = ci_f_liftable({f});
        CHECK(a.kind == b.kind);
        CHECK_FALSE(a.regular_sequence_assumed);
    }
    CHECK(done == 25);
}

TEST_CASE("joint systems flag the regular-sequence contract") {
    Ring r = Ring::make(3, 1, {"x", "y"});
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    LiftVerdict v = ci_f_liftable({x.pow(3), y.pow(3)});
    CHECK(v.regular_sequence_assumed);
    CHECK(v.liftable()); // pure powers are monomials, defects vanish
}

TEST_CASE("canonical W2 lifts") {
    SECTION("coefficients survive unchanged") {
        Ring r = Ring::make(7, 1, {"x", "y", "z"});
        Poly f = Poly::variable(r, 0).pow(2) + Poly::variable(r, 1).pow(3) +
                 Poly::variable(r, 2).pow(4);
        W2Lift lift = w2_canonical_ci_lift({f});
        REQUIRE(lift.lifts.size() == 1);
        CHECK(lift.lifts[0].ring().modulus() == 49);
        CHECK(lift.lifts[0].reduce_mod_p() == f);
        CHECK_FALSE(lift.regular_sequence_assumed);
    }
    SECTION("flatness samples pass for the pure-power regular sequence") {
        Ring r = Ring::make(3, 1, {"x", "y"});
        W2Lift lift = w2_canonical_ci_lift(
            {Poly::variable(r, 0).pow(3), Poly::variable(r, 1).pow(3)}, 128, 5);
        CHECK(lift.flatness_checked);
        CHECK(lift.flatness_samples == 128);
        CHECK(lift.flatness_violations == 0);
    }
}

TEST_CASE("quadric family obstructions") {
    SECTION("six-variable quadric is obstructed at p = 3") {
        Ring r = Ring::make(3, 1, 6);
        Poly f6 = quadric(r);
        ObstructionVerdict v =
            quadric_family_w2_obstruction(f6, default_pure_powers(r));
        CHECK(v.obstructed);
        CHECK(v.interpretation == "not-w2-liftable");
        CHECK(v.cert.replay(v.defect));

        ObstructionVerdict pd = pd_obstruction(f6, default_pure_powers(r));
        CHECK(pd.obstructed);
        CHECK(pd.interpretation == "no-pd-structure");
    }
    SECTION("zero defect stays inconclusive") {
        Ring r = Ring::make(3, 1, {"x", "y"});
        Poly f = Poly::variable(r, 0) * Poly::variable(r, 1);
        ObstructionVerdict v =
            quadric_family_w2_obstruction(f, default_pure_powers(r));
        CHECK_FALSE(v.obstructed);
        CHECK(v.interpretation == "inconclusive");
        CHECK(v.defect.is_zero());
    }
    SECTION("odd-variable variant is obstructed at p = 3") {
        Ring r = Ring::make(3, 1, 7);
        Poly f7 = quadric(r); // x1x2 + x3x4 + x5x6 + x7^2
        ObstructionVerdict v = pd_obstruction(f7, default_pure_powers(r));
        CHECK(v.obstructed);
    }
    SECTION("obstruction verdict matches the linear-algebra oracle") {
        Ring r = Ring::make(3, 1, 4);
        Poly f4 = quadric(r);
        auto gens = default_pure_powers(r);
        ObstructionVerdict v = quadric_family_w2_obstruction(f4, gens);
        std::vector<Poly> all = {f4};
        for (const auto& g : gens) all.push_back(g);
        bool member = member_by_linear_algebra(v.defect, Ideal::make(r, all));
        CHECK(member == !v.obstructed);
    }
}
