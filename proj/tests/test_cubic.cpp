#include <doctest.h>

#include <g2x/cubic.hpp>
#include <g2x/rng.hpp>

using namespace g2x;

namespace {

CurveFamily base_family() {
    CurveFamily c;
    c.g_base = 2;
    c.f = UniPoly::constant(Scalar(3));
    c.q = UniPoly::x();
    return c;
}

UniPoly random_poly(Rng& rng, int max_deg, int max_abs) {
    std::vector<Scalar> cs;
    long deg = static_cast<long>(rng.uniform(0, max_deg));
    for (long k = 0; k <= deg; ++k) cs.emplace_back(rng.rational(max_abs, 2));
    return UniPoly(cs);
}

CurveFamily random_admissible(Rng& rng) {
    for (;;) {
        CurveFamily c;
        c.g_base = 2;
        c.f = random_poly(rng, 3, 4);
        c.q = random_poly(rng, 5, 4);
        try {
            require_admissible(c);
            return c;
        } catch (const AdmissibilityError&) {
        }
    }
}

TangentVec random_tangent(Rng& rng) {
    TangentVec t;
    t.f_dot = random_poly(rng, 3, 4);
    t.q_dot = random_poly(rng, 5, 4);
    return t;
}

}  // namespace

TEST_CASE("frozen values on the reference family") {
    CurveFamily c = base_family();
    TangentVec u{UniPoly(), UniPoly::constant(Scalar(1))};   // q variation 1
    TangentVec w{UniPoly(), UniPoly::x()};                   // q variation z
    CHECK(cubic_form(c, u, u, u) == Scalar(0));
    CHECK(cubic_form(c, u, u, w) == Scalar(Rational(-1, 9)));
}

TEST_CASE("dual tangent is explicit on the reference family") {
    CurveFamily c = base_family();
    TangentVec t{UniPoly::constant(Scalar(2)), UniPoly::x()};
    TangentVec td = dual_tangent(c, t);
    CHECK(td.f_dot == t.f_dot);
    // f^2 f_dot / 18 - q_dot = 9*2/18 - z = 1 - z
    CHECK(td.q_dot == UniPoly({Scalar(1), Scalar(-1)}));
    // applying the dual variation twice returns the original
    TangentVec tdd = dual_tangent(dualize(c), td);
    CHECK(tdd.f_dot == t.f_dot);
    CHECK(tdd.q_dot == t.q_dot);
}

TEST_CASE("dual tangent inverts itself on random data") {
    Rng rng(0xCB000001);
    for (int k = 0; k < 20; ++k) {
        CurveFamily c = random_admissible(rng);
        TangentVec t = random_tangent(rng);
        TangentVec back = dual_tangent(dualize(c), dual_tangent(c, t));
        CHECK(back.f_dot == t.f_dot);
        CHECK(back.q_dot == t.q_dot);
    }
}

TEST_CASE("admissibility rejects repeated and shared roots") {
    CurveFamily c;
    c.g_base = 2;
    c.f = UniPoly::constant(Scalar(3));
    c.q = UniPoly::x() * UniPoly::x();
    CHECK_THROWS_AS(require_admissible(c), AdmissibilityError);
    try {
        require_admissible(c);
    } catch (const AdmissibilityError& e) {
        CHECK(e.witness.degree() >= 1);
    }

    CurveFamily zero_q;
    zero_q.g_base = 2;
    zero_q.f = UniPoly::constant(Scalar(3));
    zero_q.q = UniPoly();
    CHECK_THROWS_AS(require_admissible(zero_q), AdmissibilityError);

    // f = 0 makes q_dual = -q, so every root of q is shared with the dual
    CurveFamily shared;
    shared.g_base = 2;
    shared.f = UniPoly();
    shared.q = UniPoly::x();
    CHECK_THROWS_AS(require_admissible(shared), AdmissibilityError);
    try {
        require_admissible(shared);
    } catch (const AdmissibilityError& e) {
        CHECK(std::string(e.what()).find("common") != std::string::npos);
    }
}

TEST_CASE("cubic form is trilinear and symmetric") {
    Rng rng(0xCB000002);
    CurveFamily c = random_admissible(rng);
    TangentVec t1 = random_tangent(rng);
    TangentVec t2 = random_tangent(rng);
    TangentVec t3 = random_tangent(rng);

    // symmetry in all arguments
    Scalar v = cubic_form(c, t1, t2, t3);
    CHECK(v == cubic_form(c, t2, t1, t3));
    CHECK(v == cubic_form(c, t3, t2, t1));
    CHECK(v == cubic_form(c, t1, t3, t2));

    // additivity in the first slot
    TangentVec sum{t1.f_dot + t2.f_dot, t1.q_dot + t2.q_dot};
    CHECK(cubic_form(c, sum, t2, t3) == v + cubic_form(c, t2, t2, t3));

    // scaling in the first slot
    TangentVec scaled{UniPoly::constant(Scalar(5)) * t1.f_dot,
                      UniPoly::constant(Scalar(5)) * t1.q_dot};
    CHECK(cubic_form(c, scaled, t2, t3) == Scalar(5) * v);
}

TEST_CASE("cubic form is invariant under the duality involution") {
    Rng rng(0xCB000003);
    for (int k = 0; k < 12; ++k) {
        CurveFamily c = random_admissible(rng);
        TangentVec t1 = random_tangent(rng);
        TangentVec t2 = random_tangent(rng);
        TangentVec t3 = random_tangent(rng);
        CHECK(verify_involution_invariance(c, t1, t2, t3));
    }
}

TEST_CASE("sixfold angle identity and branch weights") {
    CHECK(verify_cos6_identity());
    Rng rng(0xCB000004);
    CHECK(verify_bvw_identity(rng));
}

TEST_CASE("floating point oracle agrees with the exact value") {
    Rng rng(0xCB000005);
    for (int k = 0; k < 15; ++k) {
        CurveFamily c = random_admissible(rng);
        TangentVec t1 = random_tangent(rng);
        TangentVec t2 = random_tangent(rng);
        TangentVec t3 = random_tangent(rng);
        Scalar exact = cubic_form(c, t1, t2, t3);
        std::complex<double> approx = cubic_form_numeric(c, t1, t2, t3);
        double scale = std::max(1.0, std::abs(approx));
        CHECK(std::abs(exact.to_complex() - approx) < 1e-9 * scale);
    }
}

TEST_CASE("cubic form refuses inadmissible families") {
    CurveFamily c;
    c.g_base = 2;
    c.f = UniPoly::constant(Scalar(3));
    c.q = UniPoly::x() * UniPoly::x();
    TangentVec t{UniPoly(), UniPoly::constant(Scalar(1))};
    CHECK_THROWS_AS(cubic_form(c, t, t, t), AdmissibilityError);
}
