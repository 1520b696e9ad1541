#include <doctest.h>

#include <g2x/liealg.hpp>
#include <g2x/rng.hpp>
#include <g2x/threeform.hpp>

using namespace g2x;

namespace {

Mat diag7(std::initializer_list<long> entries) {
    Mat a(7, 7);
    std::size_t k = 0;
    for (long v : entries) {
        a.at(k, k) = Scalar(v);
        ++k;
    }
    return a;
}

// Diagonal element of the stabilizer of rho0: (l1, l2, l3, -l1, -l2, -l3, 0)
// with l1 + l2 + l3 = 0.
Mat cartan_element(long l1, long l2, long l3) {
    return diag7({l1, l2, l3, -l1, -l2, -l3, 0});
}

Mat random_matrix(Rng& rng, std::size_t n, int max_abs) {
    Mat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Scalar(rng.rational(max_abs, 1));
    return a;
}

}  // namespace

TEST_CASE("identity acts on a k-form as minus k") {
    CHECK(lie_action(Mat::identity(7), rho0()) == Scalar(-3) * rho0());
    CHECK(lie_action(Mat::identity(6), omega_symp()) == Scalar(-2) * omega_symp());
}

TEST_CASE("lie action is a representation of the commutator") {
    Rng rng(0x11A10001);
    for (int k = 0; k < 8; ++k) {
        Mat a = random_matrix(rng, 5, 2);
        Mat b = random_matrix(rng, 5, 2);
        AltForm f(5, 2);
        f += Scalar(rng.rational(3, 2)) * AltForm::basis(5, {0, 3});
        f += Scalar(rng.rational(3, 2)) * AltForm::basis(5, {1, 2});
        f += Scalar(rng.rational(3, 2)) * AltForm::basis(5, {2, 4});
        AltForm lhs = lie_action(a * b - b * a, f);
        AltForm rhs = lie_action(a, lie_action(b, f)) - lie_action(b, lie_action(a, f));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lie action matches the evaluation definition") {
    Rng rng(0x11A10002);
    Mat a = random_matrix(rng, 7, 2);
    AltForm f = rho0();
    AltForm moved = lie_action(a, f);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<std::vector<Scalar>> args(3, std::vector<Scalar>(7, Scalar(0)));
        for (auto& v : args)
            for (int j = 0; j < 7; ++j) v[j] = Scalar(rng.rational(3, 1));
        Scalar want(0);
        for (int p = 0; p < 3; ++p) {
            auto moved_args = args;
            moved_args[p] = a.apply(args[p]);
            want = want - eval_form(f, moved_args);
        }
        CHECK(eval_form(moved, args) == want);
    }
}

TEST_CASE("stabilizer dimensions of the model forms") {
    auto res3 = stabilizer_dim({rho0()});
    CHECK(res3.dim == 14);
    for (const auto& el : res3.basis) {
        CHECK(el.stabilizes_threeform);
        CHECK(lie_action(el.mat, rho0()).is_zero());
        CHECK(el.mat.trace() == Scalar(0));
    }

    auto res_pair = stabilizer_dim({omega_norm2(), omega_symp()});
    CHECK(res_pair.dim == 8);
    for (const auto& el : res_pair.basis) {
        CHECK(el.stabilizes_threeform);
        CHECK(el.stabilizes_symplectic);
    }

    CHECK(stabilizer_dim({omega_symp()}).dim == 21);
}

TEST_CASE("stabilizer of the pair is closed under brackets") {
    auto res = stabilizer_dim({omega_norm2(), omega_symp()});
    REQUIRE(res.dim == 8);
    for (std::size_t i = 0; i < res.basis.size(); ++i) {
        for (std::size_t j = i + 1; j < res.basis.size(); ++j) {
            Mat br = res.basis[i].mat * res.basis[j].mat - res.basis[j].mat * res.basis[i].mat;
            CHECK(lie_action(br, omega_norm2()).is_zero());
            CHECK(lie_action(br, omega_symp()).is_zero());
        }
    }
}

TEST_CASE("characteristic polynomial shape on stabilizer elements") {
    AlgElement el(cartan_element(1, 1, -2));
    el.stabilizes_threeform = true;
    UniPoly p = char_poly(el);
    CHECK(p.degree() == 7);
    auto inv = g2_invariants(el);
    CHECK(inv.f == Scalar(6));
    CHECK(inv.q == Scalar(4));
    // x^7 - f x^5 + (f^2/4) x^3 - q x
    CHECK(p.coeff(3) == Scalar(9));
    CHECK(p.coeff(6) == Scalar(0));
    CHECK(p.coeff(4) == Scalar(0));
    CHECK(p.coeff(2) == Scalar(0));
    CHECK(p.coeff(0) == Scalar(0));

    AlgElement el2(cartan_element(2, 3, -5));
    auto inv2 = g2_invariants(el2);
    CHECK(inv2.f == Scalar(38));
    CHECK(inv2.q == Scalar(900));
}

TEST_CASE("invariant shape holds along random stabilizer directions") {
    auto res = stabilizer_dim({rho0()});
    REQUIRE(res.dim == 14);
    Rng rng(0x11A10003);
    for (int k = 0; k < 10; ++k) {
        Mat a(7, 7);
        for (const auto& el : res.basis) {
            Scalar c = Scalar(rng.rational(2, 1));
            a += c * el.mat;
        }
        AlgElement sum(a);
        sum.stabilizes_threeform = true;
        auto inv = g2_invariants(sum);  // would throw on any shape violation
        UniPoly p = char_poly(sum);
        CHECK(p.coeff(3) * Scalar(4) == inv.f * inv.f);
    }
}

TEST_CASE("invariant extraction rejects non-stabilizer shapes") {
    AlgElement bad(diag7({1, 2, 3, 4, 5, 6, 7}));
    bad.stabilizes_threeform = true;
    CHECK_THROWS_AS(g2_invariants(bad), std::domain_error);
}

TEST_CASE("characteristic polynomial of a diagonal symplectic element") {
    Mat a(4, 4);
    a.at(0, 0) = Scalar(1);
    a.at(1, 1) = Scalar(2);
    a.at(2, 2) = Scalar(-1);
    a.at(3, 3) = Scalar(-2);
    AlgElement el(a);
    el.stabilizes_symplectic = true;
    UniPoly p = char_poly(el);
    // x^4 - 5x^2 + 4
    CHECK(p == UniPoly({Scalar(4), Scalar(0), Scalar(-5), Scalar(0), Scalar(1)}));
}

TEST_CASE("canonical kernel vector in dimension three") {
    // alpha = 5 e1^e2 comes from a rotation generator of speed 5
    Mat a(3, 3);
    a.at(1, 2) = Scalar(-5) * Scalar::unit_i();
    a.at(2, 1) = Scalar(5) * Scalar::unit_i();
    auto v0 = canonical_v0(AlgElement(a), top_form(3));
    CHECK(v0[0] == Scalar(5) * Scalar::unit_i());
    CHECK(v0[1] == Scalar(0));
    CHECK(v0[2] == Scalar(0));
    // v0 spans the kernel
    auto av = a.apply(v0);
    for (const auto& c : av) CHECK(c == Scalar(0));
}

TEST_CASE("canonical kernel vector in dimension five") {
    Mat a(5, 5);
    a.at(1, 2) = Scalar(-1) * Scalar::unit_i();
    a.at(2, 1) = Scalar(1) * Scalar::unit_i();
    a.at(3, 4) = Scalar(-2) * Scalar::unit_i();
    a.at(4, 3) = Scalar(2) * Scalar::unit_i();
    auto v0 = canonical_v0(AlgElement(a), top_form(5));
    CHECK(v0[0] == Scalar(-2));
    for (int k = 1; k < 5; ++k) CHECK(v0[k] == Scalar(0));
}

TEST_CASE("canonical kernel vector in dimension seven") {
    Mat a(7, 7);
    long speeds[3] = {1, 2, 3};
    for (int k = 0; k < 3; ++k) {
        a.at(2 * k + 1, 2 * k + 2) = Scalar(-speeds[k]) * Scalar::unit_i();
        a.at(2 * k + 2, 2 * k + 1) = Scalar(speeds[k]) * Scalar::unit_i();
    }
    auto v0 = canonical_v0(AlgElement(a), top_form(7));
    CHECK(v0[0] == Scalar(-6) * Scalar::unit_i());
    for (int k = 1; k < 7; ++k) CHECK(v0[k] == Scalar(0));
}

TEST_CASE("canonical kernel vector validates its input") {
    Mat not_skew(3, 3);
    not_skew.at(0, 1) = Scalar(1);
    CHECK_THROWS_AS(canonical_v0(AlgElement(not_skew), top_form(3)), std::invalid_argument);
    CHECK_THROWS_AS(canonical_v0(AlgElement(Mat(4, 4)), top_form(4)), std::invalid_argument);
}

TEST_CASE("quadratic degeneration indicator on a symplectic model") {
    // On sp(4): b1 -> a1 nilpotent plus diag(0, l2, 0, -l2) in basis a1,a2,b1,b2.
    Mat phi(4, 4);
    phi.at(0, 2) = Scalar(1);
    phi.at(1, 1) = Scalar(1);
    phi.at(3, 3) = Scalar(-1);
    AlgElement el(phi);

    std::vector<Scalar> e = {Scalar(0), Scalar(0), Scalar(1), Scalar(0)};
    CHECK(quadratic_condition_check(el, e) == Scalar(0));
    for (auto& c : e) c = -c;
    CHECK(quadratic_condition_check(el, e) == Scalar(0));
    std::vector<Scalar> doubled = {Scalar(0), Scalar(0), Scalar(2), Scalar(0)};
    CHECK(quadratic_condition_check(el, doubled) != Scalar(0));
}

TEST_CASE("quadratic indicator rejects elements outside sp") {
    Mat phi(4, 4);
    phi.at(0, 0) = Scalar(1);  // not symplectic: phi^T J + J phi != 0 needs pairing
    phi.at(1, 1) = Scalar(1);
    phi.at(2, 2) = Scalar(1);
    phi.at(3, 3) = Scalar(1);
    CHECK_THROWS_AS(quadratic_condition_check(AlgElement(phi), std::vector<Scalar>(4, Scalar(1))),
                    std::domain_error);
}

TEST_CASE("fiber model lands in the stabilizer of the degenerate pair") {
    Rng rng(0x11A10004);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Scalar> a_param = {Scalar(rng.rational(3, 2)), Scalar(rng.rational(3, 2)),
                                       Scalar(rng.rational(3, 2))};
        Mat m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) m.at(i, j) = m.at(j, i) = Scalar(rng.rational(3, 2));
        m.at(2, 2) = -(m.at(0, 0) + m.at(1, 1));
        Mat phi = fiform_element(a_param, m);
        CHECK(lie_action(phi, omega_symp()).is_zero());
        CHECK(lie_action(phi, omega_norm2()).is_zero());
    }
}

TEST_CASE("fiber model validates the symmetric traceless part") {
    std::vector<Scalar> a_param(3, Scalar(1));
    Mat not_sym(3, 3);
    not_sym.at(0, 1) = Scalar(1);
    CHECK_THROWS_AS(fiform_element(a_param, not_sym), std::invalid_argument);
    Mat not_traceless = Mat::identity(3);
    CHECK_THROWS_AS(fiform_element(a_param, not_traceless), std::invalid_argument);
}

TEST_CASE("kernel vector of the fiber model is twice the parameter") {
    Rng rng(0x11A10005);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Scalar> a_param = {Scalar(rng.rational(4, 2)), Scalar(rng.rational(4, 2)),
                                       Scalar(rng.rational(4, 2))};
        Mat m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) m.at(i, j) = m.at(j, i) = Scalar(rng.rational(4, 2));
        m.at(2, 2) = -(m.at(0, 0) + m.at(1, 1));
        CHECK(verify_v0_equals_2a(a_param, m));
    }
}
