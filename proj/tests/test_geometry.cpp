#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capra/norm.hpp"

#include <random>

using namespace capra;

namespace {

Vector vr(std::initializer_list<long> c) { return Vector::exact(c); }
Vector vd(std::initializer_list<double> c) { return Vector(VecD(c)); }

}  // namespace

TEST_CASE("scalar arithmetic stays exact and mode-strict") {
    Scalar a(Rat(1, 3)), b(Rat(1, 6));
    CHECK((a + b) == Scalar(Rat(1, 2)));
    CHECK((a - b) == Scalar(Rat(1, 6)));
    CHECK((a * b) == Scalar(Rat(1, 18)));
    CHECK((a / b) == Scalar(Rat(2)));
    CHECK_THROWS_AS(a + Scalar(0.5), ModeMismatchError);
    CHECK_THROWS_AS(Scalar(0.5).rat(), ModeMismatchError);
    CHECK_THROWS_AS(a / Scalar(Rat(0)), InvalidInputError);
}

TEST_CASE("norm values") {
    CHECK(norm(vd({3, 4}), SourceNorm::l2()).real() == 5.0);
    CHECK(norm(vr({-2, 2}), SourceNorm::linf()) == Scalar(Rat(2)));
    CHECK(norm(vr({1, -2, 3}), SourceNorm::l1()) == Scalar(Rat(6)));
    CHECK(norm(vd({1, -2, 3}), SourceNorm::lp(3.0)).real() ==
          doctest::Approx(std::pow(1 + 8 + 27, 1.0 / 3.0)));
    // exact Euclidean norms are only available squared
    CHECK_THROWS_AS(norm(vr({3, 4}), SourceNorm::l2()), NormError);
    CHECK(norm_squared(vr({3, 4})) == Scalar(Rat(25)));
    CHECK(norm(vr({0, 0}), SourceNorm::l1()).is_zero());
}

TEST_CASE("radial projection basics") {
    SpherePoint p = radial_projection(vd({2, 0}), SourceNorm::l2());
    CHECK(!p.is_origin());
    CHECK(p.direction().real_coords() == VecD{1, 0});

    CHECK(radial_projection(vr({0, 0}), SourceNorm::l1()).is_origin());
    CHECK(radial_projection(vd({0, 0}), SourceNorm::l2()).is_origin());

    SpherePoint q = radial_projection(vr({-2, 2}), SourceNorm::linf());
    CHECK(q.direction().exact_coords() == VecR{Rat(-1), Rat(1)});

    CHECK_THROWS_AS(radial_projection(vr({1, 1}), SourceNorm::l2()), NormError);
}

TEST_CASE("capra coupling values") {
    CHECK(capra_coupling(vd({3, 0}), vd({1, 2}), SourceNorm::l2()).real() == 1.0);
    CHECK(capra_coupling(vr({0, 0}), vr({5, -7}), SourceNorm::l1()).is_zero());
    CHECK(capra_coupling(vd({0, 0}), vd({5, -7}), SourceNorm::l2()).real() == 0.0);

    // direct evaluation of the defining quotient as the oracle
    Scalar c = capra_coupling(vr({1, 1}), vr({1, 1}), SourceNorm::linf());
    Rat direct = dot_r({Rat(1), Rat(1)}, {Rat(1), Rat(1)}) / norm_r({Rat(1), Rat(1)}, SourceNorm::linf());
    CHECK(c.rat() == direct);
    CHECK(c.rat() == 2);

    CHECK_THROWS_AS(capra_coupling(vr({1, 0}), vr({1, 0, 0}), SourceNorm::l1()), DimensionMismatchError);
    CHECK_THROWS_AS(capra_coupling(vr({1, 0}), vd({1, 0}), SourceNorm::l1()), ModeMismatchError);
}

TEST_CASE("rho is positively zero-homogeneous and flips sign with lambda < 0") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    std::uniform_real_distribution<double> lam(0.01, 10.0);
    for (int it = 0; it < 2000; ++it) {
        std::size_t d = 2 + it % 3;
        VecD x(d);
        for (double& v : x) v = coord(rng);
        double l = lam(rng);
        for (const SourceNorm& n : {SourceNorm::l1(), SourceNorm::l2(), SourceNorm::linf(), SourceNorm::lp(3.0)}) {
            VecD sx = radial_projection_d(x, n);
            VecD pos(x), neg(x);
            for (double& v : pos) v *= l;
            for (double& v : neg) v *= -l;
            VecD sp = radial_projection_d(pos, n);
            VecD sn = radial_projection_d(neg, n);
            for (std::size_t i = 0; i < d; ++i) {
                CHECK(sp[i] == doctest::Approx(sx[i]).epsilon(1e-9));
                CHECK(sn[i] == doctest::Approx(-sx[i]).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("rho maps into the sphere-with-origin") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int it = 0; it < 2000; ++it) {
        VecD x(2 + it % 3);
        for (double& v : x) v = coord(rng);
        for (const SourceNorm& n : {SourceNorm::l1(), SourceNorm::l2(), SourceNorm::linf()}) {
            // SpherePoint construction validates the invariant
            SpherePoint s = radial_projection(Vector(x), n);
            CHECK(!s.is_origin());
        }
    }
    // exact-mode range: the image has exact norm one
    std::uniform_int_distribution<long> num(-40, 40), den(1, 8);
    for (int it = 0; it < 500; ++it) {
        VecR x{Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        bool zero = x[0].is_zero() && x[1].is_zero();
        for (const SourceNorm& n : {SourceNorm::l1(), SourceNorm::linf()}) {
            SpherePoint s = radial_projection(Vector(x), n);
            if (zero)
                CHECK(s.is_origin());
            else
                CHECK(norm_r(s.direction().exact_coords(), n) == 1);
        }
    }
}

TEST_CASE("coupling factorizes through rho") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int it = 0; it < 1000; ++it) {
        VecD x(2), y(2);
        for (double& v : x) v = coord(rng);
        for (double& v : y) v = coord(rng);
        for (const SourceNorm& n : {SourceNorm::l1(), SourceNorm::l2(), SourceNorm::linf()}) {
            double lhs = capra_coupling_d(x, y, n);
            double rhs = dot_d(radial_projection_d(x, n), y);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("exact rho is idempotent for polyhedral norms") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 8);
    for (int it = 0; it < 500; ++it) {
        VecR x{Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        if (x[0].is_zero() && x[1].is_zero() && x[2].is_zero()) continue;
        for (const SourceNorm& n : {SourceNorm::l1(), SourceNorm::linf()}) {
            VecR once = radial_projection_r(x, n);
            VecR twice = radial_projection_r(once, n);
            CHECK(once == twice);
        }
    }
}
