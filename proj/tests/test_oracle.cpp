#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capra/oracle.hpp"

using namespace capra;

namespace {

PointSet ps(std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<Vector> v;
    for (auto p : pts) v.push_back(Vector::exact(p));
    return PointSet::of(std::move(v));
}

ConeSpec k2() { return ConeSpec::ray_fan(ps({{-1, 0}, {-1, 1}, {-1, -1}}), false); }

ConeSpec k3() {
    std::vector<Vector> v{Vector(VecD{0.5, 0.8660254037844386}), Vector(VecD{0.5, -0.8660254037844386})};
    return ConeSpec::polytope_cone(PointSet::of(std::move(v)), false);
}

}  // namespace

TEST_CASE("sphere samples land on the sphere") {
    for (const SourceNorm& n : {SourceNorm::l1(), SourceNorm::l2(), SourceNorm::linf()}) {
        for (std::size_t d : {2u, 3u, 4u}) {
            auto pts = sphere_samples(n, 200, d, 11);
            CHECK(pts.size() == 200);
            for (const VecD& p : pts) CHECK(norm_d(p, n) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("oracle flags the segment excess of K2 under the sup norm") {
    ConeSpec K = k2();
    OracleResult r = sampling_oracle(K, SourceNorm::linf(), 10000, 1e-6, 42);
    CHECK(r.suggested == Verdict::not_capra_convex);
    CHECK(r.flagged > 100);
    // witnesses sit on the left edge of the cube between the generators
    for (const VecD& w : r.witnesses) {
        CHECK(w[0] == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(std::fabs(w[1]) < 1.0);
    }
}

TEST_CASE("oracle finds no excess for K3") {
    OracleResult r2 = sampling_oracle(k3(), SourceNorm::l2(), 10000, 1e-6, 42);
    CHECK(r2.suggested == Verdict::capra_convex);
    CHECK(r2.flagged == 0);
    CHECK(!r2.origin_excess);

    OracleResult rinf = sampling_oracle(k3(), SourceNorm::linf(), 10000, 1e-6, 42);
    CHECK(rinf.suggested == Verdict::capra_convex);
    CHECK(rinf.flagged == 0);
}

TEST_CASE("oracle flags the origin for K1 under the Euclidean norm") {
    ConeSpec K = ConeSpec::ray_fan(ps({{1, 0}, {-1, 1}, {-1, -1}}), false);
    OracleResult r = sampling_oracle(K, SourceNorm::l2(), 10000, 1e-6, 42);
    CHECK(r.origin_excess);
    CHECK(r.suggested == Verdict::not_capra_convex);
}

TEST_CASE("single ray has no excess") {
    ConeSpec K = ConeSpec::ray_fan(ps({{2, 1}}), false);
    OracleResult r = sampling_oracle(K, SourceNorm::l2(), 1000, 1e-6, 42);
    CHECK(r.suggested == Verdict::capra_convex);
    CHECK(r.flagged == 0);
}

TEST_CASE("oracle is deterministic and identical across serial and parallel") {
    ConeSpec K = k2();
    OracleResult a = sampling_oracle(K, SourceNorm::linf(), 5000, 1e-6, 7, true);
    OracleResult b = sampling_oracle(K, SourceNorm::linf(), 5000, 1e-6, 7, false);
    CHECK(a.flagged == b.flagged);
    CHECK(a.origin_excess == b.origin_excess);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(a.witnesses[i] == b.witnesses[i]);
}

TEST_CASE("three-dimensional oracle path") {
    // closed convex quadrant cone in R^3 including the origin
    ConeSpec K = ConeSpec::convex_cone(ps({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), true);
    OracleResult r = sampling_oracle(K, SourceNorm::l2(), 1000, 1e-5, 3);
    CHECK(r.suggested == Verdict::capra_convex);

    ConeSpec fan = ConeSpec::ray_fan(ps({{1, 0, 0}, {-1, 1, 0}, {-1, -1, 0}}), false);
    OracleResult rf = sampling_oracle(fan, SourceNorm::l2(), 1000, 1e-5, 3);
    CHECK(rf.origin_excess);  // 0 sits in the hull of the projected generators
    CHECK(rf.suggested == Verdict::not_capra_convex);
}
