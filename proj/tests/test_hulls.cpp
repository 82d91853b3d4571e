#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capra/hulls.hpp"
#include "capra/lp.hpp"

#include <random>

using namespace capra;

namespace {

PointSet ps(std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<Vector> v;
    for (auto p : pts) v.push_back(Vector::exact(p));
    return PointSet::of(std::move(v));
}

/// Independent float check: feasibility of the convex-combination system.
bool origin_in_hull_float(const std::vector<VecD>& pts, double eps) {
    std::vector<std::vector<double>> cols;
    for (const VecD& p : pts) {
        std::vector<double> c(p.begin(), p.end());
        c.push_back(1.0);
        cols.push_back(std::move(c));
    }
    std::vector<double> rhs(pts.empty() ? 1 : pts[0].size() + 1, 0.0);
    rhs.back() = 1.0;
    return lp_feasible<double>(cols, rhs, eps).feasible;
}

}  // namespace

TEST_CASE("point sets deduplicate and stay mode-consistent") {
    PointSet s = ps({{1, 0}, {1, 0}, {0, 1}});
    CHECK(s.size() == 2);
    CHECK_THROWS_AS(PointSet::of({Vector::exact({1, 0}), Vector(VecD{1.0, 0.0})}), ModeMismatchError);
    CHECK_THROWS_AS(PointSet::of({Vector::exact({1, 0}), Vector::exact({1, 0, 0})}), DimensionMismatchError);
}

TEST_CASE("origin in hull: K1 generators with the expected weights") {
    auto r = origin_in_convex_hull(ps({{1, 0}, {-1, 1}, {-1, -1}}));
    REQUIRE(r.inside);
    REQUIRE(r.certificate.is_combination);
    // the combination is unique here: 1/2, 1/4, 1/4
    REQUIRE(r.certificate.combination.weights.size() == 3);
    CHECK(r.certificate.combination.weights[0].first == Rat(1, 2));
    CHECK(r.certificate.combination.weights[1].first == Rat(1, 4));
    CHECK(r.certificate.combination.weights[2].first == Rat(1, 4));
}

TEST_CASE("origin in hull: separated sets get a strict separator") {
    auto r = origin_in_convex_hull(ps({{-1, 0}, {-1, 1}, {-1, -1}}));
    REQUIRE(!r.inside);
    const Separator& s = r.certificate.separator;
    CHECK(s.b < 0);
    for (const VecR& p : ps({{-1, 0}, {-1, 1}, {-1, -1}}).exactified()) CHECK(dot_r(s.a, p) <= s.b);
}

TEST_CASE("origin in hull corner cases") {
    CHECK(origin_in_convex_hull(ps({{0, 0}})).inside);        // single point at the origin
    CHECK(!origin_in_convex_hull(PointSet{}).inside);         // empty set, trivial separator
    CHECK(origin_in_convex_hull(ps({{1, 0}, {-1, 0}})).inside);
    CHECK(origin_in_convex_hull(ps({{2, 0}, {-3, 3}, {-1, -1}})).inside);
    CHECK(!origin_in_convex_hull(ps({{-5, 0}, {-2, 2}})).inside);
}

TEST_CASE("normalized origin membership matches the unnormalized test") {
    CHECK(normalized_origin_membership_equivalence(ps({{2, 0}, {-3, 3}, {-1, -1}}), SourceNorm::l2()).inside);
    CHECK(!normalized_origin_membership_equivalence(ps({{-5, 0}, {-2, 2}}), SourceNorm::l2()).inside);
    CHECK(normalized_origin_membership_equivalence(ps({{1, 0}, {-1, 0}}), SourceNorm::l2()).inside);
    CHECK_THROWS_AS(normalized_origin_membership_equivalence(ps({{0, 0}, {1, 1}}), SourceNorm::l2()),
                    InvalidInputError);
}

TEST_CASE("normalization invariance against a float test on projected points") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 8);
    std::uniform_int_distribution<int> dims(2, 4), counts(3, 6);
    int inside_count = 0;
    for (int it = 0; it < 1000; ++it) {
        int d = dims(rng), m = counts(rng);
        std::vector<Vector> pts;
        std::vector<VecD> normalized;
        for (int k = 0; k < m; ++k) {
            VecR p(d);
            bool zero = true;
            for (Rat& c : p) {
                c = Rat(num(rng), den(rng));
                if (!c.is_zero()) zero = false;
            }
            if (zero) p[0] = 1;
            normalized.push_back(radial_projection_d(Vector(p).realized(), SourceNorm::l2()));
            pts.push_back(Vector(std::move(p)));
        }
        bool exact = normalized_origin_membership_equivalence(PointSet::of(pts), SourceNorm::l2()).inside;
        bool approx = origin_in_hull_float(normalized, 1e-7);
        CHECK(exact == approx);
        if (exact) ++inside_count;
    }
    CHECK(inside_count > 100);  // both outcomes exercised
}

TEST_CASE("certificates re-verify by direct arithmetic") {
    std::mt19937_64 rng(5678);
    std::uniform_int_distribution<long> num(-10, 10), den(1, 4);
    for (int it = 0; it < 300; ++it) {
        std::vector<Vector> pts;
        for (int k = 0; k < 4; ++k) {
            VecR p{Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
            pts.push_back(Vector(std::move(p)));
        }
        PointSet s = PointSet::of(std::move(pts));
        auto r = origin_in_convex_hull(s);
        CHECK(verify_origin_certificate(s, r));
    }
}

TEST_CASE("convex hull of a point set") {
    Polytope2D t = convex_hull_2d(ps({{1, 0}, {-1, 1}, {-1, -1}}));
    CHECK(t.size() == 3);
    Polytope2D seg = convex_hull_2d(ps({{-1, 0}, {-1, 1}, {-1, -1}}));
    CHECK(seg.size() == 2);
    CHECK(convex_hull_2d(ps({{0, 0}})).size() == 1);
    CHECK_THROWS_AS(convex_hull_2d(ps({{1, 0, 0}})), DimensionMismatchError);
    // float input is exactified losslessly
    Polytope2D f = convex_hull_2d(PointSet::of({Vector(VecD{0.5, 0.25}), Vector(VecD{1.0, 0.0})}));
    CHECK(f.size() == 2);
}

TEST_CASE("conical and positive hull descriptions") {
    RaySetDescription c = conical_hull(ps({{1, 0}}));
    CHECK(!c.include_origin);
    CHECK(c.directions.size() == 1);

    RaySetDescription z = conical_hull(ps({{0, 0}}));
    CHECK(z.include_origin);  // lambda 0-vector stays at the origin
    CHECK(z.directions.empty());

    RaySetDescription two = conical_hull(ps({{1, 0}, {0, 1}}));
    CHECK(two.directions.size() == 2);  // union of two rays, not the quarter plane
    CHECK(!two.include_origin);

    CHECK(positive_hull(PointSet{}).include_origin);
    CHECK(positive_hull(ps({{1, 0}})).include_origin);
    RaySetDescription neg = positive_hull(ps({{-1, 1}}));
    CHECK(neg.include_origin);
    CHECK(neg.directions.size() == 1);
}
