#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capra/decision.hpp"

using namespace capra;

namespace {

PointSet ps(std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<Vector> v;
    for (auto p : pts) v.push_back(Vector::exact(p));
    return PointSet::of(std::move(v));
}

ConeSpec k1() { return ConeSpec::ray_fan(ps({{1, 0}, {-1, 1}, {-1, -1}}), false); }
ConeSpec k2() { return ConeSpec::ray_fan(ps({{-1, 0}, {-1, 1}, {-1, -1}}), false); }

ConeSpec k3() {
    std::vector<Vector> v{Vector(VecD{0.5, 0.8660254037844386}), Vector(VecD{0.5, -0.8660254037844386})};
    return ConeSpec::polytope_cone(PointSet::of(std::move(v)), false);
}

}  // namespace

TEST_CASE("paper verdict matrix under the Euclidean norm") {
    ConeSpec a = k1();
    DecisionReport r1 = decide_capra_convex(a, SourceNorm::l2());
    CHECK(r1.verdict == Verdict::not_capra_convex);
    CHECK(r1.rule == Rule::rotund_corollary);
    CHECK(verify_certificate(r1, &a));
    const auto& comb = std::get<CombinationCert>(r1.certificate);
    REQUIRE(comb.weights.size() == 3);
    CHECK(comb.weights[0].first == Rat(1, 2));
    CHECK(comb.weights[1].first == Rat(1, 4));
    CHECK(comb.weights[2].first == Rat(1, 4));

    ConeSpec b = k2();
    DecisionReport r2 = decide_capra_convex(b, SourceNorm::l2());
    CHECK(r2.verdict == Verdict::capra_convex);
    CHECK(r2.rule == Rule::rotund_corollary);
    CHECK(verify_certificate(r2, &b));

    ConeSpec c = k3();
    DecisionReport r3 = decide_capra_convex(c, SourceNorm::l2());
    CHECK(r3.verdict == Verdict::capra_convex);
    CHECK(r3.rule == Rule::pointed_minus_origin);  // structural shortcut, no norm assumption
    CHECK(verify_certificate(r3, &c));
}

TEST_CASE("paper verdict matrix under the sup norm") {
    ConeSpec a = k1();
    DecisionReport r1 = decide_capra_convex(a, SourceNorm::linf());
    CHECK(r1.verdict == Verdict::not_capra_convex);
    CHECK(r1.rule == Rule::exact_2d_theorem);
    const auto& w1 = std::get<ExcessWitnessCert>(r1.certificate);
    CHECK(w1.origin);  // the hull picks up the origin while K1 omits it
    CHECK(verify_certificate(r1, &a));
    CHECK(!r1.conditions.origin_agreement);

    ConeSpec b = k2();
    DecisionReport r2 = decide_capra_convex(b, SourceNorm::linf());
    CHECK(r2.verdict == Verdict::not_capra_convex);
    CHECK(r2.rule == Rule::exact_2d_theorem);
    const auto& w2 = std::get<ExcessWitnessCert>(r2.certificate);
    REQUIRE(w2.point.has_value());
    CHECK(*w2.point == VecR{Rat(-1), Rat(1, 2)});  // interior of the segment, not a generator direction
    CHECK(verify_certificate(r2, &b));
    // all three necessary conditions hold, yet the set fails the characterization
    CHECK(r2.conditions.is_cone);
    CHECK(r2.conditions.union_origin_closed);
    CHECK(r2.conditions.origin_agreement);

    ConeSpec c = k3();
    DecisionReport r3 = decide_capra_convex(c, SourceNorm::linf());
    CHECK(r3.verdict == Verdict::capra_convex);
    CHECK(r3.rule == Rule::pointed_minus_origin);  // fires before the exact test
    CHECK(verify_certificate(r3, &c));
}

TEST_CASE("exact 2D characterization for the K3 quadrant data") {
    ConeSpec c = k3();
    TheoremTest2D t = theorem_test_2d(c, SourceNorm::linf());
    CHECK(t.equal);
    REQUIRE(t.hull_intersection.segments.size() == 3);
    CHECK(t.hull_intersection.points.empty());
    CHECK(!t.hull_intersection.origin);
    CHECK(t.radial_image == t.hull_intersection);

    // endpoints match {1} x [-1,1] and the 1/sqrt(3) verticals
    double s = 1.0 / std::sqrt(3.0);
    bool right_edge = false, top = false, bottom = false;
    for (const Seg2& g : t.hull_intersection.segments) {
        double ax = rat_to_double(g.a.x), ay = rat_to_double(g.a.y);
        double bx = rat_to_double(g.b.x), by = rat_to_double(g.b.y);
        if (ax == 1.0 && bx == 1.0) {
            right_edge = true;
            CHECK(ay == doctest::Approx(-1).epsilon(1e-12));
            CHECK(by == doctest::Approx(1).epsilon(1e-12));
        } else if (ay == 1.0 && by == 1.0) {
            top = true;
            CHECK(std::min(ax, bx) == doctest::Approx(s).epsilon(1e-9));
            CHECK(std::max(ax, bx) == doctest::Approx(1).epsilon(1e-12));
        } else if (ay == -1.0 && by == -1.0) {
            bottom = true;
            CHECK(std::min(ax, bx) == doctest::Approx(s).epsilon(1e-9));
        }
    }
    CHECK(right_edge);
    CHECK(top);
    CHECK(bottom);
}

TEST_CASE("affine slice dichotomy") {
    ConeSpec h = ConeSpec::affine_slice({{Rat(1), Rat(1)}}, {Rat(4)}, std::nullopt);
    DecisionReport r = decide_capra_convex(h, SourceNorm::l2());
    CHECK(r.verdict == Verdict::not_capra_convex);
    CHECK(r.rule == Rule::affine_kernel);
    CHECK(verify_certificate(r, &h));
    const auto& k = std::get<KernelWitnessCert>(r.certificate);
    CHECK(dot_r({Rat(1), Rat(1)}, k.witness).is_zero());
    CHECK(!r.conditions.union_origin_closed);

    Box box{{Rat(1), Rat(1)}, {Rat(3), Rat(3)}};
    ConeSpec bounded = ConeSpec::affine_slice({{Rat(1), Rat(1)}}, {Rat(4)}, box);
    DecisionReport rb = decide_capra_convex(bounded, SourceNorm::l2());
    CHECK(rb.verdict == Verdict::capra_convex);
    CHECK(rb.rule == Rule::pointed_minus_origin);
    CHECK(verify_certificate(rb, &bounded));
}

TEST_CASE("conical hull sufficiency") {
    // bounded slice of x1 + x2 = 4 as a polytope generator
    DecisionReport seg = decide_conical_hull(ps({{1, 3}, {3, 1}}), true, SourceNorm::l2());
    CHECK(seg.verdict == Verdict::capra_convex);
    CHECK(seg.rule == Rule::coneX_compact);
    CHECK(verify_certificate(seg, nullptr));

    // single point: one ray
    DecisionReport one = decide_conical_hull(ps({{1, 1}}), false, SourceNorm::linf());
    CHECK(one.verdict == Verdict::capra_convex);
    CHECK(one.rule == Rule::coneX_compact);

    // square with a vertex at the origin: its cone is the closed quadrant,
    // a closed convex cone containing 0, hence Capra-convex under any norm
    DecisionReport sq = decide_conical_hull(ps({{0, 0}, {2, 0}, {2, 2}, {0, 2}}), true, SourceNorm::l2());
    CHECK(sq.verdict == Verdict::capra_convex);
    CHECK(sq.rule == Rule::closed_convex_cone);

    // fan through the origin's hull falls through to the cascade
    DecisionReport fan = decide_conical_hull(ps({{1, 0}, {-1, 1}, {-1, -1}}), false, SourceNorm::l2());
    CHECK(fan.verdict == Verdict::not_capra_convex);
    CHECK(fan.rule == Rule::rotund_corollary);

    // 0 outside the hull but the ball is not rotund and X is not convex:
    // the exact 2D test still settles it
    DecisionReport inf_fan = decide_conical_hull(ps({{-1, 0}, {-1, 1}, {-1, -1}}), false, SourceNorm::linf());
    CHECK(inf_fan.verdict == Verdict::not_capra_convex);
    CHECK(inf_fan.rule == Rule::exact_2d_theorem);
}

TEST_CASE("line pair and whole plane edge cases") {
    // line through the origin: closed convex cone
    ConeSpec line = ConeSpec::ray_fan(ps({{1, 0}, {-1, 0}}), true);
    DecisionReport r = decide_capra_convex(line, SourceNorm::linf());
    CHECK(r.verdict == Verdict::capra_convex);
    CHECK(r.rule == Rule::closed_convex_cone);

    // line minus origin: the chord of antipodal points crosses 0
    ConeSpec punct = ConeSpec::ray_fan(ps({{1, 0}, {-1, 0}}), false);
    DecisionReport rp = decide_capra_convex(punct, SourceNorm::linf());
    CHECK(rp.verdict == Verdict::not_capra_convex);
    CHECK(rp.rule == Rule::exact_2d_theorem);
    const auto& w = std::get<ExcessWitnessCert>(rp.certificate);
    CHECK(w.origin);

    DecisionReport rp2 = decide_capra_convex(punct, SourceNorm::l2());
    CHECK(rp2.verdict == Verdict::not_capra_convex);
    CHECK(rp2.rule == Rule::rotund_corollary);

    // the whole plane as a convex cone
    ConeSpec plane = ConeSpec::convex_cone(ps({{1, 0}, {-1, 1}, {-1, -1}}), false);
    DecisionReport rpl = decide_capra_convex(plane, SourceNorm::linf());
    CHECK(rpl.verdict == Verdict::capra_convex);
    CHECK(rpl.rule == Rule::closed_convex_cone);
}

TEST_CASE("empty cone is Capra-convex") {
    Box far_box{{Rat(10), Rat(10)}, {Rat(11), Rat(11)}};
    ConeSpec empty = ConeSpec::affine_slice({{Rat(1), Rat(1)}}, {Rat(4)}, far_box);
    DecisionReport r = decide_capra_convex(empty, SourceNorm::linf());
    CHECK(r.verdict == Verdict::capra_convex);
    CHECK(r.rule == Rule::pointed_minus_origin);
}

TEST_CASE("undecidable beyond the exact rules") {
    // a 3D fan under the sup norm has no exact rule here
    PointSet gens = ps({{1, 0, 0}, {0, 1, 0}, {-1, -1, 1}});
    ConeSpec fan3 = ConeSpec::ray_fan(gens, false);
    DecisionReport r = decide_capra_convex(fan3, SourceNorm::linf());
    CHECK(r.verdict == Verdict::undecided_exact);
    CHECK(r.rule == Rule::oracle_only);
}

TEST_CASE("spherical convexity of polytope patches") {
    CHECK(is_spherically_convex(ps({{1, 0}, {0, 1}})));   // quarter arc
    CHECK(is_spherically_convex(ps({{0, 1}})));           // singleton arc
    // arc wider than a half circle: the positive hull is not pointed
    PointSet wide = PointSet::of({Vector::exact({1, 0}), Vector(VecR{Rat(-1), Rat(1, 10)}),
                                  Vector(VecR{Rat(-1), Rat(-1, 10)})});
    CHECK(!is_spherically_convex(wide));
    CHECK_THROWS_AS(is_spherically_convex(PointSet{}), InvalidInputError);
}

TEST_CASE("spherically convex patches yield Capra-convex closed cones") {
    SphericalReports r = spherical_to_capra(ps({{1, 0}, {0, 1}}), SourceNorm::l2());
    CHECK(r.closed_cone.verdict == Verdict::capra_convex);
    CHECK(r.closed_cone.rule == Rule::closed_convex_cone);
    REQUIRE(r.minus_origin.has_value());
    CHECK(r.minus_origin->verdict == Verdict::capra_convex);
    CHECK(r.minus_origin->rule == Rule::pointed_minus_origin);

    SphericalReports single = spherical_to_capra(ps({{0, 1}}), SourceNorm::l2());
    CHECK(single.closed_cone.verdict == Verdict::capra_convex);

    PointSet wide = PointSet::of({Vector::exact({1, 0}), Vector(VecR{Rat(-1), Rat(1, 10)}),
                                  Vector(VecR{Rat(-1), Rat(-1, 10)})});
    CHECK_THROWS_AS(spherical_to_capra(wide, SourceNorm::l2()), InvalidInputError);
}

TEST_CASE("l0 sublevel sets") {
    SublevelSet s0 = sublevel_cone(0, 2);
    DecisionReport r0 = decide_sublevel(s0, SourceNorm::l2());
    CHECK(r0.verdict == Verdict::capra_convex);
    CHECK(r0.rule == Rule::closed_convex_cone);

    SublevelSet s1 = sublevel_cone(1, 2);
    REQUIRE(s1.blocks.size() == 2);
    DecisionReport r1 = decide_sublevel(s1, SourceNorm::l2());
    CHECK(r1.verdict == Verdict::capra_convex);
    CHECK(r1.rule == Rule::rotund_corollary);
    CHECK(r1.conditions.union_origin_closed);
    CHECK(r1.conditions.origin_agreement);

    SublevelSet s2 = sublevel_cone(2, 2);
    CHECK(s2.whole_space);
    DecisionReport r2 = decide_sublevel(s2, SourceNorm::l2());
    CHECK(r2.verdict == Verdict::capra_convex);
    CHECK(r2.rule == Rule::closed_convex_cone);

    SublevelSet sm = sublevel_cone(-1, 2);
    CHECK(sm.empty_set);
    DecisionReport rm = decide_sublevel(sm, SourceNorm::l2());
    CHECK(rm.verdict == Verdict::capra_convex);

    // per-block verdicts: every coordinate subspace is a closed convex cone
    SublevelSet s13 = sublevel_cone(1, 3);
    REQUIRE(s13.blocks.size() == 3);
    for (const ConeSpec& block : s13.blocks) {
        DecisionReport rb = decide_capra_convex(block, SourceNorm::l2());
        CHECK(rb.verdict == Verdict::capra_convex);
        CHECK(rb.rule == Rule::closed_convex_cone);
    }

    // under the sup norm in the plane the axis fan is settled exactly
    DecisionReport raxes = decide_sublevel(s1, SourceNorm::linf());
    CHECK(raxes.verdict == Verdict::capra_convex);
    CHECK(raxes.rule == Rule::exact_2d_theorem);
}

TEST_CASE("capra-convex verdicts satisfy the necessary conditions") {
    std::vector<std::pair<ConeSpec, SourceNorm>> cases;
    cases.emplace_back(k2(), SourceNorm::l2());
    cases.emplace_back(k3(), SourceNorm::l2());
    cases.emplace_back(k3(), SourceNorm::linf());
    cases.emplace_back(ConeSpec::convex_cone(ps({{1, 0}, {0, 1}}), true), SourceNorm::l1());
    for (const auto& [K, n] : cases) {
        DecisionReport r = decide_capra_convex(K, n);
        REQUIRE(r.verdict == Verdict::capra_convex);
        CHECK(r.conditions.is_cone);
        CHECK(r.conditions.union_origin_closed);
        CHECK(r.conditions.origin_agreement);
        CHECK(union_origin_closed(K));
    }
}
