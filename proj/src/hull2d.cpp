#include "capra/hull2d.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace capra {

namespace {

bool on_segment(const P2& a, const P2& b, const P2& q) {
    if (!cross3(a, b, q).is_zero()) return false;
    P2 d{b.x - a.x, b.y - a.y};
    Rat t = dot2({q.x - a.x, q.y - a.y}, d);
    return t >= 0 && t <= dot2(d, d);
}

/// Parameter of q along [a, b], scaled by |b-a|^2 (so it ranges over [0, L]).
Rat seg_param(const P2& a, const P2& b, const P2& q) {
    P2 d{b.x - a.x, b.y - a.y};
    return dot2({q.x - a.x, q.y - a.y}, d);
}

P2 seg_point(const P2& a, const P2& b, const Rat& t) {
    P2 d{b.x - a.x, b.y - a.y};
    Rat len2 = dot2(d, d);
    return {a.x + d.x * t / len2, a.y + d.y * t / len2};
}

/// Canonical key of the supporting line of [a, b]: (nx, ny, c) with
/// n.(x,y) = c, first nonzero of n positive, normalized to lowest terms.
std::tuple<std::string, std::string, std::string> line_key(const P2& a, const P2& b) {
    Rat nx = a.y - b.y, ny = b.x - a.x;
    Rat c = nx * a.x + ny * a.y;
    Rat scale = !nx.is_zero() ? nx : ny;
    nx /= scale;
    ny /= scale;
    c /= scale;
    return {rat_format(nx), rat_format(ny), rat_format(c)};
}

}  // namespace

Polytope2D Polytope2D::hull_of(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return from_ccw(std::move(pts));

    std::vector<P2> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return from_ccw(std::move(h));
}

bool Polytope2D::contains(const P2& q) const {
    if (vs_.empty()) return false;
    if (vs_.size() == 1) return vs_[0] == q;
    if (vs_.size() == 2) return on_segment(vs_[0], vs_[1], q);
    for (std::size_t i = 0; i < vs_.size(); ++i) {
        if (cross3(vs_[i], vs_[(i + 1) % vs_.size()], q) < 0) return false;
    }
    return true;
}

std::vector<P2> sphere_polygon(const SourceNorm& n) {
    if (n.kind == SourceNorm::P::inf)
        return {{Rat(1), Rat(-1)}, {Rat(1), Rat(1)}, {Rat(-1), Rat(1)}, {Rat(-1), Rat(-1)}};
    if (n.kind == SourceNorm::P::one)
        return {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}};
    throw NormError("sphere_polygon: polyhedral norms only (p in {1, inf})");
}

P2 radial_projection_p2(const P2& v, const SourceNorm& n) {
    Rat d = n.kind == SourceNorm::P::inf ? std::max(Rat(abs(v.x)), Rat(abs(v.y))) : Rat(abs(v.x)) + Rat(abs(v.y));
    if (d.is_zero()) throw InvalidInputError("radial_projection_p2: zero vector");
    return {v.x / d, v.y / d};
}

namespace {

struct EdgeClip {
    bool empty = true;
    Rat t0, t1;  // parameters in [0, 1] along the sphere edge
};

/// Intersection of the segment u + t(v-u), t in [0,1], with the polytope.
EdgeClip clip_edge(const Polytope2D& P, const P2& u, const P2& v) {
    EdgeClip out;
    if (P.empty()) return out;
    const auto& vs = P.vertices();

    Rat lo(0), hi(1);
    auto clip_halfplane = [&](const Rat& f0, const Rat& f1) -> bool {
        // keep f0 + t (f1 - f0) >= 0
        if (f0 == f1) return f0 >= 0;
        Rat t = f0 / (f0 - f1);
        if (f1 < f0) {
            hi = std::min(hi, t);
        } else {
            lo = std::max(lo, t);
        }
        return lo <= hi;
    };

    if (vs.size() >= 3) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const P2 &a = vs[i], &b = vs[(i + 1) % vs.size()];
            if (!clip_halfplane(cross3(a, b, u), cross3(a, b, v))) return out;
        }
        out = {false, lo, hi};
        return out;
    }

    if (vs.size() == 2) {
        const P2 &p = vs[0], &q = vs[1];
        Rat g0 = cross3(p, q, u), g1 = cross3(p, q, v);
        if (g0 == g1) {
            if (!g0.is_zero()) return out;
            // edge collinear with the segment: clip by its extent
            P2 d{q.x - p.x, q.y - p.y};
            Rat len2 = dot2(d, d);
            Rat h0 = seg_param(p, q, u), h1 = seg_param(p, q, v);
            if (!clip_halfplane(h0, h1)) return out;                  // >= 0
            if (!clip_halfplane(len2 - h0, len2 - h1)) return out;    // <= len2
            out = {false, lo, hi};
            return out;
        }
        Rat t = g0 / (g0 - g1);
        if (t < 0 || t > 1) return out;
        P2 pt{u.x + (v.x - u.x) * t, u.y + (v.y - u.y) * t};
        if (!on_segment(p, q, pt)) return out;
        out = {false, t, t};
        return out;
    }

    // single point
    const P2& p = vs[0];
    if (!on_segment(u, v, p)) return out;
    P2 d{v.x - u.x, v.y - u.y};
    Rat t = seg_param(u, v, p) / dot2(d, d);
    out = {false, t, t};
    return out;
}

}  // namespace

SphereSet polytope_sphere_intersection_2d(const Polytope2D& P, const SourceNorm& n) {
    for (const P2& v : P.vertices()) {
        Rat d = n.kind == SourceNorm::P::inf ? std::max(Rat(abs(v.x)), Rat(abs(v.y))) : Rat(abs(v.x)) + Rat(abs(v.y));
        if (d > 1) throw InvalidInputError("polytope_sphere_intersection_2d: polytope extends outside the unit ball");
    }

    SphereSet out;
    auto poly = sphere_polygon(n);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const P2 &u = poly[i], &v = poly[(i + 1) % poly.size()];
        EdgeClip c = clip_edge(P, u, v);
        if (c.empty) continue;
        P2 a{u.x + (v.x - u.x) * c.t0, u.y + (v.y - u.y) * c.t0};
        P2 b{u.x + (v.x - u.x) * c.t1, u.y + (v.y - u.y) * c.t1};
        if (a == b)
            out.points.push_back(a);
        else
            out.segments.push_back({a, b});
    }
    out.origin = P.contains({Rat(0), Rat(0)});
    canonicalize(out);
    return out;
}

void canonicalize(SphereSet& s) {
    // normalize segment endpoint order
    for (Seg2& g : s.segments) {
        if (!lex_less(g.a, g.b)) std::swap(g.a, g.b);
        if (g.a == g.b) s.points.push_back(g.a);
    }
    s.segments.erase(std::remove_if(s.segments.begin(), s.segments.end(),
                                    [](const Seg2& g) { return g.a == g.b; }),
                     s.segments.end());

    // merge collinear touching/overlapping segments
    std::map<std::tuple<std::string, std::string, std::string>, std::vector<Seg2>> by_line;
    for (const Seg2& g : s.segments) by_line[line_key(g.a, g.b)].push_back(g);
    s.segments.clear();
    for (auto& [key, group] : by_line) {
        std::sort(group.begin(), group.end(), [](const Seg2& l, const Seg2& r) { return lex_less(l.a, r.a); });
        Seg2 cur = group[0];
        for (std::size_t i = 1; i < group.size(); ++i) {
            const Seg2& g = group[i];
            // segments share a line; merge when g starts within cur
            Rat end_param = seg_param(cur.a, cur.b, g.a);
            if (end_param <= dot2({cur.b.x - cur.a.x, cur.b.y - cur.a.y}, {cur.b.x - cur.a.x, cur.b.y - cur.a.y})) {
                if (lex_less(cur.b, g.b)) cur.b = g.b;
            } else {
                s.segments.push_back(cur);
                cur = g;
            }
        }
        s.segments.push_back(cur);
    }

    // drop duplicate points and points covered by segments
    std::sort(s.points.begin(), s.points.end(), lex_less);
    s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
    s.points.erase(std::remove_if(s.points.begin(), s.points.end(),
                                  [&](const P2& p) {
                                      for (const Seg2& g : s.segments)
                                          if (on_segment(g.a, g.b, p)) return true;
                                      return false;
                                  }),
                   s.points.end());

    std::sort(s.segments.begin(), s.segments.end(), [](const Seg2& l, const Seg2& r) {
        return lex_less(l.a, r.a) || (l.a == r.a && lex_less(l.b, r.b));
    });
}

bool sphere_set_subset(const SphereSet& lhs, const SphereSet& rhs) {
    if (lhs.origin && !rhs.origin) return false;
    auto in_rhs = [&](const P2& p) {
        for (const P2& q : rhs.points)
            if (p == q) return true;
        for (const Seg2& g : rhs.segments)
            if (on_segment(g.a, g.b, p)) return true;
        return false;
    };
    for (const P2& p : lhs.points)
        if (!in_rhs(p)) return false;
    for (const Seg2& g : lhs.segments) {
        bool covered = false;
        for (const Seg2& h : rhs.segments)
            if (on_segment(h.a, h.b, g.a) && on_segment(h.a, h.b, g.b)) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

std::optional<ExcessWitness> find_excess(const SphereSet& lhs, const SphereSet& rhs) {
    if (rhs.origin && !lhs.origin) return ExcessWitness{true, std::nullopt};

    for (const Seg2& h : rhs.segments) {
        P2 d{h.b.x - h.a.x, h.b.y - h.a.y};
        Rat len2 = dot2(d, d);
        // covered sub-intervals from lhs segments lying on this line
        std::vector<std::pair<Rat, Rat>> covered;
        for (const Seg2& g : lhs.segments) {
            if (!on_segment(h.a, h.b, g.a) || !on_segment(h.a, h.b, g.b)) continue;
            Rat p0 = seg_param(h.a, h.b, g.a), p1 = seg_param(h.a, h.b, g.b);
            if (p0 > p1) std::swap(p0, p1);
            covered.emplace_back(p0, p1);
        }
        std::sort(covered.begin(), covered.end());
        std::vector<std::pair<Rat, Rat>> gaps;
        Rat pos(0);
        for (const auto& [c0, c1] : covered) {
            if (c0 > pos) gaps.emplace_back(pos, c0);
            pos = std::max(pos, c1);
        }
        if (pos < len2) gaps.emplace_back(pos, len2);
        if (gaps.empty()) continue;

        // scan from the lexicographically greater end of the segment
        const auto& [glo, ghi] = gaps.back();
        std::vector<Rat> inner;
        for (const P2& p : lhs.points) {
            if (!on_segment(h.a, h.b, p)) continue;
            Rat t = seg_param(h.a, h.b, p);
            if (t > glo && t < ghi) inner.push_back(t);
        }
        std::sort(inner.begin(), inner.end());
        Rat t_low = inner.empty() ? glo : inner.back();
        Rat witness_t = (t_low + ghi) / 2;
        return ExcessWitness{false, seg_point(h.a, h.b, witness_t)};
    }

    auto in_lhs = [&](const P2& p) {
        for (const P2& q : lhs.points)
            if (p == q) return true;
        for (const Seg2& g : lhs.segments)
            if (on_segment(g.a, g.b, p)) return true;
        return false;
    };
    for (const P2& p : rhs.points)
        if (!in_lhs(p)) return ExcessWitness{false, p};

    return std::nullopt;
}

namespace {

struct EdgePos {
    std::size_t edge;
    Rat t;  // normalized [0, 1), corners attach to the outgoing edge
};

EdgePos locate_on_polygon(const std::vector<P2>& poly, const P2& p) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const P2 &a = poly[i], &b = poly[(i + 1) % poly.size()];
        if (!on_segment(a, b, p)) continue;
        P2 d{b.x - a.x, b.y - a.y};
        Rat t = seg_param(a, b, p) / dot2(d, d);
        if (t == 1) continue;  // corner belongs to the next edge
        return {i, t};
    }
    throw InvalidInputError("locate_on_polygon: point is not on the sphere");
}

}  // namespace

SphereSet sphere_full(const SourceNorm& n) {
    SphereSet s;
    auto poly = sphere_polygon(n);
    for (std::size_t i = 0; i < poly.size(); ++i) s.segments.push_back({poly[i], poly[(i + 1) % poly.size()]});
    canonicalize(s);
    return s;
}

SphereSet sphere_arc(const P2& lo, const P2& hi, const SourceNorm& n) {
    SphereSet s;
    P2 slo = radial_projection_p2(lo, n), shi = radial_projection_p2(hi, n);
    if (slo == shi) {
        s.points.push_back(slo);
        canonicalize(s);
        return s;
    }
    auto poly = sphere_polygon(n);
    EdgePos a = locate_on_polygon(poly, slo);
    EdgePos b = locate_on_polygon(poly, shi);

    auto edge_start = [&](std::size_t e) { return poly[e % poly.size()]; };
    auto edge_end = [&](std::size_t e) { return poly[(e + 1) % poly.size()]; };

    if (a.edge == b.edge && a.t < b.t) {
        s.segments.push_back({slo, shi});
    } else {
        s.segments.push_back({slo, edge_end(a.edge)});
        std::size_t e = (a.edge + 1) % poly.size();
        while (e != b.edge) {
            s.segments.push_back({edge_start(e), edge_end(e)});
            e = (e + 1) % poly.size();
        }
        s.segments.push_back({edge_start(b.edge), shi});
    }
    canonicalize(s);
    return s;
}

}  // namespace capra
