#include "capra/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace capra {

namespace {

constexpr double kScale = 100.0;
constexpr double kCenter = 240.0;
constexpr double kReach = 2.3;  // world radius drawn for unbounded parts

std::string fmt(double v) {
    char buf[32];
    if (v == 0.0) v = 0.0;  // normalize -0
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string px(double x) { return fmt(kCenter + kScale * x); }
std::string py(double y) { return fmt(kCenter - kScale * y); }

void line(std::ostringstream& o, double x1, double y1, double x2, double y2, const char* style) {
    o << "<line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\"" << py(y2) << "\" "
      << style << "/>\n";
}

void dot(std::ostringstream& o, double x, double y, double r, const char* style) {
    o << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << fmt(r) << "\" " << style << "/>\n";
}

VecD unit2(const VecD& v) { return radial_projection_d(v, SourceNorm::l2()); }

double angle_of(const VecD& v) { return std::atan2(v[1], v[0]); }

/// Directions swept counterclockwise from lo to hi, inclusive.
std::vector<VecD> sweep(const VecD& lo, const VecD& hi, std::size_t steps) {
    double a0 = angle_of(lo), a1 = angle_of(hi);
    if (a1 <= a0) a1 += 2.0 * M_PI;
    std::vector<VecD> out;
    out.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        double a = a0 + (a1 - a0) * static_cast<double>(i) / static_cast<double>(steps);
        out.push_back({std::cos(a), std::sin(a)});
    }
    return out;
}

void sphere_outline(std::ostringstream& o, const SourceNorm& n) {
    const char* style = "fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"6,4\" stroke-width=\"1.5\"";
    if (n.kind == SourceNorm::P::two) {
        o << "<circle cx=\"" << fmt(kCenter) << "\" cy=\"" << fmt(kCenter) << "\" r=\"" << fmt(kScale) << "\" "
          << style << "/>\n";
        return;
    }
    std::ostringstream d;
    if (n.polyhedral()) {
        auto poly = sphere_polygon(n);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            d << (i == 0 ? "M" : "L") << px(rat_to_double(poly[i].x)) << "," << py(rat_to_double(poly[i].y));
        }
    } else {
        for (std::size_t i = 0; i < 192; ++i) {
            double a = 2.0 * M_PI * static_cast<double>(i) / 192.0;
            VecD s = radial_projection_d({std::cos(a), std::sin(a)}, n);
            d << (i == 0 ? "M" : "L") << px(s[0]) << "," << py(s[1]);
        }
    }
    d << "Z";
    o << "<path d=\"" << d.str() << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const std::optional<ConeSpec>& K, const SourceNorm& n) {
    if (K && K->dim() != 2) throw DimensionMismatchError("render_svg: d = 2 only");

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
    line(o, -2.4, 0, 2.4, 0, "stroke=\"#cccccc\" stroke-width=\"1\"");
    line(o, 0, -2.4, 0, 2.4, "stroke=\"#cccccc\" stroke-width=\"1\"");

    std::optional<SectorClass2D> cls;
    bool origin_in = false;
    if (K) {
        cls = classify_sector_2d(*K);
        origin_in = origin_status(*K);

        // cone body in blue
        const char* fill = "fill=\"#b3ccff\" fill-opacity=\"0.55\" stroke=\"none\"";
        const char* ray_style = "stroke=\"#2255cc\" stroke-width=\"2.5\"";
        switch (cls->kind) {
            case SectorClass2D::Kind::rays:
                for (const VecR& r : cls->rays) {
                    VecD d = unit2({rat_to_double(r[0]), rat_to_double(r[1])});
                    line(o, 0, 0, kReach * d[0], kReach * d[1], ray_style);
                }
                break;
            case SectorClass2D::Kind::pointed:
            case SectorClass2D::Kind::half_plane:
            case SectorClass2D::Kind::open_half_plane: {
                bool open = cls->kind == SectorClass2D::Kind::open_half_plane;
                VecD lo = unit2({rat_to_double(cls->lo[0]), rat_to_double(cls->lo[1])});
                VecD hi = unit2({rat_to_double(cls->hi[0]), rat_to_double(cls->hi[1])});
                std::ostringstream d;
                d << "M" << px(0) << "," << py(0);
                for (const VecD& s : sweep(lo, hi, 48)) d << "L" << px(kReach * s[0]) << "," << py(kReach * s[1]);
                d << "Z";
                o << "<path d=\"" << d.str() << "\" " << fill << "/>\n";
                const char* boundary = open ? "stroke=\"#2255cc\" stroke-width=\"2.5\" stroke-dasharray=\"5,5\""
                                            : ray_style;
                line(o, 0, 0, kReach * lo[0], kReach * lo[1], boundary);
                line(o, 0, 0, kReach * hi[0], kReach * hi[1], boundary);
                break;
            }
            case SectorClass2D::Kind::full_plane:
                o << "<rect x=\"0\" y=\"0\" width=\"480\" height=\"480\" " << fill << "/>\n";
                break;
            case SectorClass2D::Kind::empty:
                break;
        }
        if (K->kind() == ConeSpec::Kind::affine_slice) {
            const auto& a = K->as_affine_slice();
            if (a.bounds || affine_kernel(a, 2).empty()) {
                auto ext = affine_slice_extremes_2d(a);
                if (ext.size() == 2)
                    line(o, rat_to_double(ext[0][0]), rat_to_double(ext[0][1]), rat_to_double(ext[1][0]),
                         rat_to_double(ext[1][1]), "stroke=\"#222222\" stroke-width=\"2\"");
            } else if (auto x0 = solve_affine(a.a_rows, a.b, 2)) {
                // unbounded line slice: draw it clipped to the frame
                VecR k = affine_kernel(a, 2)[0];
                VecD kd = unit2({rat_to_double(k[0]), rat_to_double(k[1])});
                double cx = rat_to_double((*x0)[0]), cy = rat_to_double((*x0)[1]);
                line(o, cx - 5 * kd[0], cy - 5 * kd[1], cx + 5 * kd[0], cy + 5 * kd[1],
                     "stroke=\"#222222\" stroke-width=\"2\"");
            }
        }

        // rho(K) directions for the hull overlay
        std::vector<VecD> rho_dirs;
        switch (cls->kind) {
            case SectorClass2D::Kind::rays:
                for (const VecR& r : cls->rays)
                    rho_dirs.push_back(radial_projection_d({rat_to_double(r[0]), rat_to_double(r[1])}, n));
                break;
            case SectorClass2D::Kind::pointed:
            case SectorClass2D::Kind::half_plane:
            case SectorClass2D::Kind::open_half_plane: {
                VecD lo = unit2({rat_to_double(cls->lo[0]), rat_to_double(cls->lo[1])});
                VecD hi = unit2({rat_to_double(cls->hi[0]), rat_to_double(cls->hi[1])});
                for (const VecD& s : sweep(lo, hi, 96)) rho_dirs.push_back(radial_projection_d(s, n));
                break;
            }
            case SectorClass2D::Kind::full_plane:
                for (std::size_t i = 0; i < 96; ++i) {
                    double a = 2.0 * M_PI * static_cast<double>(i) / 96.0;
                    rho_dirs.push_back(radial_projection_d({std::cos(a), std::sin(a)}, n));
                }
                break;
            case SectorClass2D::Kind::empty:
                break;
        }

        // cch(rho(K)) in cyan
        std::vector<P2> hull_pts;
        for (const VecD& p : rho_dirs) hull_pts.push_back({rat_from_double(p[0]), rat_from_double(p[1])});
        if (origin_in) hull_pts.push_back({Rat(0), Rat(0)});
        Polytope2D hull = Polytope2D::hull_of(std::move(hull_pts));
        if (hull.size() >= 2) {
            std::ostringstream d;
            const auto& vs = hull.vertices();
            for (std::size_t i = 0; i < vs.size(); ++i)
                d << (i == 0 ? "M" : "L") << px(rat_to_double(vs[i].x)) << "," << py(rat_to_double(vs[i].y));
            d << "Z";
            o << "<path d=\"" << d.str()
              << "\" fill=\"#66dddd\" fill-opacity=\"0.35\" stroke=\"#22aaaa\" stroke-width=\"1.5\"/>\n";
        }

        // rho(K) trace in red
        const char* red_line = "stroke=\"#cc2222\" stroke-width=\"3\"";
        if (n.polyhedral() && cls->kind != SectorClass2D::Kind::open_half_plane) {
            SphereSet img = radial_image_2d(*K, n);
            for (const Seg2& g : img.segments)
                line(o, rat_to_double(g.a.x), rat_to_double(g.a.y), rat_to_double(g.b.x), rat_to_double(g.b.y),
                     red_line);
            for (const P2& p : img.points)
                dot(o, rat_to_double(p.x), rat_to_double(p.y), 4.0, "fill=\"#cc2222\" stroke=\"none\"");
        } else {
            if (cls->kind == SectorClass2D::Kind::rays) {
                for (const VecR& r : cls->rays) {
                    VecD s = radial_projection_d({rat_to_double(r[0]), rat_to_double(r[1])}, n);
                    dot(o, s[0], s[1], 4.0, "fill=\"#cc2222\" stroke=\"none\"");
                }
            } else if (!rho_dirs.empty()) {
                std::ostringstream d;
                for (std::size_t i = 0; i < rho_dirs.size(); ++i)
                    d << (i == 0 ? "M" : "L") << px(rho_dirs[i][0]) << "," << py(rho_dirs[i][1]);
                o << "<path d=\"" << d.str() << "\" fill=\"none\" " << red_line << "/>\n";
            }
        }
    }

    sphere_outline(o, n);

    if (K) {
        if (origin_in)
            dot(o, 0, 0, 4.0, "fill=\"#000000\" stroke=\"none\"");
        else
            dot(o, 0, 0, 4.0, "fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.5\"");
    }

    o << "</svg>\n";
    return o.str();
}

}  // namespace capra
