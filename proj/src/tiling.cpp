#include "perimin/tiling.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <unordered_map>

#include "perimin/errors.hpp"

namespace perimin::tiling {

using hyp::Complex;
using hyp::dist;
using hyp::dist_to_geodesic;
using hyp::fermi;
using hyp::gamma_theta;
using hyp::origin;

namespace {

HPoint sector_ray_point(double u, double r) {
    return HPoint::disk(r * std::sin(u), r * std::cos(u));
}

// Radius of the point on the ray at sector angle u lying at distance d from
// gamma_0: solves sinh(d) = 2 r sin u / (1 - r^2).
double radius_on_equidistant(double u, double d) {
    double S = std::sinh(d);
    double su = std::sin(u);
    return (std::sqrt(su * su + S * S) - su) / S;
}

} // namespace

HGeodesic RightAngledPolygon::edge_geodesic(int i) const {
    int m = edge_count();
    return hyp::geodesic_through(vertices[i % m], vertices[(i + 1) % m]);
}

double RightAngledPolygon::edge_length(int i) const { return (i % 2 == 0) ? b : a; }

double vertex_angle(int n, const HPoint& y) {
    double theta = M_PI / n;
    HPoint v1 = HIsometry::reflection(gamma_theta(theta))(y);
    HPoint vlast = HIsometry::reflection(gamma_theta(0.0))(y);
    return hyp::angle_at(y, v1, vlast);
}

RightAngledPolygon polygon_at(int n, const HPoint& y) {
    if (n < 2) throw BadOrder("polygon_at requires n >= 2");
    double theta = M_PI / n;
    Complex z = hyp::disk_coord(y);
    double u = hyp::sector_angle(y);
    if (std::abs(z) < 1e-12 || u <= 0.0 || u >= theta)
        throw VertexOutsideSector("polygon_at: vertex not in the open sector T_theta");

    RightAngledPolygon poly;
    poly.n = n;
    poly.vertex = hyp::to_chart(y, hyp::Chart::disk);
    poly.vertices.reserve(2 * n);
    poly.vertices.push_back(poly.vertex);
    HPoint cur = poly.vertex;
    for (int k = 1; k < 2 * n; ++k) {
        cur = HIsometry::reflection(gamma_theta(k * theta))(cur);
        poly.vertices.push_back(cur);
    }
    // closing the orbit must return to y
    HPoint closed = HIsometry::reflection(gamma_theta(0.0))(cur);
    if (dist(closed, poly.vertex) > 1e-9)
        throw InvariantError("polygon_at: reflection orbit failed to close");

    poly.a = 2.0 * dist_to_geodesic(poly.vertex, gamma_theta(0.0));
    poly.b = 2.0 * dist_to_geodesic(poly.vertex, gamma_theta(theta));
    poly.alpha = vertex_angle(n, poly.vertex);
    return poly;
}

double regular_right_angle_edge_closed_form(int n) {
    return 2.0 * std::acosh(std::sqrt(2.0) * std::cos(M_PI / (2.0 * n)));
}

double regular_right_angle_edge(int n) {
    if (n < 3) throw BadOrder("regular right-angled 2n-gon requires n >= 3");
    double theta = M_PI / n;
    auto angle_of = [&](double l) { return vertex_angle(n, sector_ray_point(theta / 2, l)); };
    // alpha(l) decreases from pi - theta to 0; bracket the pi/2 crossing
    double lo = 1e-9, hi = 1.0 - 1e-12;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (angle_of(mid) > M_PI / 2)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-13) break;
    }
    double l = 0.5 * (lo + hi);
    HPoint y = sector_ray_point(theta / 2, l);
    return 2.0 * dist_to_geodesic(y, gamma_theta(0.0));
}

HPoint solve_right_angle_vertex(int n, double a, int* multiplicity) {
    if (n < 3) throw BadOrder("solve_right_angle_vertex requires n >= 3");
    double hn = regular_right_angle_edge(n);
    if (a < hn - 1e-12) throw TooShort("solve_right_angle_vertex: a < h_n");
    double theta = M_PI / n;

    auto y_of = [&](double u) { return sector_ray_point(u, radius_on_equidistant(u, a / 2)); };
    auto f = [&](double u) { return vertex_angle(n, y_of(u)) - M_PI / 2; };

    double u_lo = theta / 2;
    double f_lo = f(u_lo);
    if (std::abs(f_lo) < 1e-10) {
        if (multiplicity) *multiplicity = 1;
        return y_of(u_lo);
    }

    // scan toward gamma_theta for sign changes; keep the root nearest gamma_{theta/2}
    const int kScan = 128;
    double u_hi = theta * (1.0 - 1e-7);
    int changes = 0;
    double ra = u_lo, rb = u_hi;
    double prev_u = u_lo, prev_f = f_lo;
    bool found = false;
    for (int i = 1; i <= kScan; ++i) {
        double u = u_lo + (u_hi - u_lo) * i / kScan;
        double fu = f(u);
        if (prev_f * fu <= 0.0) {
            ++changes;
            if (!found) {
                ra = prev_u;
                rb = u;
                found = true;
            }
        }
        prev_u = u;
        prev_f = fu;
    }
    if (multiplicity) *multiplicity = changes;
    if (!found) throw NonConvergence("solve_right_angle_vertex: no sign change located");

    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (ra + rb);
        if (f(ra) * f(mid) <= 0.0)
            rb = mid;
        else
            ra = mid;
        if (rb - ra < 1e-14) break;
    }
    HPoint y = y_of(0.5 * (ra + rb));
    if (std::abs(vertex_angle(n, y) - M_PI / 2) > 1e-9)
        throw NonConvergence("solve_right_angle_vertex: angle residual above tolerance");
    return y;
}

std::string isometry_fingerprint(const HIsometry& iso) {
    auto quant = [](double x) { return (long long)std::llround(x / 1e-9); };
    Complex a = iso.apply(Complex(0, 0));
    Complex b = iso.apply(Complex(0.1, 0));
    Complex c = iso.apply(Complex(0, 0.1));
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%lld:%lld:%lld:%lld:%lld:%lld", quant(a.real()),
                 quant(a.imag()), quant(b.real()), quant(b.imag()), quant(c.real()),
                 quant(c.imag()));
    return std::string(buf);
}

Tiling generate_tiling(const RightAngledPolygon& fundamental, int depth) {
    if (std::abs(fundamental.alpha - M_PI / 2) > 1e-6)
        throw NotRightAngled("generate_tiling: fundamental piece is not right-angled");
    if (depth < 0) throw BadParameter("generate_tiling: negative depth");

    int m = fundamental.edge_count();
    std::vector<HIsometry> edge_refl;
    edge_refl.reserve(m);
    for (int i = 0; i < m; ++i)
        edge_refl.push_back(HIsometry::reflection(fundamental.edge_geodesic(i)));

    Tiling out;
    out.fundamental = fundamental;
    out.depth = depth;

    std::unordered_map<std::string, TileColor> seen;
    std::deque<Tile> queue;
    Tile root{HIsometry::identity(), TileColor::black, 0};
    seen.emplace(isometry_fingerprint(root.iso), root.color);
    out.tiles.push_back(root);
    queue.push_back(root);

    while (!queue.empty()) {
        Tile t = queue.front();
        queue.pop_front();
        if (t.word_length >= depth) continue;
        for (int i = 0; i < m; ++i) {
            Tile child;
            child.iso = t.iso.compose(edge_refl[i]);
            child.color = (t.color == TileColor::black) ? TileColor::white : TileColor::black;
            child.word_length = t.word_length + 1;
            std::string key = isometry_fingerprint(child.iso);
            auto it = seen.find(key);
            if (it != seen.end()) {
                if (it->second != child.color)
                    throw InvariantError("generate_tiling: inconsistent coloring parity");
                continue;
            }
            seen.emplace(std::move(key), child.color);
            out.tiles.push_back(child);
            queue.push_back(child);
        }
    }
    return out;
}

bool audit_colors(const Tiling& t) {
    // Tiles sharing an edge differ in color.  Two tiles are edge-adjacent iff
    // one is the other composed with an edge reflection.
    int m = t.fundamental.edge_count();
    std::vector<HIsometry> edge_refl;
    for (int i = 0; i < m; ++i)
        edge_refl.push_back(HIsometry::reflection(t.fundamental.edge_geodesic(i)));
    std::unordered_map<std::string, TileColor> colors;
    for (const auto& tile : t.tiles) colors.emplace(isometry_fingerprint(tile.iso), tile.color);
    for (const auto& tile : t.tiles) {
        for (int i = 0; i < m; ++i) {
            HIsometry nb = tile.iso.compose(edge_refl[i]);
            auto it = colors.find(isometry_fingerprint(nb));
            if (it != colors.end() && it->second == tile.color) return false;
        }
    }
    return true;
}

VertexLinkAudit audit_vertex_links(const Tiling& t) {
    VertexLinkAudit audit;
    int m = t.fundamental.edge_count();

    // key -> (tile count, black count, a representative (tile, vertex) pair)
    struct Entry {
        int count = 0;
        int black = 0;
        int tile = -1;
        int vtx = -1;
    };
    std::unordered_map<std::string, Entry> byvertex;
    auto quant = [](double x) { return (long long)std::llround(x / 1e-8); };
    for (size_t ti = 0; ti < t.tiles.size(); ++ti) {
        for (int vi = 0; vi < m; ++vi) {
            HPoint img = t.tiles[ti].iso(t.fundamental.vertices[vi]);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%lld:%lld", quant(img.u), quant(img.v));
            Entry& e = byvertex[std::string(buf)];
            e.count += 1;
            if (t.tiles[ti].color == TileColor::black) e.black += 1;
            e.tile = (int)ti;
            e.vtx = vi;
        }
    }
    for (const auto& [key, e] : byvertex) {
        if (e.count < 4) continue; // depth-boundary vertex, not interior
        ++audit.vertices_checked;
        audit.worst_tile_count = std::max(audit.worst_tile_count, e.count);
        if (e.count != 4) audit.four_tiles_everywhere = false;
        if (e.black != 2) audit.two_black_two_white = false;

        // Poincare closure: alternating product of the two edge reflections at
        // this vertex, squared, must be the identity.
        const Tile& tile = t.tiles[e.tile];
        HGeodesic g1 = tile.iso(t.fundamental.edge_geodesic((e.vtx + m - 1) % m));
        HGeodesic g2 = tile.iso(t.fundamental.edge_geodesic(e.vtx));
        HIsometry r1 = HIsometry::reflection(g1), r2 = HIsometry::reflection(g2);
        HIsometry rot = r1.compose(r2);
        HIsometry closure = rot.compose(rot);
        for (Complex probe : {Complex(0.1, 0.2), Complex(-0.3, 0.1), Complex(0.0, 0.0)}) {
            double err = std::abs(closure.apply(probe) - probe);
            audit.worst_closure_error = std::max(audit.worst_closure_error, err);
        }
    }
    return audit;
}

double tile_overlap_measure(const Tiling& t) {
    int m = t.fundamental.edge_count();
    // interior sample points of the fundamental tile, pulled toward the center
    std::vector<HPoint> samples;
    HPoint center = origin();
    samples.push_back(center);
    for (int vi = 0; vi < m; ++vi)
        samples.push_back(hyp::lerp(center, t.fundamental.vertices[vi], 0.8));

    std::vector<HGeodesic> base_edges;
    for (int i = 0; i < m; ++i) base_edges.push_back(t.fundamental.edge_geodesic(i));

    // cache each tile's transformed edges and the sign that marks its inside
    struct TileShape {
        std::vector<HGeodesic> edges;
        std::vector<double> side;
    };
    std::vector<TileShape> shapes(t.tiles.size());
    for (size_t b = 0; b < t.tiles.size(); ++b) {
        HPoint cb = t.tiles[b].iso(center);
        for (int i = 0; i < m; ++i) {
            HGeodesic g = t.tiles[b].iso(base_edges[i]);
            shapes[b].edges.push_back(g);
            shapes[b].side.push_back(fermi(g, cb).s > 0 ? 1.0 : -1.0);
        }
    }

    double worst = 0.0;
    for (size_t a = 0; a < t.tiles.size(); ++a) {
        for (const HPoint& s0 : samples) {
            HPoint p = t.tiles[a].iso(s0);
            for (size_t b = 0; b < t.tiles.size(); ++b) {
                if (a == b) continue;
                double depth = 1e30; // penetration of p into tile b
                for (int i = 0; i < m; ++i) {
                    double s = fermi(shapes[b].edges[i], p).s * shapes[b].side[i];
                    depth = std::min(depth, s);
                    if (s <= 0) break;
                }
                if (depth > 0) worst = std::max(worst, depth);
            }
        }
    }
    return worst;
}

} // namespace perimin::tiling
