#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perimin/hyperbolic.hpp"

// Right-angled geodesic polygons and the colorable reflection tilings they
// generate.  The fundamental piece is the orbit polygon P_y of a vertex y in
// the sector T_theta (theta = pi/n) under the reflections across the rays
// gamma_{k theta}; its edge lengths alternate between a_y = 2 dist(y, gamma_0)
// and b_y = 2 dist(y, gamma_theta).

namespace perimin::tiling {

using hyp::HGeodesic;
using hyp::HIsometry;
using hyp::HPoint;

struct RightAngledPolygon {
    int n = 0;                    // half the number of edges
    HPoint vertex;                // the generating vertex y
    std::vector<HPoint> vertices; // 2n vertices, reflection orbit order
    double a = 0.0;               // edge length 2 dist(y, gamma_0)
    double b = 0.0;               // edge length 2 dist(y, gamma_theta)
    double alpha = 0.0;           // interior angle (equal at every vertex)

    // Edge i joins vertices[i] and vertices[(i+1) % 2n].
    HGeodesic edge_geodesic(int i) const;
    int edge_count() const { return 2 * n; }
    double edge_length(int i) const;
};

enum class TileColor : std::uint8_t { black, white };

struct Tile {
    HIsometry iso;   // maps the fundamental polygon onto this tile
    TileColor color; // parity of the reflection word
    int word_length = 0;
};

struct Tiling {
    RightAngledPolygon fundamental;
    std::vector<Tile> tiles;
    int depth = 0;
};

// Edge length h_n of the regular right-angled 2n-gon, solved by bisection on
// the monotone vertex-angle map along gamma_{theta/2}.  Requires n >= 3.
double regular_right_angle_edge(int n);

// Closed form companion: cosh(h_n / 2) = sqrt(2) cos(pi / (2n)).
double regular_right_angle_edge_closed_form(int n);

// Interior angle alpha_y of P_y for y in the open sector T_theta.
double vertex_angle(int n, const HPoint& y);

// The orbit polygon P_y.
RightAngledPolygon polygon_at(int n, const HPoint& y);

// The Claim of the tiling appendix: for a >= h_n there is y on the
// equidistant d(a/2), between gamma_{theta/2} and gamma_theta, with a_y = a
// and alpha_y = pi/2.  Root nearest gamma_{theta/2} is returned; the number
// of bracketed sign changes found in the scan is reported via multiplicity.
HPoint solve_right_angle_vertex(int n, double a, int* multiplicity = nullptr);

// Breadth-first reflection orbit of the fundamental polygon up to the given
// combinatorial depth (reflection word length).  Requires alpha_y ~ pi/2.
Tiling generate_tiling(const RightAngledPolygon& fundamental, int depth);

// Fingerprint-based deduplication key of an isometry: images of 0 and of a
// tangent probe, quantized.  Exposed for tests.
std::string isometry_fingerprint(const HIsometry& iso);

struct VertexLinkAudit {
    int vertices_checked = 0;
    int worst_tile_count = 4;
    bool four_tiles_everywhere = true;
    bool two_black_two_white = true;
    double worst_closure_error = 0.0; // composite of the four reflections vs identity
};

// Audits of the Appendix invariants on a generated tiling; interior vertices
// are those whose four surrounding tiles are all present at this depth.
VertexLinkAudit audit_vertex_links(const Tiling& t);
bool audit_colors(const Tiling& t);            // adjacent tiles differ in color
double tile_overlap_measure(const Tiling& t);  // sampled interior disjointness
} // namespace perimin::tiling
