#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qorb/halfint.hpp"

namespace qorb {

enum class Color { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

enum class ColorFilter { Any, Black, White };

// Layout of the core structure a truncated tree is grown around. Geodesic A
// always exists for layouts that carry one; geodesic B only for the
// two-geodesic layouts. Coordinates along each geodesic are integers, with
// vertex colors alternating (coordinate 0 is black).
struct Layout {
    enum class Kind {
        SingleVertex,        // one marked vertex
        SingleEdge,          // one marked edge (midpoint center)
        SingleGeodesic,      // geodesic A only
        GeodesicWithCenter,  // geodesic A plus a center at distance delta from it
        TwoGeodesicsBridge,  // A and B joined by a path of length delta >= 1
        TwoGeodesicsOverlap  // A and B sharing exactly overlap_r >= 1 vertices
    };
    Kind kind = Kind::SingleVertex;
    HalfInt delta;             // GeodesicWithCenter / TwoGeodesicsBridge
    int overlap_r = 0;         // TwoGeodesicsOverlap
    bool midpoint_center = false;  // center is an edge midpoint rather than a vertex

    static Layout vertex() { return {Kind::SingleVertex, HalfInt(), 0, false}; }
    static Layout edge() { return {Kind::SingleEdge, HalfInt(), 0, true}; }
    static Layout geodesic() { return {Kind::SingleGeodesic, HalfInt(), 0, false}; }
    static Layout geodesic_with_center(HalfInt delta, bool midpoint) {
        return {Kind::GeodesicWithCenter, delta, 0, midpoint};
    }
    static Layout two_geodesics(HalfInt delta) {
        return {Kind::TwoGeodesicsBridge, delta, 0, false};
    }
    static Layout overlapping_geodesics(int r) {
        return {Kind::TwoGeodesicsOverlap, HalfInt(), r, false};
    }
};

// Finite truncation of the (q+1)-regular 2-colored tree with the requested
// core embedded exactly. Immutable after construction; queries are read-only.
class TruncatedTree {
public:
    // depth:   every vertex within core distance < depth has full degree q+1
    // halflen: geodesics extend to coordinates [-halflen, +halflen]
    TruncatedTree(int q, int depth, int halflen, const Layout& layout);

    int q() const { return q_; }
    int depth() const { return depth_; }
    int halflen() const { return halflen_; }
    const Layout& layout() const { return layout_; }
    int vertex_count() const { return static_cast<int>(adj_.size()); }

    Color color(int v) const { return color_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int core_dist(int v) const { return core_dist_[v]; }

    bool has_geodesic(int id) const { return id == 0 || (id == 1 && !geoB_.empty()); }
    // Vertex at the given coordinate on geodesic 0 (A) or 1 (B).
    int geodesic_vertex(int id, int coord) const;

    // Center of the layout: a vertex, or an edge when midpoint_center.
    int center_vertex() const;                 // vertex centers only
    std::pair<int, int> center_edge() const;   // midpoint centers only
    bool center_is_midpoint() const { return layout_.midpoint_center; }

    // BFS distances from a vertex set; unreachable stays -1 (cannot happen
    // inside a connected truncation).
    std::vector<int> distances_from(const std::vector<int>& sources) const;

    // Distance to geodesic id, and the coordinate of the (unique) closest
    // geodesic vertex, for every vertex.
    const std::vector<int>& dist_to_geodesic(int id) const;
    const std::vector<int>& closest_coord(int id) const;

    // Distance from a vertex to the layout center, as a half-integer when
    // the center is a midpoint.
    HalfInt dist_to_center(int v) const;

private:
    int add_vertex(Color c);
    void link(int u, int v);
    void grow();
    void finalize();

    int q_, depth_, halflen_;
    Layout layout_;
    std::vector<std::vector<int>> adj_;
    std::vector<Color> color_;
    std::vector<int> core_dist_;
    std::vector<int> geoA_, geoB_;  // vertex ids indexed by coord + halflen
    int center_v_ = -1, center_u_ = -1;
    std::vector<int> distA_, coordA_, distB_, coordB_, dist_center_;
};

// Query shapes for the oracle. Composable; a query is only countable when
// its member set is finite within the truncation (balls, intersections
// involving a ball or two tubes, spheres around those).
struct OracleQuery {
    enum class Kind {
        Ball,       // center (layout center or geodesic-A coordinate), radius
        Tube,       // all vertices within tube_radius of a geodesic
        Intersect,  // conjunction of two shapes
        SphereAt,   // vertices at distance exactly sphere_n from the base set
        ClosestApartmentAt  // closest geodesic-A vertex has the given coordinate
    };

    Kind kind = Kind::Ball;
    ColorFilter filter = ColorFilter::Any;

    // Ball anchor: the layout center, a geodesic-A vertex, or the midpoint
    // of the A-edge (ball_coord, ball_coord+1).
    enum class Anchor { LayoutCenter, ApartmentVertex, ApartmentEdge };
    Anchor anchor = Anchor::LayoutCenter;
    int ball_coord = 0;
    HalfInt radius;

    // Tube
    int geodesic_id = 0;
    int tube_radius = 0;

    // Intersect / SphereAt
    std::shared_ptr<OracleQuery> a, b;
    int sphere_n = 0;

    // ClosestApartmentAt
    int apartment_coord = 0;

    static OracleQuery ball(HalfInt radius);
    static OracleQuery ball_at(int coord, HalfInt radius);
    static OracleQuery ball_at_edge(int coord, HalfInt radius);
    static OracleQuery tube(int geodesic_id, int radius);
    static OracleQuery intersect(OracleQuery x, OracleQuery y);
    static OracleQuery sphere_at(int n, OracleQuery base);
    static OracleQuery closest_apartment_at(int coord);
    OracleQuery colored(ColorFilter f) const;
};

// Reach of a query: the largest core distance (radial) and geodesic
// coordinate (axial) that any member, or any vertex whose presence affects
// membership, can have in the infinite tree. Used to size truncations.
struct Reach {
    int radial = 0;
    int axial = 0;
    bool finite = true;  // false for bare tubes and other unbounded sets
};

Reach query_reach(const OracleQuery& query);

// True iff the truncation is provably large enough that the count below
// equals the count on the infinite tree.
bool boundary_guard(const TruncatedTree& tree, const OracleQuery& query);

// Exact cardinality of the query set. Throws std::domain_error when the
// query is not boundary-safe or not finite.
long oracle_count(const TruncatedTree& tree, const OracleQuery& query);

// Convenience: build the minimal safe tree for the query and count.
long oracle_count_auto(int q, const Layout& layout, const OracleQuery& query);

}  // namespace qorb
