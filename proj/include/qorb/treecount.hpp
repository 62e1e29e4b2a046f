#pragma once

#include "qorb/halfint.hpp"
#include "qorb/qrat.hpp"
#include "qorb/tree.hpp"

namespace qorb {

// Closed-form vertex counts on the (q+1)-regular tree, as rational functions
// of q. Each of these has a BFS oracle twin; the test suite checks them
// against oracle_count for q in {2,3} over every parameter tuple of small
// reach, with exact integer equality.

struct BallSpec {
    enum class Center { Vertex, Midpoint };
    Center center = Center::Vertex;
    // Integer radius for vertex centers. For midpoint centers the radius is a
    // strict half-integer: vertices sit at half-integer distances from a
    // midpoint, so radius r covers reach r + 1/2 levels.
    HalfInt radius;

    static BallSpec vertex(long r) { return {Center::Vertex, HalfInt::whole(r)}; }
    static BallSpec midpoint(HalfInt r) { return {Center::Midpoint, r}; }
};

// |B_i(v)| = 1 + (q+1)(q^i-1)/(q-1) around a vertex;
// 2(q^i-1)/(q-1) around a midpoint, where i counts distance levels.
QRat ball_count(const BallSpec& spec);

// Midpoint ball by level count i (distances 1/2, 3/2, ..., i-1/2).
QRat midpoint_ball_count_by_reach(long i);

// Vertices w in B_i(v) with d(w,A) = d(w,v) for a vertex v on apartment A.
QRat ball_out_of_apartment(long i);

// Vertices at distance exactly n > 0 from a convex set with V vertices.
QRat sphere_from_convex(long n, long V);

// Black / white vertices at distance exactly n > 0 from a convex set with
// the given colored vertex counts.
QRat colored_sphere_from_convex(long n, const QRat& v_black, const QRat& v_white,
                                Color want);
QRat colored_sphere_from_convex(long n, long v_black, long v_white, Color want);

enum class BallIntersectionRegime { Empty, InterpolatedBall, Containment };

struct BallIntersection {
    BallIntersectionRegime regime;
    QRat count;
    // For the interpolated regime: radius of the intersection ball and its
    // center kind (integer radius = vertex, half-integer = midpoint).
    HalfInt ball_radius;
};

// Intersection of B_alpha(x) and B_beta(y) at distance delta. Center kinds
// are encoded by radius parity: integer radius means a vertex center,
// half-integer means a midpoint center, and delta carries the matching
// parity for the distance between the two centers.
BallIntersection ball_ball_intersection(HalfInt alpha, HalfInt beta, HalfInt delta);

// |T_alpha(A) ∩ B_beta(v)| for a point v at distance delta from apartment A.
// beta and delta are integers for a vertex center and half-integers for a
// midpoint center (delta = 0 puts the midpoint on an edge of A).
QRat tube_ball_count(long alpha, HalfInt beta, HalfInt delta,
                     BallSpec::Center center_kind);

// |T_alpha(A) ∩ T_beta(B)| for two geodesics at distance delta (r = 0), or
// sharing exactly r >= 1 vertices (delta = 0). Throws for the infinite
// configuration request (delta = 0, r = 0 would mean equal or ray-sharing
// geodesics).
QRat tube_tube_count(long alpha, long beta, long delta, long r);

// chi_d(x): vertices at distance d from apartment vertex x whose closest
// apartment vertex is x, optionally filtered by color. base is the color
// of x itself.
QRat chi(long d, Color base, ColorFilter filter);

}  // namespace qorb
