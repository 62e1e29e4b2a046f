#include "qorb/tree.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qorb {

int TruncatedTree::add_vertex(Color c) {
    adj_.emplace_back();
    color_.push_back(c);
    core_dist_.push_back(0);
    return static_cast<int>(adj_.size()) - 1;
}

void TruncatedTree::link(int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

TruncatedTree::TruncatedTree(int q, int depth, int halflen, const Layout& layout)
    : q_(q), depth_(depth), halflen_(halflen), layout_(layout) {
    if (q < 2) throw std::invalid_argument("tree requires q >= 2");
    if (depth < 1) throw std::invalid_argument("tree requires depth >= 1");

    auto make_path = [&](int len, Color start) {
        std::vector<int> path;
        Color c = start;
        for (int i = 0; i <= len; ++i) {
            path.push_back(add_vertex(c));
            if (i > 0) link(path[i - 1], path[i]);
            c = opposite(c);
        }
        return path;
    };
    // Geodesic with coordinate 0 colored black; index i holds coord i-halflen.
    auto make_geodesic = [&]() {
        Color left_end = (halflen % 2 == 0) ? Color::Black : Color::White;
        return make_path(2 * halflen, left_end);
    };

    switch (layout.kind) {
        case Layout::Kind::SingleVertex:
            center_v_ = add_vertex(Color::Black);
            break;
        case Layout::Kind::SingleEdge: {
            auto p = make_path(1, Color::Black);
            center_v_ = p[0];
            center_u_ = p[1];
            break;
        }
        case Layout::Kind::SingleGeodesic:
            geoA_ = make_geodesic();
            break;
        case Layout::Kind::GeodesicWithCenter: {
            geoA_ = make_geodesic();
            int anchor = geodesic_vertex(0, 0);
            if (!layout.midpoint_center) {
                if (!layout.delta.is_integer())
                    throw std::invalid_argument("vertex center needs integer delta");
                long d = layout.delta.as_integer();
                if (d == 0) {
                    center_v_ = anchor;
                } else {
                    auto branch = make_path(static_cast<int>(d) - 1,
                                            opposite(color_[anchor]));
                    link(anchor, branch.front());
                    center_v_ = branch.back();
                }
            } else {
                // Midpoint of an edge at half-integer distance delta from A;
                // delta = 0 means the midpoint of the A-edge (0,1).
                if (layout.delta.twice() == 0) {
                    center_v_ = geodesic_vertex(0, 0);
                    center_u_ = geodesic_vertex(0, 1);
                } else {
                    if (layout.delta.is_integer())
                        throw std::invalid_argument(
                            "off-geodesic midpoint center needs half-integer delta");
                    // Edge endpoints at distances m and m+1 from A, midpoint
                    // at m + 1/2 = delta.
                    long m = (layout.delta - HalfInt::halves(1)).as_integer();
                    auto branch = make_path(static_cast<int>(m), opposite(color_[anchor]));
                    link(anchor, branch.front());
                    center_u_ = branch.back();                       // distance m+1
                    center_v_ = m == 0 ? anchor : branch[m - 1];     // distance m
                }
            }
            break;
        }
        case Layout::Kind::TwoGeodesicsBridge: {
            if (!layout.delta.is_integer() || layout.delta.as_integer() < 1)
                throw std::invalid_argument("bridge layout needs integer delta >= 1");
            geoA_ = make_geodesic();
            long d = layout.delta.as_integer();
            int anchorA = geodesic_vertex(0, 0);
            // Bridge of length delta, then geodesic B through its far end.
            int prev = anchorA;
            Color c = opposite(color_[anchorA]);
            for (long i = 1; i <= d; ++i) {
                int v = add_vertex(c);
                link(prev, v);
                prev = v;
                c = opposite(c);
            }
            int anchorB = prev;
            // B: two arms out of anchorB, avoiding the bridge edge.
            geoB_.assign(2 * halflen + 1, -1);
            geoB_[halflen] = anchorB;
            for (int dir : {-1, +1}) {
                int at = anchorB;
                Color cc = opposite(color_[anchorB]);
                for (int i = 1; i <= halflen; ++i) {
                    int v = add_vertex(cc);
                    link(at, v);
                    geoB_[halflen + dir * i] = v;
                    at = v;
                    cc = opposite(cc);
                }
            }
            break;
        }
        case Layout::Kind::TwoGeodesicsOverlap: {
            int r = layout.overlap_r;
            if (r < 1) throw std::invalid_argument("overlap layout needs r >= 1");
            if (r > halflen) throw std::invalid_argument("overlap exceeds geodesic length");
            geoA_ = make_geodesic();
            // B shares A's vertices at coordinates 0..r-1, then diverges with
            // fresh arms at both ends.
            geoB_.assign(2 * halflen + 1, -1);
            for (int i = 0; i < r; ++i) geoB_[halflen + i] = geodesic_vertex(0, i);
            int left_end = geodesic_vertex(0, 0);
            int at = left_end;
            Color c = opposite(color_[left_end]);
            for (int i = 1; i <= halflen; ++i) {
                int v = add_vertex(c);
                link(at, v);
                geoB_[halflen - i] = v;
                at = v;
                c = opposite(c);
            }
            int right_end = geodesic_vertex(0, r - 1);
            at = right_end;
            c = opposite(color_[right_end]);
            for (int i = r; i <= halflen; ++i) {
                int v = add_vertex(c);
                link(at, v);
                geoB_[halflen + i] = v;
                at = v;
                c = opposite(c);
            }
            break;
        }
    }

    grow();
    finalize();
}

void TruncatedTree::grow() {
    // The layout must fit inside a (q+1)-regular tree; a crossing that needs
    // more edges than the degree allows (two geodesics meeting at a single
    // vertex in the 3-regular tree, say) is not a valid configuration.
    for (int v = 0; v < vertex_count(); ++v)
        if (degree(v) > q_ + 1)
            throw std::invalid_argument("layout does not embed in the (q+1)-regular tree");
    // Core vertices have core_dist 0; everything else is appended in BFS
    // order, so a single pass suffices to pad degrees up to q+1.
    std::deque<int> frontier;
    for (int v = 0; v < vertex_count(); ++v) {
        core_dist_[v] = 0;
        frontier.push_back(v);
    }
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop_front();
        if (core_dist_[v] >= depth_) continue;
        while (degree(v) < q_ + 1) {
            int w = add_vertex(opposite(color_[v]));
            core_dist_[w] = core_dist_[v] + 1;
            link(v, w);
            frontier.push_back(w);
        }
    }
}

void TruncatedTree::finalize() {
    auto seed_geo = [&](const std::vector<int>& geo, std::vector<int>& dist,
                        std::vector<int>& coord) {
        dist.assign(vertex_count(), -1);
        coord.assign(vertex_count(), 0);
        std::deque<int> bfs;
        for (size_t i = 0; i < geo.size(); ++i) {
            dist[geo[i]] = 0;
            coord[geo[i]] = static_cast<int>(i) - halflen_;
            bfs.push_back(geo[i]);
        }
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            for (int w : adj_[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    coord[w] = coord[v];
                    bfs.push_back(w);
                }
        }
    };
    if (!geoA_.empty()) seed_geo(geoA_, distA_, coordA_);
    if (!geoB_.empty()) seed_geo(geoB_, distB_, coordB_);
    if (center_v_ >= 0) {
        std::vector<int> sources = {center_v_};
        if (center_u_ >= 0) sources.push_back(center_u_);
        dist_center_ = distances_from(sources);
    }
}

int TruncatedTree::geodesic_vertex(int id, int coord) const {
    const auto& geo = id == 0 ? geoA_ : geoB_;
    if (geo.empty()) throw std::out_of_range("layout has no such geodesic");
    int idx = coord + halflen_;
    if (idx < 0 || idx >= static_cast<int>(geo.size()))
        throw std::out_of_range("geodesic coordinate outside truncation");
    return geo[idx];
}

int TruncatedTree::center_vertex() const {
    if (center_v_ < 0 || layout_.midpoint_center)
        throw std::logic_error("layout has no vertex center");
    return center_v_;
}

std::pair<int, int> TruncatedTree::center_edge() const {
    if (!layout_.midpoint_center) throw std::logic_error("layout has no midpoint center");
    return {center_v_, center_u_};
}

std::vector<int> TruncatedTree::distances_from(const std::vector<int>& sources) const {
    std::vector<int> dist(vertex_count(), -1);
    std::deque<int> bfs;
    for (int s : sources) {
        dist[s] = 0;
        bfs.push_back(s);
    }
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int w : adj_[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                bfs.push_back(w);
            }
    }
    return dist;
}

const std::vector<int>& TruncatedTree::dist_to_geodesic(int id) const {
    const auto& d = id == 0 ? distA_ : distB_;
    if (d.empty()) throw std::out_of_range("layout has no such geodesic");
    return d;
}

const std::vector<int>& TruncatedTree::closest_coord(int id) const {
    const auto& c = id == 0 ? coordA_ : coordB_;
    if (c.empty()) throw std::out_of_range("layout has no such geodesic");
    return c;
}

HalfInt TruncatedTree::dist_to_center(int v) const {
    if (dist_center_.empty()) throw std::logic_error("layout has no center");
    if (layout_.midpoint_center)
        return HalfInt::halves(2 * dist_center_[v] + 1);
    return HalfInt::whole(dist_center_[v]);
}

OracleQuery OracleQuery::ball(HalfInt radius) {
    OracleQuery s;
    s.kind = Kind::Ball;
    s.anchor = Anchor::LayoutCenter;
    s.radius = radius;
    return s;
}

OracleQuery OracleQuery::ball_at(int coord, HalfInt radius) {
    OracleQuery s;
    s.kind = Kind::Ball;
    s.anchor = Anchor::ApartmentVertex;
    s.ball_coord = coord;
    s.radius = radius;
    return s;
}

OracleQuery OracleQuery::ball_at_edge(int coord, HalfInt radius) {
    OracleQuery s;
    s.kind = Kind::Ball;
    s.anchor = Anchor::ApartmentEdge;
    s.ball_coord = coord;
    s.radius = radius;
    return s;
}

OracleQuery OracleQuery::tube(int geodesic_id, int radius) {
    OracleQuery s;
    s.kind = Kind::Tube;
    s.geodesic_id = geodesic_id;
    s.tube_radius = radius;
    return s;
}

OracleQuery OracleQuery::intersect(OracleQuery x, OracleQuery y) {
    OracleQuery s;
    s.kind = Kind::Intersect;
    s.a = std::make_shared<OracleQuery>(std::move(x));
    s.b = std::make_shared<OracleQuery>(std::move(y));
    return s;
}

OracleQuery OracleQuery::sphere_at(int n, OracleQuery base) {
    OracleQuery s;
    s.kind = Kind::SphereAt;
    s.sphere_n = n;
    s.a = std::make_shared<OracleQuery>(std::move(base));
    return s;
}

OracleQuery OracleQuery::closest_apartment_at(int coord) {
    OracleQuery s;
    s.kind = Kind::ClosestApartmentAt;
    s.apartment_coord = coord;
    return s;
}

OracleQuery OracleQuery::colored(ColorFilter f) const {
    OracleQuery s = *this;
    s.filter = f;
    return s;
}

namespace {

// Membership of each vertex in the query set, ignoring the color filter of
// inner shapes (filters apply where the caller asks, on the outer query).
std::vector<char> members(const TruncatedTree& tree, const OracleQuery& query) {
    int n = tree.vertex_count();
    std::vector<char> in(n, 0);
    switch (query.kind) {
        case OracleQuery::Kind::Ball: {
            switch (query.anchor) {
                case OracleQuery::Anchor::LayoutCenter:
                    for (int v = 0; v < n; ++v)
                        in[v] = tree.dist_to_center(v) <= query.radius;
                    break;
                case OracleQuery::Anchor::ApartmentVertex: {
                    int c = tree.geodesic_vertex(0, query.ball_coord);
                    auto dist = tree.distances_from({c});
                    for (int v = 0; v < n; ++v)
                        in[v] = HalfInt::whole(dist[v]) <= query.radius;
                    break;
                }
                case OracleQuery::Anchor::ApartmentEdge: {
                    int c0 = tree.geodesic_vertex(0, query.ball_coord);
                    int c1 = tree.geodesic_vertex(0, query.ball_coord + 1);
                    auto dist = tree.distances_from({c0, c1});
                    for (int v = 0; v < n; ++v)
                        in[v] = HalfInt::halves(2 * dist[v] + 1) <= query.radius;
                    break;
                }
            }
            break;
        }
        case OracleQuery::Kind::Tube: {
            const auto& d = tree.dist_to_geodesic(query.geodesic_id);
            for (int v = 0; v < n; ++v) in[v] = d[v] <= query.tube_radius;
            break;
        }
        case OracleQuery::Kind::Intersect: {
            auto ma = members(tree, *query.a);
            auto mb = members(tree, *query.b);
            for (int v = 0; v < n; ++v) in[v] = ma[v] && mb[v];
            break;
        }
        case OracleQuery::Kind::SphereAt: {
            auto base = members(tree, *query.a);
            std::vector<int> sources;
            for (int v = 0; v < n; ++v)
                if (base[v]) sources.push_back(v);
            if (sources.empty()) break;
            auto dist = tree.distances_from(sources);
            for (int v = 0; v < n; ++v) in[v] = dist[v] == query.sphere_n;
            break;
        }
        case OracleQuery::Kind::ClosestApartmentAt: {
            const auto& coord = tree.closest_coord(0);
            for (int v = 0; v < n; ++v) in[v] = coord[v] == query.apartment_coord;
            break;
        }
    }
    return in;
}

Reach layout_reach(const OracleQuery& query) {
    Reach r;
    switch (query.kind) {
        case OracleQuery::Kind::Ball: {
            long rad = query.radius.ceil();
            // Centers live inside the core (the builder embeds them), so
            // their members stay within the radius of the core.
            r.radial = static_cast<int>(rad);
            long coord_span = std::abs(query.ball_coord);
            if (query.anchor == OracleQuery::Anchor::ApartmentEdge)
                coord_span = std::max(coord_span, std::abs(query.ball_coord + 1L));
            r.axial = static_cast<int>(coord_span + rad);
            break;
        }
        case OracleQuery::Kind::Tube:
            r.radial = query.tube_radius;
            r.axial = 0;
            r.finite = false;  // unbounded along the geodesic
            break;
        case OracleQuery::Kind::Intersect: {
            Reach ra = layout_reach(*query.a), rb = layout_reach(*query.b);
            if (ra.finite && rb.finite) {
                r.radial = std::min(ra.radial, rb.radial);
                r.axial = std::min(ra.axial, rb.axial);
            } else if (ra.finite) {
                r = ra;
            } else if (rb.finite) {
                r = rb;
            } else if (query.a->kind == OracleQuery::Kind::Tube &&
                       query.b->kind == OracleQuery::Kind::Tube &&
                       query.a->geodesic_id != query.b->geodesic_id) {
                // Tube-tube: members sit within min radius of the core, and
                // along the geodesics they end within alpha+beta of the
                // junction; the junction extent is covered by the +axial slack
                // added in oracle_count_auto.
                r.radial = std::min(query.a->tube_radius, query.b->tube_radius);
                r.axial = query.a->tube_radius + query.b->tube_radius;
                r.finite = true;
            } else {
                r.finite = false;
            }
            break;
        }
        case OracleQuery::Kind::SphereAt: {
            Reach rb = layout_reach(*query.a);
            r.radial = rb.radial + query.sphere_n;
            r.axial = rb.axial + query.sphere_n;
            r.finite = rb.finite;
            break;
        }
        case OracleQuery::Kind::ClosestApartmentAt:
            r.radial = 0;
            r.axial = std::abs(query.apartment_coord);
            r.finite = false;  // unbounded away from the apartment
            break;
    }
    return r;
}

}  // namespace

Reach query_reach(const OracleQuery& query) { return layout_reach(query); }

bool boundary_guard(const TruncatedTree& tree, const OracleQuery& query) {
    Reach r = query_reach(query);
    if (!r.finite) return false;
    // The layout core may extend away from geodesics (bridges, hung centers);
    // its own extent is part of the build, so radial reach measured from the
    // core is the right bound.
    return r.radial < tree.depth() && r.axial < tree.halflen();
}

long oracle_count(const TruncatedTree& tree, const OracleQuery& query) {
    if (!boundary_guard(tree, query))
        throw std::domain_error("query is not boundary-safe on this truncation");
    auto in = members(tree, query);
    long count = 0;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (!in[v]) continue;
        if (query.filter == ColorFilter::Black && tree.color(v) != Color::Black) continue;
        if (query.filter == ColorFilter::White && tree.color(v) != Color::White) continue;
        ++count;
    }
    return count;
}

long oracle_count_auto(int q, const Layout& layout, const OracleQuery& query) {
    Reach r = query_reach(query);
    if (!r.finite) throw std::domain_error("query set is not finite");
    long extent = 0;  // widest stretch of the core along the geodesics
    if (layout.kind == Layout::Kind::TwoGeodesicsBridge) extent = layout.delta.ceil();
    if (layout.kind == Layout::Kind::TwoGeodesicsOverlap) extent = layout.overlap_r;
    if (layout.kind == Layout::Kind::GeodesicWithCenter) extent = layout.delta.ceil();
    int depth = r.radial + 1 + static_cast<int>(extent);
    int halflen = r.axial + 2 + static_cast<int>(extent);
    TruncatedTree tree(q, depth, halflen, layout);
    return oracle_count(tree, query);
}

}  // namespace qorb
