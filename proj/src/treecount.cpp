#include "qorb/treecount.hpp"

#include <stdexcept>

namespace qorb {

namespace {
QRat q_pow(long e) { return QRat::q_pow(e); }
const QRat kOne(1);

// (q^i - 1)/(q - 1), the geometric sum 1 + q + ... + q^{i-1}.
QRat geom(long i) {
    if (i < 0) throw std::invalid_argument("negative geometric length");
    return (q_pow(i) - kOne) / (QRat::q() - kOne);
}
}  // namespace

QRat ball_count(const BallSpec& spec) {
    if (spec.radius < HalfInt::whole(0)) throw std::invalid_argument("negative ball radius");
    if (spec.center == BallSpec::Center::Vertex) {
        if (!spec.radius.is_integer())
            throw std::invalid_argument("vertex-centered ball needs integer radius");
        return kOne + (QRat::q() + kOne) * geom(spec.radius.as_integer());
    }
    if (spec.radius.is_integer())
        throw std::invalid_argument("midpoint-centered ball needs half-integer radius");
    return midpoint_ball_count_by_reach((spec.radius + HalfInt::halves(1)).as_integer());
}

QRat midpoint_ball_count_by_reach(long i) {
    if (i < 0) throw std::invalid_argument("negative reach");
    return QRat(2) * geom(i);
}

QRat ball_out_of_apartment(long i) {
    if (i < 0) throw std::invalid_argument("negative radius");
    return q_pow(i);
}

QRat sphere_from_convex(long n, long V) {
    if (n < 1) throw std::invalid_argument("sphere_from_convex needs n >= 1");
    if (V < 1) throw std::invalid_argument("sphere_from_convex needs V >= 1");
    return q_pow(n - 1) * ((QRat::q() - kOne) * QRat(V) + QRat(2));
}

QRat colored_sphere_from_convex(long n, const QRat& v_black, const QRat& v_white,
                                Color want) {
    if (n < 1) throw std::invalid_argument("colored sphere needs n >= 1");
    // At even distance the counts follow the same color; at odd distance the
    // roles of the two colors swap.
    bool same = (n % 2 == 0);
    const QRat& lead = (want == Color::Black) == same ? v_black : v_white;
    const QRat& other = (want == Color::Black) == same ? v_white : v_black;
    return q_pow(n - 1) * (QRat::q() * lead - other + kOne);
}

QRat colored_sphere_from_convex(long n, long v_black, long v_white, Color want) {
    return colored_sphere_from_convex(n, QRat(v_black), QRat(v_white), want);
}

BallIntersection ball_ball_intersection(HalfInt alpha, HalfInt beta, HalfInt delta) {
    if (alpha < HalfInt::whole(0) || beta < HalfInt::whole(0) || delta < HalfInt::whole(0))
        throw std::invalid_argument("ball intersection needs nonnegative parameters");
    BallIntersection out;
    if (alpha + beta < delta) {
        out.regime = BallIntersectionRegime::Empty;
        out.count = QRat(0);
        out.ball_radius = HalfInt::whole(0);
        return out;
    }
    if (delta < (alpha - beta).abs()) {
        out.regime = BallIntersectionRegime::Containment;
        HalfInt small = std::min(alpha, beta);
        out.ball_radius = small;
        out.count = small.is_integer()
                        ? ball_count(BallSpec::vertex(small.as_integer()))
                        : ball_count(BallSpec::midpoint(small));
        return out;
    }
    // |alpha-beta| <= delta <= alpha+beta, boundaries included: an
    // interpolated ball of radius (alpha+beta-delta)/2, center kind read off
    // the parity of the radius. Both boundary ties agree with the adjacent
    // branch, which the tests assert.
    out.regime = BallIntersectionRegime::InterpolatedBall;
    long twice_r = (alpha + beta - delta).twice();
    if (twice_r % 2 == 0) {
        long r2 = twice_r / 2;  // twice the radius
        out.ball_radius = HalfInt::halves(r2);
        out.count = out.ball_radius.is_integer()
                        ? ball_count(BallSpec::vertex(out.ball_radius.as_integer()))
                        : ball_count(BallSpec::midpoint(out.ball_radius));
    } else {
        // alpha+beta-delta is itself a half-integer: the two center kinds
        // disagree in a way that cannot produce a ball; rejected rather than
        // guessed.
        throw std::invalid_argument("ball intersection with incompatible parities");
    }
    return out;
}

QRat tube_ball_count(long alpha, HalfInt beta, HalfInt delta,
                     BallSpec::Center center_kind) {
    if (alpha < 0 || beta < HalfInt::whole(0) || delta < HalfInt::whole(0))
        throw std::invalid_argument("tube-ball intersection needs nonnegative parameters");
    if (center_kind == BallSpec::Center::Vertex) {
        if (!beta.is_integer() || !delta.is_integer())
            throw std::invalid_argument("vertex center needs integer beta and delta");
    } else {
        if (beta.is_integer())
            throw std::invalid_argument("midpoint center needs half-integer beta");
        // delta is a half-integer off the apartment; delta = 0 is the
        // on-apartment midpoint, covered by the same closed form.
        if (delta.is_integer() && delta.twice() != 0)
            throw std::invalid_argument("midpoint center needs half-integer delta");
    }
    HalfInt a = HalfInt::whole(alpha);
    if (a + beta < delta) return QRat(0);
    if (beta - a <= delta)
        return ball_ball_intersection(a, beta, delta).count;
    // delta < beta - alpha: a run of full-depth balls along the apartment.
    long excess2 = (beta - a - delta).twice();  // 2(beta - alpha - delta), integral
    return QRat(1 + excess2) * q_pow(alpha) +
           QRat(2) * (q_pow(alpha) - kOne) / (QRat::q() - kOne);
}

QRat tube_tube_count(long alpha, long beta, long delta, long r) {
    if (alpha < 0 || beta < 0 || delta < 0 || r < 0)
        throw std::invalid_argument("tube-tube intersection needs nonnegative parameters");
    if (delta == 0 && r == 0)
        throw std::domain_error("geodesics sharing a ray: intersection is infinite");
    if (delta > 0 && r > 0)
        throw std::invalid_argument("disjoint geodesics cannot overlap");
    long lo = std::abs(alpha - beta), hi = alpha + beta;
    if (delta > 0) {
        if (hi < delta) return QRat(0);
        if (lo <= delta) {
            // Ball at the interpolated point between the closest vertices.
            if ((alpha + beta + delta) % 2 == 0)
                return ball_count(BallSpec::vertex((alpha + beta - delta) / 2));
            return midpoint_ball_count_by_reach((alpha + beta - delta + 1) / 2);
        }
        return (QRat(1 + 2 * (lo - delta))) * q_pow(std::min(alpha, beta)) +
               QRat(2) * (q_pow(std::min(alpha, beta)) - kOne) / (QRat::q() - kOne);
    }
    // Overlap in r >= 1 vertices.
    return QRat(r + 2 * lo) * q_pow(std::min(alpha, beta)) +
           QRat(2) * (q_pow(std::min(alpha, beta)) - kOne) / (QRat::q() - kOne);
}

QRat chi(long d, Color base, ColorFilter filter) {
    if (d < 0) throw std::invalid_argument("chi needs d >= 0");
    // Vertices counted by chi_d sit off the apartment, so their color is
    // base flipped d times.
    bool is_black = (d % 2 == 0) == (base == Color::Black);
    if (filter == ColorFilter::Black && !is_black) return QRat(0);
    if (filter == ColorFilter::White && is_black) return QRat(0);
    if (d == 0) return kOne;
    return q_pow(d - 1) * (QRat::q() - kOne);
}

}  // namespace qorb
