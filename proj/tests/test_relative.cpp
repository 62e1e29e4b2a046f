#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qorb/relative.hpp"

using namespace qorb;

// The case tables are transcribed here, independently of the treecount
// plumbing the implementation routes through, so the comparison is between
// two genuinely different expressions.
namespace {

QRat Q(long e) { return QRat::q_pow(e); }
const QRat one(1);

QRat geom(long i) { return (Q(i) - 1) / (Q(1) - 1); }
QRat vertex_ball(long i) { return one + (Q(1) + 1) * geom(i); }
QRat midpoint_ball(long reach) { return QRat(2) * geom(reach); }

// Case E (both unramified): integer depths and delta.
QRat table_E(long d1, long d2, long delta) {
    if (d1 + d2 < delta) return QRat(0);
    if (delta <= std::abs(d1 - d2)) return vertex_ball(std::min(d1, d2));
    long t = d1 + d2 - delta;
    if ((d1 + d2 + delta) % 2 == 0) return vertex_ball(t / 2);
    return midpoint_ball((t + 1) / 2);
}

// Case F (both ramified): depths are twice-values of half-integers, delta an
// integer between the two midpoints.
QRat table_F(long dd1, long dd2, long delta) {
    long t2 = dd1 + dd2 - 2 * delta;  // twice (d1 + d2 - delta), even here
    long sum2 = dd1 + dd2 + 2 * delta;
    if (t2 < 0) return QRat(0);
    if (2 * delta <= std::labs(dd1 - dd2))
        return midpoint_ball((std::min(dd1, dd2) + 1) / 2);
    if ((sum2 / 2) % 2 == 0) return vertex_ball(t2 / 4);
    return midpoint_ball((t2 / 2 + 1) / 2);
}

// Case G: d1 integer, d2 and delta twice-values of half-integers.
QRat table_G(long d1, long dd2, long ddelta) {
    long t = (2 * d1 + dd2 - ddelta) / 2;  // d1 + d2 - delta, an integer
    if (t < 0) return QRat(0);
    if (ddelta <= std::labs(2 * d1 - dd2)) {
        if (2 * d1 > dd2) return midpoint_ball((dd2 + 1) / 2);
        return vertex_ball(d1);
    }
    long sum = (2 * d1 + dd2 + ddelta) / 2;  // d1 + d2 + delta, an integer
    if (sum % 2 == 0) return midpoint_ball((t + 1) / 2);
    return vertex_ball(t / 2);
}

// Case h: tube radius d1 (integer), ball radius d2, distance delta; d2 and
// delta are both integers or both strict half-integers (twice-values).
QRat table_h(long d1, long dd2, long ddelta) {
    long t2 = 2 * d1 + dd2 - ddelta;  // twice (d1 + d2 - delta), even
    if (t2 < 0) return QRat(0);
    if (ddelta <= dd2 - 2 * d1) {
        // Tube branch: [1 + 2(d2 - d1 - delta)] q^{d1} + 2(q^{d1}-1)/(q-1).
        long run2 = dd2 - 2 * d1 - ddelta;
        return QRat(1 + run2) * Q(d1) + QRat(2) * geom(d1);
    }
    if (2 * d1 - dd2 > ddelta) {
        // Ball contained in the tube.
        if (dd2 % 2 == 0) return vertex_ball(dd2 / 2);
        return midpoint_ball((dd2 + 1) / 2);
    }
    long t = t2 / 2;
    if (t % 2 == 0) return vertex_ball(t / 2);
    return midpoint_ball((t + 1) / 2);
}

}  // namespace

TEST_CASE("case detection") {
    RelativeConfig a{GammaInvariants::split(1), GammaInvariants::split(2),
                     HalfInt::whole(3), std::nullopt, CoreRelation::Generic};
    CHECK(detect_case(a) == RelativeCase::A);
    RelativeConfig b{GammaInvariants::split(1), GammaInvariants::split(2),
                     HalfInt::whole(0), 2L, CoreRelation::Generic};
    CHECK(detect_case(b) == RelativeCase::B);
    RelativeConfig h{GammaInvariants::split(2),
                     GammaInvariants::ramified(HalfInt::halves(1)),
                     HalfInt::halves(3), std::nullopt, CoreRelation::Generic};
    CHECK(detect_case(h) == RelativeCase::H);

    // Parity discipline.
    RelativeConfig bad_e{GammaInvariants::unramified(1, Color::Black),
                         GammaInvariants::unramified(1, Color::Black),
                         HalfInt::halves(3), std::nullopt, CoreRelation::Generic};
    CHECK_THROWS_AS(detect_case(bad_e), std::invalid_argument);
    RelativeConfig bad_overlap{GammaInvariants::unramified(1, Color::Black),
                               GammaInvariants::split(1), HalfInt::whole(0), 2L,
                               CoreRelation::Generic};
    CHECK_THROWS_AS(detect_case(bad_overlap), std::invalid_argument);
    RelativeConfig bad_core{GammaInvariants::split(1),
                            GammaInvariants::unramified(1, Color::Black),
                            HalfInt::whole(0), std::nullopt,
                            CoreRelation::EqualApartments};
    CHECK_THROWS_AS(detect_case(bad_core), std::invalid_argument);
}

TEST_CASE("hyperbolic cases C, D, and the overlap sign") {
    RelativeConfig c{GammaInvariants::split(2), GammaInvariants::split(3),
                     HalfInt::whole(0), std::nullopt, CoreRelation::EqualApartments};
    CHECK(relative_orbital(c).value == Q(2));
    RelativeConfig d{GammaInvariants::split(2), GammaInvariants::split(3),
                     HalfInt::whole(0), std::nullopt, CoreRelation::SharedRay};
    CHECK(relative_orbital(d).divergent);

    // Overlapping apartments: the trailing geometric term enters with a plus
    // sign (the minus variant fails against the tree oracle).
    RelativeConfig b{GammaInvariants::split(1), GammaInvariants::split(1),
                     HalfInt::whole(0), 1L, CoreRelation::Generic};
    QRat got = relative_orbital(b).value;
    CHECK(got == Q(1) + 2);
    QRat minus_variant = Q(1) - 2;
    CHECK(got != minus_variant);
}

TEST_CASE("case A matches the transcribed table") {
    for (long d1 = 0; d1 <= 4; ++d1)
        for (long d2 = 0; d2 <= d1; ++d2)  // table stated for d1 >= d2
            for (long delta = 1; delta <= 5; ++delta) {
                RelativeConfig config{GammaInvariants::split(d1),
                                      GammaInvariants::split(d2),
                                      HalfInt::whole(delta), std::nullopt,
                                      CoreRelation::Generic};
                QRat got = relative_orbital(config).value;
                QRat want;
                if (d1 + d2 < delta) {
                    want = QRat(0);
                } else if (delta <= d1 - d2) {
                    want = QRat(1 + 2 * (d1 - delta - d2)) * Q(d2) + QRat(2) * geom(d2);
                } else if ((d1 + d2 - delta) % 2 == 0) {
                    want = vertex_ball((d1 + d2 - delta) / 2);
                } else {
                    want = midpoint_ball((d1 + d2 - delta + 1) / 2);
                }
                CHECK(got == want);
            }
}

TEST_CASE("case E matches the transcribed table") {
    GammaInvariants u[] = {GammaInvariants::unramified(0, Color::Black),
                           GammaInvariants::unramified(1, Color::Black),
                           GammaInvariants::unramified(2, Color::Black),
                           GammaInvariants::unramified(3, Color::Black)};
    for (long d1 = 0; d1 <= 3; ++d1)
        for (long d2 = 0; d2 <= 3; ++d2)
            for (long delta = 1; delta <= 6; ++delta) {
                RelativeConfig config{u[d1], u[d2], HalfInt::whole(delta), std::nullopt,
                                      CoreRelation::Generic};
                CHECK(relative_orbital(config).value == table_E(d1, d2, delta));
            }
    // The figure's configuration: depths 3 and 3 at distance 5 leaves the
    // two endpoints of a middle edge.
    RelativeConfig fig{u[3], u[3], HalfInt::whole(5), std::nullopt,
                       CoreRelation::Generic};
    CHECK(relative_orbital(fig).value == QRat(2));
    RelativeConfig fig2{u[3], GammaInvariants::unramified(4, Color::Black),
                        HalfInt::whole(5), std::nullopt, CoreRelation::Generic};
    CHECK(relative_orbital(fig2).value == Q(1) + 2);
}

TEST_CASE("case F matches the transcribed table") {
    for (long dd1 = 1; dd1 <= 7; dd1 += 2)
        for (long dd2 = 1; dd2 <= 7; dd2 += 2)
            for (long delta = 1; delta <= 5; ++delta) {
                RelativeConfig config{GammaInvariants::ramified(HalfInt::halves(dd1)),
                                      GammaInvariants::ramified(HalfInt::halves(dd2)),
                                      HalfInt::whole(delta), std::nullopt,
                                      CoreRelation::Generic};
                CHECK(relative_orbital(config).value == table_F(dd1, dd2, delta));
            }
}

TEST_CASE("case G matches the transcribed table") {
    for (long d1 = 0; d1 <= 3; ++d1)
        for (long dd2 = 1; dd2 <= 7; dd2 += 2)
            for (long ddelta = 1; ddelta <= 11; ddelta += 2) {
                RelativeConfig config{GammaInvariants::unramified(d1, Color::Black),
                                      GammaInvariants::ramified(HalfInt::halves(dd2)),
                                      HalfInt::halves(ddelta), std::nullopt,
                                      CoreRelation::Generic};
                CHECK(relative_orbital(config).value == table_G(d1, dd2, ddelta));
            }
}

TEST_CASE("case h matches the transcribed table") {
    for (long d1 = 0; d1 <= 3; ++d1) {
        for (long d2 = 0; d2 <= 4; ++d2)
            for (long delta = 0; delta <= 5; ++delta) {
                RelativeConfig config{GammaInvariants::split(d1),
                                      GammaInvariants::unramified(d2, Color::Black),
                                      HalfInt::whole(delta), std::nullopt,
                                      CoreRelation::Generic};
                CHECK(relative_orbital(config).value == table_h(d1, 2 * d2, 2 * delta));
            }
        for (long dd2 = 1; dd2 <= 7; dd2 += 2)
            for (long ddelta = 1; ddelta <= 9; ddelta += 2) {
                RelativeConfig config{GammaInvariants::split(d1),
                                      GammaInvariants::ramified(HalfInt::halves(dd2)),
                                      HalfInt::halves(ddelta), std::nullopt,
                                      CoreRelation::Generic};
                CHECK(relative_orbital(config).value == table_h(d1, dd2, ddelta));
            }
    }
    // Empty intersection far away.
    RelativeConfig far{GammaInvariants::split(1),
                       GammaInvariants::unramified(1, Color::Black),
                       HalfInt::whole(4), std::nullopt, CoreRelation::Generic};
    CHECK(relative_orbital(far).value == QRat(0));
    // The factor order does not matter.
    RelativeConfig swapped{GammaInvariants::unramified(1, Color::Black),
                           GammaInvariants::split(1), HalfInt::whole(2), std::nullopt,
                           CoreRelation::Generic};
    RelativeConfig straight{GammaInvariants::split(1),
                            GammaInvariants::unramified(1, Color::Black),
                            HalfInt::whole(2), std::nullopt, CoreRelation::Generic};
    CHECK(relative_orbital(swapped).value == relative_orbital(straight).value);
}

TEST_CASE("boundary continuity between adjacent branches") {
    // E: at delta = |d1 - d2| the interpolated ball equals the contained
    // ball.
    for (long d1 = 0; d1 <= 4; ++d1)
        for (long d2 = 0; d2 <= 4; ++d2) {
            long delta = std::labs(d1 - d2);
            if (delta == 0) continue;
            CHECK(table_E(d1, d2, delta) == vertex_ball(std::min(d1, d2)));
        }
    // h: at delta = d2 - d1 the tube branch meets the interpolated branch.
    for (long d1 = 0; d1 <= 3; ++d1)
        for (long d2 = d1; d2 <= d1 + 3; ++d2) {
            long ddelta = 2 * (d2 - d1);
            QRat run = QRat(1) * Q(d1) + QRat(2) * geom(d1);
            CHECK(table_h(d1, 2 * d2, ddelta) == run);
        }
}
