#include "qorb/relative.hpp"

#include <stdexcept>

#include "qorb/treecount.hpp"

namespace qorb {

std::string to_string(RelativeCase c) {
    switch (c) {
        case RelativeCase::A: return "A";
        case RelativeCase::B: return "B";
        case RelativeCase::C: return "C";
        case RelativeCase::D: return "D";
        case RelativeCase::E: return "E";
        case RelativeCase::F: return "F";
        case RelativeCase::G: return "G";
        case RelativeCase::H: return "h";
    }
    throw std::logic_error("unreachable");
}

namespace {

bool is_split(const GammaInvariants& g) { return g.klass == GammaClass::Split; }
bool is_ram(const GammaInvariants& g) { return g.klass == GammaClass::RamifiedElliptic; }

void check_parity(const RelativeConfig& c, RelativeCase kase) {
    bool ok = true;
    switch (kase) {
        case RelativeCase::A:
        case RelativeCase::E:
            ok = c.delta.is_integer();
            break;
        case RelativeCase::F:
            // Midpoint-to-midpoint distances are integers.
            ok = c.delta.is_integer();
            break;
        case RelativeCase::G:
            ok = !c.delta.is_integer();
            break;
        case RelativeCase::H: {
            const GammaInvariants& ell = is_split(c.inv1) ? c.inv2 : c.inv1;
            ok = is_ram(ell) ? !c.delta.is_integer() : c.delta.is_integer();
            break;
        }
        default:
            break;
    }
    if (!ok)
        throw std::invalid_argument("delta parity inconsistent with the case geometry");
}

}  // namespace

RelativeCase detect_case(const RelativeConfig& config) {
    config.inv1.validate();
    config.inv2.validate();
    const GammaInvariants& g1 = config.inv1;
    const GammaInvariants& g2 = config.inv2;
    RelativeCase kase;
    if (is_split(g1) && is_split(g2)) {
        if (config.core == CoreRelation::EqualApartments)
            kase = RelativeCase::C;
        else if (config.core == CoreRelation::SharedRay)
            kase = RelativeCase::D;
        else if (config.overlap_r.has_value())
            kase = RelativeCase::B;
        else
            kase = RelativeCase::A;
    } else if (is_split(g1) || is_split(g2)) {
        kase = RelativeCase::H;
    } else if (!is_ram(g1) && !is_ram(g2)) {
        kase = RelativeCase::E;
    } else if (is_ram(g1) && is_ram(g2)) {
        kase = RelativeCase::F;
    } else {
        kase = RelativeCase::G;
    }
    if (config.overlap_r.has_value()) {
        if (kase != RelativeCase::B)
            throw std::invalid_argument("apartment overlap only applies to split pairs");
        if (*config.overlap_r < 1)
            throw std::invalid_argument("overlap must contain at least one vertex");
        if (config.delta.twice() != 0)
            throw std::invalid_argument("overlapping apartments are at distance 0");
    }
    if (config.core != CoreRelation::Generic &&
        !(is_split(g1) && is_split(g2)))
        throw std::invalid_argument("shared apartments require two split factors");
    check_parity(config, kase);
    return kase;
}

RelativeResult relative_orbital(const RelativeConfig& config) {
    RelativeCase kase = detect_case(config);
    const HalfInt d1 = config.inv1.depth;
    const HalfInt d2 = config.inv2.depth;
    RelativeResult out;
    switch (kase) {
        case RelativeCase::A:
            out.value = tube_tube_count(d1.as_integer(), d2.as_integer(),
                                        config.delta.as_integer(), 0);
            break;
        case RelativeCase::B:
            // The closed form for overlapping tubes; the tree oracle fixes
            // the sign of the trailing geometric term.
            out.value = tube_tube_count(d1.as_integer(), d2.as_integer(), 0,
                                        *config.overlap_r);
            break;
        case RelativeCase::C:
            out.value = QRat::q_pow(std::min(d1, d2));
            break;
        case RelativeCase::D:
            out.divergent = true;
            out.value = QRat(0);
            break;
        case RelativeCase::E:
        case RelativeCase::F:
        case RelativeCase::G:
            out.value = ball_ball_intersection(d1, d2, config.delta).count;
            break;
        case RelativeCase::H: {
            bool first_split = is_split(config.inv1);
            const GammaInvariants& tube = first_split ? config.inv1 : config.inv2;
            const GammaInvariants& ball = first_split ? config.inv2 : config.inv1;
            auto kind = is_ram(ball) ? BallSpec::Center::Midpoint : BallSpec::Center::Vertex;
            out.value =
                tube_ball_count(tube.depth.as_integer(), ball.depth, config.delta, kind);
            break;
        }
    }
    return out;
}

}  // namespace qorb
