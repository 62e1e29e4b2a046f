#include "qorb/sl2.hpp"

#include <stdexcept>

namespace qorb {

namespace {
const QRat kOne(1);
const mpq_class kHalf(1, 2);

QRat q_pow(long e) { return QRat::q_pow(e); }
QRat geom(long i) { return (q_pow(i) - kOne) / (QRat::q() - kOne); }

Color color_at_parity(Color base, long distance) {
    return distance % 2 == 0 ? base : opposite(base);
}
}  // namespace

UnipotentGermClassSL2 germ_class(UnipotentRepSL2 rep) {
    switch (rep) {
        case UnipotentRepSL2::Zero: return UnipotentGermClassSL2::U0;
        case UnipotentRepSL2::One:
        case UnipotentRepSL2::U: return UnipotentGermClassSL2::U1;
        case UnipotentRepSL2::Pi:
        case UnipotentRepSL2::UPi: return UnipotentGermClassSL2::UPi;
    }
    throw std::logic_error("unreachable");
}

QRat sl2_unipotent(UnipotentRepSL2 rep, long n) {
    if (n < 0) throw std::invalid_argument("n >= 0 required");
    if (rep == UnipotentRepSL2::Zero) return n == 0 ? kOne : QRat(0);
    bool deep = rep == UnipotentRepSL2::Pi || rep == UnipotentRepSL2::UPi;
    QRat one_minus = kOne - q_pow(-2);
    if (n == 0) {
        QRat base = QRat(kHalf) / one_minus;
        return deep ? base * q_pow(-1) : base;
    }
    bool nonzero = deep ? (n % 2 == 1) : (n % 2 == 0);
    return nonzero ? QRat(kHalf) * q_pow(n) : QRat(0);
}

QRat sl2_unipotent_regular_stable(long n) {
    QRat sum;
    for (auto rep : {UnipotentRepSL2::One, UnipotentRepSL2::U, UnipotentRepSL2::Pi,
                     UnipotentRepSL2::UPi})
        sum += sl2_unipotent(rep, n);
    return sum;
}

QRat sl2_germ_functional(UnipotentGermClassSL2 cls, long n) {
    switch (cls) {
        case UnipotentGermClassSL2::U0:
            return sl2_unipotent(UnipotentRepSL2::Zero, n);
        case UnipotentGermClassSL2::U1:
            return QRat(2) * sl2_unipotent(UnipotentRepSL2::One, n);
        case UnipotentGermClassSL2::UPi:
            return QRat(2) * sl2_unipotent(UnipotentRepSL2::Pi, n);
    }
    throw std::logic_error("unreachable");
}

QRat sl2_hyperbolic(long depth, long n) {
    if (depth < 0 || n < 0) throw std::invalid_argument("nonnegative depth and n required");
    if (n == 0) return q_pow(depth);
    return q_pow(n + depth) - q_pow(n + depth - 1);
}

QRat sl2_elliptic_unram(long depth, Color center, long n) {
    if (depth < 0 || n < 0) throw std::invalid_argument("nonnegative depth and n required");
    if (n == 0) {
        // Black vertices of the ball of radius depth around the center.
        GammaInvariants inv = GammaInvariants::unramified(depth, center);
        return fixed_set_counts_sl2(inv).black;
    }
    // Vertices at distance n from the ball all share one color: the center
    // color flipped depth+n times.
    if (color_at_parity(center, depth + n) != Color::Black) return QRat(0);
    return q_pow(n + depth) * (kOne + q_pow(-1));
}

QRat sl2_elliptic_ram(HalfInt depth, long n) {
    if (depth.is_integer())
        throw std::invalid_argument("ramified depth must be a strict half-integer");
    if (depth < HalfInt::whole(0) || n < 0)
        throw std::invalid_argument("nonnegative depth and n required");
    long reach = (depth + HalfInt::halves(1)).as_integer();  // depth + 1/2
    if (n == 0) return geom(reach);
    return q_pow(n + reach - 1);
}

QRat sl2_orbital(const GammaInvariants& inv, long n) {
    inv.validate();
    switch (inv.klass) {
        case GammaClass::Split:
            return sl2_hyperbolic(inv.depth.as_integer(), n);
        case GammaClass::UnramifiedElliptic:
            if (!inv.center_color)
                throw std::invalid_argument("unramified orbit needs a center color");
            return sl2_elliptic_unram(inv.depth.as_integer(), *inv.center_color, n);
        case GammaClass::RamifiedElliptic:
            return sl2_elliptic_ram(inv.depth, n);
    }
    throw std::logic_error("unreachable");
}

QRat sl2_stable(const GammaInvariants& inv, long n) {
    switch (inv.klass) {
        case GammaClass::Split:
            return sl2_hyperbolic(inv.depth.as_integer(), n);
        case GammaClass::UnramifiedElliptic: {
            long d = inv.depth.as_integer();
            return sl2_elliptic_unram(d, Color::Black, n) +
                   sl2_elliptic_unram(d, Color::White, n);
        }
        case GammaClass::RamifiedElliptic:
            return QRat(2) * sl2_elliptic_ram(inv.depth, n);
    }
    throw std::logic_error("unreachable");
}

FixedSetCounts fixed_set_counts_sl2(const GammaInvariants& inv) {
    if (!inv.is_elliptic())
        throw std::invalid_argument("fixed-set counts only apply to elliptic classes");
    FixedSetCounts out;
    if (inv.klass == GammaClass::RamifiedElliptic) {
        long reach = (inv.depth + HalfInt::halves(1)).as_integer();
        out.black = geom(reach);
        out.white = out.black;
        return out;
    }
    if (!inv.center_color)
        throw std::invalid_argument("unramified counts need a center color");
    long d = inv.depth.as_integer();
    // Vertices of the center's own color: 1 + (q+1)[q + q^3 + ... up to
    // exponent 2 floor(d/2) - 1], which telescopes to a geometric sum.
    QRat same_color = geom(2 * (d / 2) + 1);
    QRat total = kOne + (QRat::q() + kOne) * geom(d);
    if (*inv.center_color == Color::Black) {
        out.black = same_color;
        out.white = total - same_color;
    } else {
        out.white = same_color;
        out.black = total - same_color;
    }
    return out;
}

QRat ShalikaExpansionSL2::apply(long n) const {
    return A * sl2_germ_functional(UnipotentGermClassSL2::U0, n) +
           B * sl2_germ_functional(UnipotentGermClassSL2::U1, n) +
           C * sl2_germ_functional(UnipotentGermClassSL2::UPi, n);
}

ShalikaExpansionSL2 sl2_shalika(const GammaInvariants& inv) {
    inv.validate();
    ShalikaExpansionSL2 g;
    if (inv.klass == GammaClass::Split) {
        g.A = QRat(0);
        g.B = q_pow(inv.depth.as_integer()) * (kOne - q_pow(-1));
        g.C = g.B;
        return g;
    }
    FixedSetCounts counts = fixed_set_counts_sl2(inv);
    g.A = kOne / (kOne - QRat::q());
    g.B = q_pow(-1) * (QRat::q() * counts.black - counts.white + kOne);
    g.C = q_pow(-1) * (QRat::q() * counts.white - counts.black + kOne);
    return g;
}

ShalikaExpansionSL2 sl2_shalika_second_orbit(const GammaInvariants& inv) {
    ShalikaExpansionSL2 g = sl2_shalika(inv);
    std::swap(g.B, g.C);
    return g;
}

}  // namespace qorb
