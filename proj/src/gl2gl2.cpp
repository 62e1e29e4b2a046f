#include "qorb/gl2gl2.hpp"

#include <stdexcept>

namespace qorb {

namespace {
const QRat kOne(1);
QRat q_pow(long e) { return QRat::q_pow(e); }

void require_nm(long n, long m) {
    if (n < 0 || m < 0) throw std::invalid_argument("n, m >= 0 required");
}
}  // namespace

UnipotentMergedG merged_class(UnipotentRepG rep) {
    switch (rep) {
        case UnipotentRepG::Zero: return UnipotentMergedG::Zero;
        case UnipotentRepG::LeftOne: return UnipotentMergedG::LeftOne;
        case UnipotentRepG::RightOne: return UnipotentMergedG::RightOne;
        case UnipotentRepG::One:
        case UnipotentRepG::OneU: return UnipotentMergedG::One;
        case UnipotentRepG::OnePi:
        case UnipotentRepG::UPi: return UnipotentMergedG::OnePi;
    }
    throw std::logic_error("unreachable");
}

QRat g_unipotent(UnipotentRepG rep, long n, long m) {
    return g_unipotent(merged_class(rep), n, m);
}

QRat g_unipotent(UnipotentMergedG rep, long n, long m) {
    require_nm(n, m);
    QRat one_minus = kOne - q_pow(-2);
    switch (rep) {
        case UnipotentMergedG::Zero:
            return (n == 0 && m == 0) ? kOne : QRat(0);
        case UnipotentMergedG::LeftOne:
            if (m != 0) return QRat(0);
            if (n == 0) return kOne / (kOne - q_pow(-1));
            return q_pow(n);
        case UnipotentMergedG::RightOne:
            return g_unipotent(UnipotentMergedG::LeftOne, m, n);
        case UnipotentMergedG::One: {
            if (n == 0 && m == 0) return (kOne + q_pow(-2)) / (one_minus * one_minus);
            if (n > 0 && m > 0)
                return (n + m) % 2 == 0 ? q_pow(n + m) : QRat(0);
            // Boundary rows n m = 0, n + m > 0.
            QRat par = (n + m) % 2 == 0 ? kOne : q_pow(-1);
            return q_pow(n + m) / one_minus * par;
        }
        case UnipotentMergedG::OnePi: {
            if (n == 0 && m == 0) return QRat(2) * q_pow(-1) / (one_minus * one_minus);
            if (n > 0 && m > 0)
                return (n + m) % 2 == 1 ? q_pow(n + m) : QRat(0);
            QRat par = (n + m) % 2 == 1 ? kOne : q_pow(-1);
            return q_pow(n + m) / one_minus * par;
        }
    }
    throw std::logic_error("unreachable");
}

QRat g_germ_functional(UnipotentMergedG cls, long n, long m) {
    return g_unipotent(cls, n, m);
}

QRat g_hyperbolic(long d1, long d2, long n, long m) {
    require_nm(n, m);
    if (d1 < 0 || d2 < 0) throw std::invalid_argument("nonnegative depths required");
    QRat factor(1);
    if (n > 0) factor *= kOne - q_pow(-1);
    if (m > 0) factor *= kOne - q_pow(-1);
    return q_pow(n + m + d1 + d2) * factor;
}

YCounts y_counts(const EllipticPairConfig& config) {
    // Only the relative coloring of the two centers enters the pair counts
    // (flipping both centers swaps black and white everywhere), so the
    // parity field alone fixes the configuration; carried per-factor center
    // colors are not consulted here.
    auto black_centered = [](const GammaInvariants& inv) {
        GammaInvariants normalized = inv;
        if (normalized.klass == GammaClass::UnramifiedElliptic)
            normalized.center_color = Color::Black;
        return fixed_set_counts_sl2(normalized);
    };
    FixedSetCounts c1 = black_centered(config.inv1);
    FixedSetCounts c2 = black_centered(config.inv2);
    if (config.parity == PairParity::Bichrome) std::swap(c2.black, c2.white);
    YCounts y;
    y.y_mono = c1.black * c2.black + c1.white * c2.white;
    y.y_bi = c1.black * c2.white + c1.white * c2.black;
    y.x1 = c1.total();
    y.x2 = c2.total();
    y.sigma_x = y.x1 + y.x2;
    return y;
}

namespace {

// Per-orbit integral of one SL2 factor, used by the ramified-pair
// reduction: the black-vertex count at distance n from the fixed set of one
// rational orbit. Unramified factors need their center color here, since
// the per-orbit value depends on it.
QRat per_orbit_factor(const GammaInvariants& inv, long n) {
    return sl2_orbital(inv, n);
}

// The six-branch colored-count formula for two vertex-centered (unramified)
// factors.
QRat elliptic_vertex_pair(const EllipticPairConfig& config, long n, long m) {
    YCounts y = y_counts(config);
    if (n == 0 && m == 0) return y.y_mono;
    if (n > 0 && m > 0) {
        bool aligned = (n % 2) == (m % 2);
        const QRat& lead = aligned ? y.y_mono : y.y_bi;
        const QRat& cross = aligned ? y.y_bi : y.y_mono;
        return q_pow(n + m - 2) *
               (QRat::q() * QRat::q() * lead + QRat::q() * (y.sigma_x - QRat(2) * cross) +
                lead - y.sigma_x + QRat(2));
    }
    if (n == 0) {
        const QRat& lead = m % 2 == 0 ? y.y_mono : y.y_bi;
        const QRat& cross = m % 2 == 0 ? y.y_bi : y.y_mono;
        return q_pow(m - 1) * (QRat::q() * lead - cross + y.x1);
    }
    // n > 0, m = 0: swap the factors.
    EllipticPairConfig swapped{config.inv2, config.inv1, config.parity};
    return elliptic_vertex_pair(swapped, 0, n);
}

}  // namespace

QRat g_elliptic(const EllipticPairConfig& config, long n, long m) {
    require_nm(n, m);
    if (!config.inv1.is_elliptic() || !config.inv2.is_elliptic())
        throw std::invalid_argument("elliptic pair requires two elliptic factors");
    bool ram1 = config.inv1.klass == GammaClass::RamifiedElliptic;
    bool ram2 = config.inv2.klass == GammaClass::RamifiedElliptic;
    if (!ram1 && !ram2) return elliptic_vertex_pair(config, n, m);
    // A midpoint-centered factor splits every distance sphere evenly between
    // the colors, so the pair integral is the plain product of the per-orbit
    // factors.
    return per_orbit_factor(config.inv1, n) * per_orbit_factor(config.inv2, m);
}

QRat g_mixed(long d1, const GammaInvariants& inv2, long n, long m) {
    require_nm(n, m);
    if (d1 < 0) throw std::invalid_argument("nonnegative depth required");
    if (!inv2.is_elliptic()) throw std::invalid_argument("second factor must be elliptic");
    QRat x2 = inv2.klass == GammaClass::UnramifiedElliptic
                  ? kOne + (QRat::q() + kOne) *
                               ((q_pow(inv2.depth.as_integer()) - kOne) / (QRat::q() - kOne))
                  : QRat(2) *
                        ((q_pow((inv2.depth + HalfInt::halves(1)).as_integer()) - kOne) /
                         (QRat::q() - kOne));
    QRat inner;
    if (n == 0 && m == 0) {
        inner = x2;
    } else if (n == 0) {
        inner = (kOne - q_pow(-1)) * x2 + QRat(2) * q_pow(-1);
    } else if (m == 0) {
        inner = (kOne - q_pow(-1)) * x2;
    } else {
        inner = (kOne - q_pow(-1)) * ((kOne - q_pow(-1)) * x2 + QRat(2) * q_pow(-1));
    }
    return q_pow(d1 + n + m) * inner;
}

QRat ShalikaExpansionG::apply(long n, long m) const {
    return A * g_germ_functional(UnipotentMergedG::Zero, n, m) +
           B * g_germ_functional(UnipotentMergedG::LeftOne, n, m) +
           C * g_germ_functional(UnipotentMergedG::RightOne, n, m) +
           D * g_germ_functional(UnipotentMergedG::One, n, m) +
           E * g_germ_functional(UnipotentMergedG::OnePi, n, m);
}

ShalikaExpansionG g_shalika_hyperbolic(long d1, long d2) {
    ShalikaExpansionG g;
    g.A = g.B = g.C = QRat(0);
    QRat f = kOne - q_pow(-1);
    g.D = q_pow(d1 + d2) * f * f;
    g.E = g.D;
    return g;
}

ShalikaExpansionG g_shalika_elliptic(const EllipticPairConfig& config) {
    YCounts y = y_counts(config);
    ShalikaExpansionG g;
    QRat one_minus_q = kOne - QRat::q();
    g.A = QRat(2) / (one_minus_q * one_minus_q);
    g.B = QRat(2) * q_pow(-1) / one_minus_q - q_pow(-1) * y.x1;
    g.C = QRat(2) * q_pow(-1) / one_minus_q - q_pow(-1) * y.x2;
    QRat qsq = QRat::q() * QRat::q();
    g.D = q_pow(-2) * ((kOne + qsq) * y.y_mono + (QRat::q() - kOne) * y.sigma_x -
                       QRat(2) * QRat::q() * y.y_bi + QRat(2));
    g.E = q_pow(-2) * ((kOne + qsq) * y.y_bi + (QRat::q() - kOne) * y.sigma_x -
                       QRat(2) * QRat::q() * y.y_mono + QRat(2));
    return g;
}

ShalikaExpansionG g_shalika_mixed(long d1, const GammaInvariants& inv2) {
    ShalikaExpansionG g;
    g.A = g.C = QRat(0);
    g.B = QRat(-2) * q_pow(d1 - 1);
    QRat x2 = fixed_set_counts_sl2(inv2).total();
    QRat f = kOne - q_pow(-1);
    g.D = q_pow(d1) * f * (f * x2 + QRat(2) * q_pow(-1));
    g.E = g.D;
    return g;
}

QRat g_stable_hyperbolic(long d1, long d2, long n, long m) {
    return g_hyperbolic(d1, d2, n, m);
}

QRat g_stable_elliptic(const GammaInvariants& inv1, const GammaInvariants& inv2, long n,
                       long m) {
    // Summing the rational orbits of the stable class always yields the
    // product of the two stable SL2 integrals, regardless of how the orbits
    // partition into parity classes.
    return sl2_stable(inv1, n) * sl2_stable(inv2, m);
}

QRat g_stable_mixed(long d1, const GammaInvariants& inv2, long n, long m) {
    return g_mixed(d1, inv2, n, m);
}

QRat g_stable_unipotent_regular(long n, long m) {
    return g_unipotent(UnipotentMergedG::One, n, m) +
           g_unipotent(UnipotentMergedG::OnePi, n, m);
}

}  // namespace qorb
