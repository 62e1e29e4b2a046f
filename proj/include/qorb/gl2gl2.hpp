#pragma once

#include "qorb/invariants.hpp"
#include "qorb/qrat.hpp"
#include "qorb/sl2.hpp"

namespace qorb {

// Orbital integrals O_{n,m} for the subgroup of GL2 x GL2 with equal
// determinants, against f_{n,m} = 1_{K (t_n, t_m) K}. Classes are indexed by
// invariant data of the two GL2 factors.

// The seven unipotent orbits alpha(x, y).
enum class UnipotentRepG {
    Zero,      // (0,0)
    LeftOne,   // (1,0)
    RightOne,  // (0,1)
    One,       // (1,1)
    OneU,      // (1,u)
    OnePi,     // (1,pi)
    UPi        // (u,pi)
};

// The five orbits left after base change to the unramified quadratic
// extension; orbital integrals only depend on these.
enum class UnipotentMergedG { Zero, LeftOne, RightOne, One, OnePi };

UnipotentMergedG merged_class(UnipotentRepG rep);

QRat g_unipotent(UnipotentRepG rep, long n, long m);
QRat g_unipotent(UnipotentMergedG rep, long n, long m);

// Functional values L_{alpha}(f_{n,m}) entering the germ expansions, on the
// five merged classes.
QRat g_germ_functional(UnipotentMergedG cls, long n, long m);

// Hyperbolic pair (both split).
QRat g_hyperbolic(long d1, long d2, long n, long m);

// Colored fixed-point-pair counts for a pair of elliptic factors.
struct YCounts {
    QRat y_mono, y_bi;  // monochrome / bichrome vertex-pair counts
    QRat sigma_x;       // |X^{gamma_1}| + |X^{gamma_2}|
    QRat x1, x2;        // the individual fixed-set sizes
};

enum class PairParity { Monochrome, Bichrome };

struct EllipticPairConfig {
    GammaInvariants inv1, inv2;
    // Whether the two fixed-ball centers share a color. Only meaningful when
    // both factors are unramified (vertex centers). Pair values depend on
    // the centers only through this relative datum, so it alone fixes the
    // configuration; per-factor center colors are ignored by pair
    // computations.
    PairParity parity = PairParity::Monochrome;
};

YCounts y_counts(const EllipticPairConfig& config);

// Orbital integral of an elliptic pair. Unramified-unramified pairs follow
// the colored-count formula; pairs with a ramified (midpoint-center) factor
// reduce to products of the per-orbit SL2 integrals.
QRat g_elliptic(const EllipticPairConfig& config, long n, long m);

// Mixed pair: first factor hyperbolic of depth d1, second elliptic.
QRat g_mixed(long d1, const GammaInvariants& inv2, long n, long m);

// Germ coefficients: Orb = A L_(0,0) + B L_(1,0) + C L_(0,1) + D L_(1,1)
// + E L_(1,pi).
struct ShalikaExpansionG {
    QRat A, B, C, D, E;
    QRat apply(long n, long m) const;
};

ShalikaExpansionG g_shalika_hyperbolic(long d1, long d2);
ShalikaExpansionG g_shalika_elliptic(const EllipticPairConfig& config);
ShalikaExpansionG g_shalika_mixed(long d1, const GammaInvariants& inv2);

// Stable orbital integrals: sums over the rational orbits of the stable
// class. Every stable value factors as a product of the two per-factor
// GL2-level integrals.
QRat g_stable_hyperbolic(long d1, long d2, long n, long m);
QRat g_stable_elliptic(const GammaInvariants& inv1, const GammaInvariants& inv2, long n,
                       long m);
QRat g_stable_mixed(long d1, const GammaInvariants& inv2, long n, long m);
QRat g_stable_unipotent_regular(long n, long m);  // (1,1) + (1,pi)

}  // namespace qorb
