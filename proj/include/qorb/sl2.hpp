#pragma once

#include "qorb/invariants.hpp"
#include "qorb/qrat.hpp"

namespace qorb {

// Orbital integrals O_n for SL2 over a p-adic field, for the spherical basis
// f_n = 1_{K diag(pi^n, pi^-n) K}, with the Haar measure giving K measure 1.
// Values are exact rational functions of the residue field size q.

// The five unipotent conjugacy classes, represented by upper-triangular
// matrices with top-right entry 0, 1, u, pi, u*pi (u a nonsquare unit).
enum class UnipotentRepSL2 { Zero, One, U, Pi, UPi };

// Grouping of unipotent classes that merge over the unramified quadratic
// extension; germ coefficients live on these.
enum class UnipotentGermClassSL2 { U0, U1, UPi };

UnipotentGermClassSL2 germ_class(UnipotentRepSL2 rep);

// O_n of a unipotent representative. Measures on the centralizer give
// alpha(x O_F) measure 2 for x != 0, splitting each GL2 class into its four
// SL2 pieces evenly.
QRat sl2_unipotent(UnipotentRepSL2 rep, long n);

// Sum of the four nonzero-class integrals (the regular stable unipotent
// integral): 1/(1-q^{-1}) at n = 0 and q^n for n > 0.
QRat sl2_unipotent_regular_stable(long n);

// Functionals L_0, L_1, L_pi on f_n entering the germ expansions:
// L_x = 2 O(alpha(x), .) for x != 0 and O(alpha(0), .) for x = 0.
QRat sl2_germ_functional(UnipotentGermClassSL2 cls, long n);

QRat sl2_hyperbolic(long depth, long n);

// Unramified elliptic: fixed set is a ball around a vertex of the given
// color; the integral counts black vertices.
QRat sl2_elliptic_unram(long depth, Color center, long n);

// Ramified elliptic: fixed set is a ball around a midpoint; depth is a
// strict half-integer.
QRat sl2_elliptic_ram(HalfInt depth, long n);

// O_n of the rational orbit described by the invariants (elliptic classes
// use their center data; unramified requires center_color).
QRat sl2_orbital(const GammaInvariants& inv, long n);

// Stable orbital integral: sum over the rational orbits in the stable class.
QRat sl2_stable(const GammaInvariants& inv, long n);

// Black and white vertex counts of the fixed-point set X^gamma of an
// elliptic element.
struct FixedSetCounts {
    QRat black, white;
    QRat total() const { return black + white; }
};
FixedSetCounts fixed_set_counts_sl2(const GammaInvariants& inv);

// Shalika germ coefficients: Orb(gamma, .) = A L_0 + B L_1 + C L_pi.
struct ShalikaExpansionSL2 {
    QRat A, B, C;
    QRat apply(long n) const;  // evaluates the expansion on f_n
};

ShalikaExpansionSL2 sl2_shalika(const GammaInvariants& inv);

// Expansion of the other rational orbit in the same stable class: the
// coefficients of the classes merging over GL2 (U1 and UPi) swap.
ShalikaExpansionSL2 sl2_shalika_second_orbit(const GammaInvariants& inv);

}  // namespace qorb
