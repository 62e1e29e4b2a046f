#pragma once

#include <gmpxx.h>

#include <optional>

#include "qorb/halfint.hpp"
#include "qorb/tree.hpp"

namespace qorb {

enum class GammaClass { Split, UnramifiedElliptic, RamifiedElliptic };

// Conjugacy-invariant data of a regular semisimple element of GL2 over a
// p-adic field: its class, its depth d_gamma, and (for unramified elliptic
// elements only) the color of the fixed-ball center on the tree. The center
// color is not a function of (trace, det); it is supplied by the caller
// where a computation needs it.
struct GammaInvariants {
    GammaClass klass = GammaClass::Split;
    HalfInt depth;
    std::optional<Color> center_color;

    static GammaInvariants split(long d) {
        return {GammaClass::Split, HalfInt::whole(d), std::nullopt};
    }
    static GammaInvariants unramified(long d, Color center) {
        return {GammaClass::UnramifiedElliptic, HalfInt::whole(d), center};
    }
    static GammaInvariants ramified(HalfInt d) {
        return {GammaClass::RamifiedElliptic, d, std::nullopt};
    }

    bool is_elliptic() const { return klass != GammaClass::Split; }
    void validate() const;
};

// Classification from the characteristic polynomial x^2 - trace x + det.
// Requires p odd, unit determinant, integral trace and nonzero discriminant;
// throws std::invalid_argument otherwise. The result carries no center
// color.
GammaInvariants classify_gl2(const mpq_class& trace, const mpq_class& det, long p);

// p-adic valuation of a nonzero rational.
long padic_valuation(const mpq_class& x, long p);

// Legendre symbol (a/p) for odd prime p and a a unit mod p.
int legendre_symbol(const mpz_class& a, long p);

struct EtaleClass {
    enum class Group { GLn, SL2, GL2xdetGL2 };
    Group group = Group::GLn;
    // SL2: the single factor. GL2xdetGL2: both factors.
    std::optional<GammaInvariants> inv1, inv2;
    // Only meaningful when both factors are elliptic: whether the two
    // quadratic field extensions coincide.
    bool same_field = false;

    static EtaleClass gln() { return {Group::GLn, std::nullopt, std::nullopt, false}; }
    static EtaleClass sl2(GammaInvariants g) {
        return {Group::SL2, g, std::nullopt, false};
    }
    static EtaleClass gl2xgl2(GammaInvariants g1, GammaInvariants g2, bool same_field) {
        return {Group::GL2xdetGL2, g1, g2, same_field};
    }
};

// Number of rational orbits inside the stable orbit. For GL2 x_det GL2 the
// convention here: one orbit when both elliptic factors generate the same
// quadratic field, two when the fields differ. The opposite convention (a
// Z/2Z cohomology group exactly for equal fields) also circulates; the
// tests pin the one used here rather than resolving the tension silently.
int orbit_count(const EtaleClass& cls);

}  // namespace qorb
