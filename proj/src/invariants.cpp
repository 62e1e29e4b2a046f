#include "qorb/invariants.hpp"

#include <stdexcept>

namespace qorb {

void GammaInvariants::validate() const {
    bool integral = depth.is_integer();
    switch (klass) {
        case GammaClass::Split:
        case GammaClass::UnramifiedElliptic:
            if (!integral) throw std::invalid_argument("depth must be an integer");
            break;
        case GammaClass::RamifiedElliptic:
            if (integral)
                throw std::invalid_argument("ramified depth must be a strict half-integer");
            break;
    }
    if (klass != GammaClass::UnramifiedElliptic && center_color.has_value())
        throw std::invalid_argument(
            "center color only applies to unramified elliptic invariants");
    if (depth < HalfInt::whole(0)) throw std::invalid_argument("negative depth");
}

long padic_valuation(const mpq_class& x_in, long p) {
    mpq_class x = x_in;
    x.canonicalize();  // raw mpq_class(a, b) constructions need not be reduced
    if (x == 0) throw std::invalid_argument("valuation of zero");
    auto val_z = [p](mpz_class n) {
        long v = 0;
        mpz_class r;
        for (;;) {
            mpz_class quo;
            mpz_fdiv_qr_ui(quo.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p);
            if (r != 0) break;
            n = quo;
            ++v;
        }
        return v;
    };
    return val_z(x.get_num()) - val_z(x.get_den());
}

int legendre_symbol(const mpz_class& a, long p) {
    mpz_class pz(p);
    mpz_class r = a % pz;
    if (r < 0) r += pz;
    if (r == 0) throw std::invalid_argument("Legendre symbol of a non-unit");
    // Euler's criterion.
    mpz_class e = (pz - 1) / 2, pow;
    mpz_powm(pow.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
    return pow == 1 ? 1 : -1;
}

namespace {
bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Unit part of x at p: x / p^val(x), reduced mod p.
mpz_class unit_part_mod_p(const mpq_class& x_in, long p) {
    mpq_class x = x_in;
    x.canonicalize();
    long v = padic_valuation(x, p);
    mpq_class u = x;
    mpq_class pq(p);
    for (long i = 0; i < v; ++i) u /= pq;
    for (long i = 0; i < -v; ++i) u *= pq;
    // u = a/b with p dividing neither; reduce a * b^{-1} mod p.
    mpz_class pz(p), a = u.get_num() % pz, b = u.get_den() % pz, binv;
    if (a < 0) a += pz;
    if (b < 0) b += pz;
    if (mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::logic_error("unit part not invertible mod p");
    return (a * binv) % pz;
}
}  // namespace

GammaInvariants classify_gl2(const mpq_class& trace_in, const mpq_class& det_in, long p) {
    mpq_class trace = trace_in, det = det_in;
    trace.canonicalize();
    det.canonicalize();
    if (!is_odd_prime(p))
        throw std::invalid_argument("classification requires an odd prime");
    if (det == 0 || padic_valuation(det, p) != 0)
        throw std::invalid_argument("eigenvalues must be units: val(det) = 0 required");
    if (trace != 0 && padic_valuation(trace, p) < 0)
        throw std::invalid_argument("trace must be integral: val(trace) >= 0 required");
    mpq_class disc = trace * trace - 4 * det;
    if (disc == 0)
        throw std::invalid_argument("zero discriminant: element is not regular semisimple");

    long v = padic_valuation(disc, p);
    GammaInvariants inv;
    inv.depth = HalfInt::halves(v);
    if (v % 2 != 0) {
        inv.klass = GammaClass::RamifiedElliptic;
    } else {
        int chi = legendre_symbol(unit_part_mod_p(disc, p), p);
        inv.klass = chi == 1 ? GammaClass::Split : GammaClass::UnramifiedElliptic;
        // The center color depends on the lattice class of the fixed point,
        // not on (trace, det); callers supply it where needed.
    }
    return inv;
}

int orbit_count(const EtaleClass& cls) {
    switch (cls.group) {
        case EtaleClass::Group::GLn:
            return 1;
        case EtaleClass::Group::SL2:
            return cls.inv1 && cls.inv1->is_elliptic() ? 2 : 1;
        case EtaleClass::Group::GL2xdetGL2: {
            if (!cls.inv1 || !cls.inv2)
                throw std::invalid_argument("GL2 x GL2 class needs both factors");
            bool both_elliptic = cls.inv1->is_elliptic() && cls.inv2->is_elliptic();
            if (!both_elliptic) return 1;
            return cls.same_field ? 1 : 2;
        }
    }
    return 1;
}

}  // namespace qorb
