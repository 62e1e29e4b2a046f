#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qorb/invariants.hpp"

using namespace qorb;

TEST_CASE("classification by Legendre symbol of the discriminant") {
    // disc = -4: nonsquare mod 3, square mod 5.
    auto a = classify_gl2(0, 1, 3);
    CHECK(a.klass == GammaClass::UnramifiedElliptic);
    CHECK(a.depth == HalfInt::whole(0));
    auto b = classify_gl2(0, 1, 5);
    CHECK(b.klass == GammaClass::Split);
    CHECK(b.depth == HalfInt::whole(0));
    // disc = 4 - 4(1 - 9) = 36: val_3 = 2, unit part 4 is a square.
    auto c = classify_gl2(2, mpq_class(-8), 3);
    CHECK(c.klass == GammaClass::Split);
    CHECK(c.depth == HalfInt::whole(1));
    // disc = 4 - 4(1 - 3) = 12: val_3 = 1, odd, so ramified of depth 1/2.
    auto d = classify_gl2(2, mpq_class(-2), 3);
    CHECK(d.klass == GammaClass::RamifiedElliptic);
    CHECK(d.depth == HalfInt::halves(1));
}

TEST_CASE("classification rejects bad inputs") {
    CHECK_THROWS_AS(classify_gl2(2, 1, 3), std::invalid_argument);   // disc = 0
    CHECK_THROWS_AS(classify_gl2(0, 1, 2), std::invalid_argument);   // p = 2
    CHECK_THROWS_AS(classify_gl2(0, 1, 9), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(classify_gl2(0, 3, 3), std::invalid_argument);   // non-unit det
    CHECK_THROWS_AS(classify_gl2(mpq_class(1, 3), 1, 3), std::invalid_argument);
}

TEST_CASE("invariance under unit eigenvalue scaling") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> tr(-9, 9), units(1, 20);
    std::vector<long> primes = {3, 5, 7, 11};
    int tested = 0;
    while (tested < 200) {
        long p = primes[rng() % primes.size()];
        mpq_class trace = tr(rng), det = tr(rng);
        if (det == 0 || padic_valuation(det, p) != 0) continue;
        if (trace != 0 && padic_valuation(trace, p) < 0) continue;
        if (trace * trace == 4 * det) continue;
        // A unit u of zero valuation: scaling eigenvalues by u maps
        // (trace, det) to (u trace, u^2 det).
        mpq_class u(units(rng), units(rng));
        u.canonicalize();
        if (padic_valuation(u, p) != 0) continue;
        auto base = classify_gl2(trace, det, p);
        auto scaled = classify_gl2(u * trace, u * u * det, p);
        CHECK(base.klass == scaled.klass);
        CHECK(base.depth == scaled.depth);
        // Depth parity matches the class.
        CHECK(base.depth.is_integer() ==
              (base.klass != GammaClass::RamifiedElliptic));
        ++tested;
    }
}

TEST_CASE("valuations and Legendre symbols") {
    CHECK(padic_valuation(mpq_class(36), 3) == 2);
    CHECK(padic_valuation(mpq_class(1, 9), 3) == -2);
    CHECK(padic_valuation(mpq_class(10, 3), 5) == 1);
    CHECK(legendre_symbol(4, 3) == 1);
    CHECK(legendre_symbol(-1, 3) == -1);
    CHECK(legendre_symbol(-1, 5) == 1);
    CHECK(legendre_symbol(2, 7) == 1);
    CHECK(legendre_symbol(3, 7) == -1);
}

TEST_CASE("orbit counts") {
    CHECK(orbit_count(EtaleClass::gln()) == 1);
    CHECK(orbit_count(EtaleClass::sl2(GammaInvariants::split(1))) == 1);
    CHECK(orbit_count(EtaleClass::sl2(
              GammaInvariants::unramified(0, Color::Black))) == 2);
    CHECK(orbit_count(EtaleClass::sl2(
              GammaInvariants::ramified(HalfInt::halves(1)))) == 2);

    auto unram = GammaInvariants::unramified(1, Color::Black);
    auto ram = GammaInvariants::ramified(HalfInt::halves(1));
    auto split = GammaInvariants::split(0);
    // Cases (i)-(iii) of the statement: hyperbolic, mixed, same-field pairs.
    CHECK(orbit_count(EtaleClass::gl2xgl2(split, split, false)) == 1);
    CHECK(orbit_count(EtaleClass::gl2xgl2(split, unram, false)) == 1);
    CHECK(orbit_count(EtaleClass::gl2xgl2(unram, unram, true)) == 1);
    CHECK(orbit_count(EtaleClass::gl2xgl2(ram, ram, true)) == 1);
    // Distinct quadratic fields: two rational orbits.
    CHECK(orbit_count(EtaleClass::gl2xgl2(unram, ram, false)) == 2);
    CHECK(orbit_count(EtaleClass::gl2xgl2(ram, ram, false)) == 2);
}

TEST_CASE("invariants validation") {
    CHECK_THROWS_AS(GammaInvariants::ramified(HalfInt::whole(1)).validate(),
                    std::invalid_argument);
    GammaInvariants bad = GammaInvariants::split(1);
    bad.center_color = Color::Black;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_NOTHROW(GammaInvariants::unramified(2, Color::White).validate());
    // classify_gl2 leaves the center color unset: it is not a function of
    // the characteristic polynomial.
    CHECK(!classify_gl2(0, 1, 3).center_color.has_value());
}
