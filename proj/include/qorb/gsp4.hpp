#pragma once

#include <vector>

#include "qorb/qrat.hpp"

namespace qorb {

// Equivalued elliptic orbital integrals on the Lie algebra of GSp4 at depth
// n, for the three vertex types that carry equivalued elements. Each value
// is computed two independent ways: a closed form, and a direct sum over
// Cartan cells lambda = (k, l) weighted by fiber dimension and reductive-
// quotient point count. The two paths share no code; their residuals are
// first-class outputs.
//
// Center-quotient convention: point counts reduce through the isogeny with
// Gm x G^der, so |Z\P| carries 1/(q-1) and not 1/(2(q-1)); the alternative
// choice rescales every value by the single constant 2.

enum class VertexType { T1, T3, T4 };

enum class RegionCase { I, II, III };

enum class ParabolicKind {
    Full,      // T1, lambda = (0,0)
    Klingen,   // T1, l = 0, k > 0
    Siegel,    // T1, k = 0, l > 0
    Borel,     // T1, k, l > 0
    BxGL2,     // T3, l + 2k = 0
    BxB,       // T3 otherwise
    GL2xGL1,   // T4, k = 0
    BorelT4    // T4, k > 0
};

struct RegionCell {
    long k = 0, l = 0;
    RegionCase kase = RegionCase::I;
    ParabolicKind parabolic = ParabolicKind::Full;
    long d_lambda = 0;
    QRat springer_count;
};

// The integer points of the Cartan region for the vertex type at depth n,
// with case tags, parabolic kinds, fiber dimensions and point counts filled
// in. Vertex type 2 carries no equivalued elements and is rejected.
std::vector<RegionCell> region_cells(VertexType vt, long n);

long cell_dimension(VertexType vt, long k, long l, long n);
QRat cell_point_count(VertexType vt, RegionCase kase);

// Direct evaluation: sum over cells of q^{d_lambda} |S_lambda|.
QRat orbital_region_sum(VertexType vt, long n);

// The closed-form expression for the vertex type.
QRat orbital_closed_form(VertexType vt, long n);

// Partial sum over cells of q^{d_lambda} alone (T3 carries a closed form
// for it, used to validate the dimension formula).
QRat dimension_partial_sum(VertexType vt, long n);

// Ratio Orb_g / Orb_h for type 3, where Orb_h is the distinguished-subgroup
// integral 2 (q^n - 1)(q^{n+1} - 1)/(q-1)^2. Throws at n = 0 where Orb_h
// vanishes.
QRat type3_comparison(long n);
QRat type3_distinguished_orbital(long n);
// The comparison factor under the rescaled measure: 1 + q^n + q^{n+1}.
QRat type3_comparison_normalized(long n);

struct Discrepancy {
    long n;
    QRat residual;  // closed form minus region sum, canonical
};

// Residuals for n = 0..n_max. Zero residual certifies agreement of the two
// evaluation paths; nonzero residuals are reported as-is.
std::vector<Discrepancy> discrepancy_report(VertexType vt, long n_max);

}  // namespace qorb
