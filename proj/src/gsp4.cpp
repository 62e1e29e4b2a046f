#include "qorb/gsp4.hpp"

#include <algorithm>
#include <stdexcept>

namespace qorb {

namespace {
const QRat kOne(1);
QRat q_pow(long e) { return QRat::q_pow(e); }
QRat Q() { return QRat::q(); }

long min_cap(long x, long n) { return std::min(x, n); }

void require_type(VertexType vt) {
    (void)vt;  // T2 is unrepresentable in the enum; nothing to check here.
}
}  // namespace

long cell_dimension(VertexType vt, long k, long l, long n) {
    switch (vt) {
        case VertexType::T1:
            return k + l + min_cap(l + k, n) + min_cap(l + 2 * k, n);
        case VertexType::T3:
            return min_cap(l + 1, n) + min_cap(std::abs(k - 1), n) +
                   min_cap(std::abs(l + 2 * k), n) + min_cap(std::abs(l + k), n);
        case VertexType::T4:
            return min_cap(std::max(l, -l - 1), n) + std::min(k, n + 1) +
                   min_cap(std::max(l + 2 * k, -l - 2 * k - 1), n) +
                   min_cap(std::max(l + k, -l - k - 1), n);
    }
    throw std::logic_error("unreachable");
}

QRat cell_point_count(VertexType vt, RegionCase kase) {
    QRat q = Q();
    QRat q2m1 = q * q - kOne;
    switch (vt) {
        case VertexType::T1:
            switch (kase) {
                case RegionCase::I:  // |Sp4(F_q)|
                    return q_pow(4) * q2m1 * (q_pow(4) - kOne);
                case RegionCase::II:  // (q+1)^2 q^4 (q^2-1)(q-1)
                    return (q + kOne) * (q + kOne) * q_pow(4) * q2m1 * (q - kOne);
                case RegionCase::III:  // (q+1)^2 q^4 (q-1)^2
                    return (q + kOne) * (q + kOne) * q_pow(4) * (q - kOne) * (q - kOne);
            }
            break;
        case VertexType::T3:
            // No condition cuts the fiber: every cell carries the full
            // reductive quotient modulo center.
            return q_pow(2) * q2m1 * q2m1;
        case VertexType::T4:
            if (kase == RegionCase::I) return q * (q + kOne) * (q - kOne) * (q - kOne);
            return QRat(2) * q * (q - kOne) * (q - kOne);
    }
    throw std::logic_error("unreachable");
}

std::vector<RegionCell> region_cells(VertexType vt, long n) {
    require_type(vt);
    if (n < 0) throw std::invalid_argument("depth n >= 0 required");
    std::vector<RegionCell> cells;
    auto push = [&](long k, long l, RegionCase kase, ParabolicKind pk) {
        RegionCell c;
        c.k = k;
        c.l = l;
        c.kase = kase;
        c.parabolic = pk;
        c.d_lambda = cell_dimension(vt, k, l, n);
        c.springer_count = cell_point_count(vt, kase);
        cells.push_back(std::move(c));
    };
    switch (vt) {
        case VertexType::T1:
            for (long k = 0; k <= n; ++k) {
                for (long l = 0; l <= n; ++l) {
                    RegionCase kase = 2 * k + l <= n  ? RegionCase::I
                                      : k + l <= n    ? RegionCase::II
                                                      : RegionCase::III;
                    ParabolicKind pk = (k == 0 && l == 0) ? ParabolicKind::Full
                                       : l == 0           ? ParabolicKind::Klingen
                                       : k == 0           ? ParabolicKind::Siegel
                                                          : ParabolicKind::Borel;
                    push(k, l, kase, pk);
                }
            }
            break;
        case VertexType::T3:
            for (long l = 0; l <= n - 1; ++l) {
                // -l <= 2k <= n - l over integers k.
                long kmin = -(l / 2);
                long kmax = (n - l) / 2;  // n - l >= 0 here
                for (long k = kmin; k <= kmax; ++k) {
                    if (2 * k < -l || 2 * k > n - l) continue;
                    push(k, l, RegionCase::I,
                         l + 2 * k == 0 ? ParabolicKind::BxGL2 : ParabolicKind::BxB);
                }
            }
            break;
        case VertexType::T4:
            // k >= 0 throughout; l ranges over the union of the three cases.
            for (long k = 0; k <= 2 * n + 1; ++k) {
                for (long l = -(n + 1 + k); l <= n; ++l) {
                    bool i = n - l - 2 * k >= 0 && n + 1 + l >= 0;
                    bool ii = n - l - 2 * k < 0 && n - l - k >= 0 && n + 1 + l >= 0;
                    bool iii = n + 1 + l < 0 && n + 1 + l + k >= 0 && n - l - 2 * k >= 0;
                    if (!i && !ii && !iii) continue;
                    RegionCase kase = i ? RegionCase::I : ii ? RegionCase::II : RegionCase::III;
                    push(k, l, kase,
                         k == 0 ? ParabolicKind::GL2xGL1 : ParabolicKind::BorelT4);
                }
            }
            break;
    }
    return cells;
}

QRat orbital_region_sum(VertexType vt, long n) {
    QRat sum;
    for (const auto& cell : region_cells(vt, n))
        sum += q_pow(cell.d_lambda) * cell.springer_count;
    return sum;
}

QRat dimension_partial_sum(VertexType vt, long n) {
    QRat sum;
    for (const auto& cell : region_cells(vt, n)) sum += q_pow(cell.d_lambda);
    return sum;
}

QRat orbital_closed_form(VertexType vt, long n) {
    if (n < 0) throw std::invalid_argument("depth n >= 0 required");
    QRat q = Q();
    switch (vt) {
        case VertexType::T1: {
            QRat cyc = kOne + q + q * q;  // 1 + q + q^2
            QRat prefactor = q_pow(4) * (q * q - kOne) / (q_pow(3) - kOne);
            QRat A = kOne;
            QRat B = n % 2 == 0 ? q * q * (QRat(2) - q) * cyc
                                : q * (kOne - q + QRat(2) * q * q - q_pow(3)) * cyc;
            QRat C1 = q * q * (q_pow(5) - QRat(4) * q * q - QRat(4) * q - QRat(3));
            QRat C2 = q * (q * q - kOne) * (q_pow(3) - kOne);
            QRat D = q * q * (kOne + q) * cyc;
            return prefactor *
                   (A + B * q_pow(2 * n) + (C1 + QRat(n) * C2) * q_pow(3 * n) +
                    D * q_pow(4 * n));
        }
        case VertexType::T3: {
            QRat cyc = kOne + q + q * q;
            QRat prefactor = q_pow(4) * (q + kOne) / cyc;
            QRat B = cyc;
            QRat C = q * (kOne + q);
            return prefactor * (kOne - B * q_pow(2 * n) + C * q_pow(3 * n));
        }
        case VertexType::T4: {
            QRat prefactor = QRat(2) * q / (q_pow(3) - kOne);
            QRat B = q * (q - QRat(2)) * (q * q + q + kOne);
            QRat C = q * q * (q_pow(3) - QRat(3) * q * q - QRat(4) * q - QRat(4));
            QRat D = QRat(2) * q_pow(3) * (kOne + q + q * q);
            return prefactor *
                   (kOne - B * q_pow(2 * n) + C * q_pow(3 * n) + D * q_pow(4 * n));
        }
    }
    throw std::logic_error("unreachable");
}

QRat type3_distinguished_orbital(long n) {
    QRat q = Q();
    return QRat(2) * (q_pow(n) - kOne) * (q_pow(n + 1) - kOne) /
           ((q - kOne) * (q - kOne));
}

QRat type3_comparison(long n) {
    if (n == 0)
        throw std::domain_error("type-3 comparison undefined at n = 0: Orb_h vanishes");
    return orbital_closed_form(VertexType::T3, n) / type3_distinguished_orbital(n);
}

QRat type3_comparison_normalized(long n) {
    QRat q = Q();
    return kOne + q_pow(n) + q_pow(n + 1);
}

std::vector<Discrepancy> discrepancy_report(VertexType vt, long n_max) {
    std::vector<Discrepancy> out;
    for (long n = 0; n <= n_max; ++n)
        out.push_back({n, orbital_closed_form(vt, n) - orbital_region_sum(vt, n)});
    return out;
}

}  // namespace qorb
