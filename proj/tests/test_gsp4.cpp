#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "qorb/gsp4.hpp"

using namespace qorb;

namespace {
QRat Q(long e) { return QRat::q_pow(e); }
const QRat one(1);
}  // namespace

TEST_CASE("type-1 region cells") {
    auto cells = region_cells(VertexType::T1, 0);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].k == 0);
    CHECK(cells[0].l == 0);
    CHECK(cells[0].kase == RegionCase::I);
    CHECK(cells[0].parabolic == ParabolicKind::Full);
    CHECK(cells[0].d_lambda == 0);

    for (long n = 0; n <= 10; ++n) {
        long ci = 0, cii = 0, ciii = 0, klingen = 0, siegel = 0;
        for (const auto& cell : region_cells(VertexType::T1, n)) {
            CHECK(cell.k >= 0);
            CHECK(cell.k <= n);
            CHECK(cell.l >= 0);
            CHECK(cell.l <= n);
            switch (cell.kase) {
                case RegionCase::I: ++ci; break;
                case RegionCase::II: ++cii; break;
                case RegionCase::III: ++ciii; break;
            }
            if (cell.parabolic == ParabolicKind::Klingen) ++klingen;
            if (cell.parabolic == ParabolicKind::Siegel) ++siegel;
        }
        CHECK(ci == (n + 2) * (n + 2) / 4);
        CHECK(cii == (n + 1) * (n + 1) / 4);
        CHECK(ciii == n * (n + 1) / 2);
        CHECK(klingen == n);  // l = 0, k = 1..n
        CHECK(siegel == n);   // k = 0, l = 1..n
    }
}

TEST_CASE("type-1 dimensions split by case") {
    for (long n = 0; n <= 6; ++n)
        for (const auto& cell : region_cells(VertexType::T1, n)) {
            long want = 0;
            switch (cell.kase) {
                case RegionCase::I: want = 3 * cell.l + 4 * cell.k; break;
                case RegionCase::II: want = 2 * cell.l + 2 * cell.k + n; break;
                case RegionCase::III: want = cell.l + cell.k + 2 * n; break;
            }
            CHECK(cell.d_lambda == want);
        }
    CHECK(cell_dimension(VertexType::T1, 0, 0, 5) == 0);
}

TEST_CASE("type-3 region cells") {
    auto cells = region_cells(VertexType::T3, 1);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].k == 0);
    CHECK(cells[0].l == 0);
    CHECK(cells[0].d_lambda == 2);
    CHECK(cells[0].parabolic == ParabolicKind::BxGL2);
    CHECK(region_cells(VertexType::T3, 0).empty());

    for (long n = 1; n <= 6; ++n)
        for (const auto& cell : region_cells(VertexType::T3, n)) {
            CHECK(cell.l >= 0);
            CHECK(cell.l <= n - 1);
            CHECK(2 * cell.k >= -cell.l);
            CHECK(2 * cell.k <= n - cell.l);
            CHECK((cell.parabolic == ParabolicKind::BxGL2) ==
                  (cell.l + 2 * cell.k == 0));
        }
}

TEST_CASE("type-4 region cells at depth 0") {
    auto cells = region_cells(VertexType::T4, 0);
    REQUIRE(cells.size() == 4);
    std::map<std::pair<long, long>, RegionCase> expect = {
        {{0, 0}, RegionCase::I},
        {{0, -1}, RegionCase::I},
        {{1, -1}, RegionCase::II},
        {{1, -2}, RegionCase::III},
    };
    for (const auto& cell : cells) {
        auto it = expect.find({cell.k, cell.l});
        REQUIRE(it != expect.end());
        CHECK(cell.kase == it->second);
        CHECK((cell.parabolic == ParabolicKind::GL2xGL1) == (cell.k == 0));
    }
}

TEST_CASE("point counts") {
    QRat sp4 = Q(4) * (Q(2) - 1) * (Q(4) - 1);
    CHECK(cell_point_count(VertexType::T1, RegionCase::I) == sp4);
    CHECK(cell_point_count(VertexType::T1, RegionCase::II) ==
          (Q(1) + 1) * (Q(1) + 1) * Q(4) * (Q(2) - 1) * (Q(1) - 1));
    CHECK(cell_point_count(VertexType::T3, RegionCase::I) ==
          Q(2) * (Q(2) - 1) * (Q(2) - 1));
    CHECK(cell_point_count(VertexType::T4, RegionCase::I) ==
          Q(1) * (Q(1) + 1) * (Q(1) - 1) * (Q(1) - 1));
    CHECK(cell_point_count(VertexType::T4, RegionCase::II) ==
          QRat(2) * Q(1) * (Q(1) - 1) * (Q(1) - 1));
}

TEST_CASE("orbital integrals agree across evaluation paths where they should") {
    QRat sp4 = Q(4) * (Q(2) - 1) * (Q(4) - 1);
    CHECK(orbital_closed_form(VertexType::T1, 0) == sp4);
    CHECK(orbital_region_sum(VertexType::T1, 0) == sp4);
    CHECK(orbital_closed_form(VertexType::T3, 1) ==
          Q(4) * (Q(2) - 1) * (Q(2) - 1));
    CHECK(orbital_region_sum(VertexType::T3, 1) ==
          Q(4) * (Q(2) - 1) * (Q(2) - 1));
    for (long n = 0; n <= 6; ++n) {
        // Fully factored form of the type-3 value.
        QRat want = Q(4) * (Q(1) + 1) / (one + Q(1) + Q(2)) * (Q(n) - 1) *
                    (Q(n + 1) - 1) * (one + Q(n) + Q(n + 1));
        CHECK(orbital_closed_form(VertexType::T3, n) == want);
        CHECK(orbital_region_sum(VertexType::T3, n) == want);
    }
}

TEST_CASE("type-3 comparison") {
    CHECK_THROWS_AS(type3_comparison(0), std::domain_error);
    QRat want1 = Q(4) * (Q(2) - 1) * (Q(1) - 1) / QRat(2);
    CHECK(type3_comparison(1) == want1);
    for (long n = 1; n <= 6; ++n) {
        CHECK(type3_comparison(n) * type3_distinguished_orbital(n) ==
              orbital_closed_form(VertexType::T3, n));
        QRat corollary = type3_comparison_normalized(n) * (Q(2) - 1) * (Q(1) - 1) *
                         Q(4) / (QRat(2) * (one + Q(1) + Q(2)));
        CHECK(type3_comparison(n) == corollary);
    }
}

TEST_CASE("type-4 discrepancy is surfaced, not hidden") {
    // Region enumeration at n = 0: two case-(i) cells of dimension 0 and two
    // case-(ii)/(iii) cells of dimension 1.
    QRat region = QRat(2) * Q(1) * (Q(1) + 1) * (Q(1) - 1) * (Q(1) - 1) +
                  QRat(4) * Q(2) * (Q(1) - 1) * (Q(1) - 1);
    CHECK(orbital_region_sum(VertexType::T4, 0) == region);
    // The closed form evaluates to 2q(q-1)(3q+1) at n = 0, differing from
    // the enumeration by a factor of (q-1); the report carries the residual.
    QRat closed = QRat(2) * Q(1) * (Q(1) - 1) * (QRat(3) * Q(1) + 1);
    CHECK(orbital_closed_form(VertexType::T4, 0) == closed);
    auto report = discrepancy_report(VertexType::T4, 2);
    REQUIRE(report.size() == 3);
    CHECK(report[0].residual == closed - region);
    CHECK(!report[0].residual.is_zero());
    // Deterministic across runs.
    auto again = discrepancy_report(VertexType::T4, 2);
    for (size_t i = 0; i < report.size(); ++i)
        CHECK(report[i].residual == again[i].residual);
}

TEST_CASE("type-1 residuals are archived as canonical values") {
    auto report = discrepancy_report(VertexType::T1, 3);
    REQUIRE(report.size() == 4);
    for (const auto& d : report) {
        std::string s = d.residual.str();
        CHECK(QRat::parse(s) == d.residual);
    }
}

TEST_CASE("dimension formulas stay nonnegative and monotone") {
    for (auto vt : {VertexType::T1, VertexType::T3, VertexType::T4})
        for (long n = 0; n <= 5; ++n)
            for (const auto& cell : region_cells(vt, n)) {
                CHECK(cell.d_lambda >= 0);
                CHECK(cell_dimension(vt, cell.k, cell.l, n + 1) >= cell.d_lambda);
            }
}
