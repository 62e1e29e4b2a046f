#pragma once

#include <string>
#include <vector>

#include "qorb/qrat.hpp"

namespace qorb::verify {

struct Check {
    std::string name;
    bool pass = false;
    long cases = 0;        // number of configurations exercised
    std::string detail;    // first failure, or archived artifacts
};

struct Report {
    std::vector<Check> checks;
    bool all_pass() const;
    long total_cases() const;
};

// Every closed-form tree count against the BFS oracle, exact integer
// equality, for the given residue sizes and geometric reach bound.
Report appendix_a(const std::vector<int>& qs, int max_reach);

// SL2 identities: unipotent cross-check, stable formulas, germ
// reconstruction, and tree realization of the elliptic fixed sets.
Report sl2_suite(long max_n, long max_depth, const std::vector<int>& qs);

// Product/decomposition identities and germ reconstruction on the
// determinant-coupled product group.
Report gl2gl2_suite(long max_n, long max_depth);

// Region sums against closed forms: type-1 anchor at n = 0, type-3
// residuals for n <= max_n (asserted zero), comparison corollary, and the
// archived type-1/type-4 residual reports.
Report gsp4_regions(long max_n);

// Convergent relative integrals against the tree oracle, divergence of the
// shared-ray case, and symbolic branch agreement at case boundaries.
Report relative_suite(const std::vector<int>& qs, int max_reach);

// Resultant-vs-complex-roots oracle for the descent module.
Report descent_suite(int random_trials, unsigned seed);

}  // namespace qorb::verify
