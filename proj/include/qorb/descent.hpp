#pragma once

#include <gmpxx.h>

#include <vector>

#include "qorb/qrat.hpp"

namespace qorb {

// Parabolic-descent comparison factors: Weyl discriminants via resultants,
// modular-character ratios, Milne's Ext count for pairs of elliptic curves,
// and the isogeny-ratio heuristic. Everything is exact; floating point only
// appears in test oracles.

// Frobenius data of an ordinary abelian variety factor: trace and the base
// field size (the similitude lambda). The characteristic polynomial is
// x^2 - trace x + q_size.
struct FrobeniusPair {
    mpz_class t1, t2;
    mpz_class q_size;
    bool weil_admissible() const {  // |T_i| <= 2 sqrt(q); a warning, not an error
        return t1 * t1 <= 4 * q_size && t2 * t2 <= 4 * q_size;
    }
};

// Resultant of the monic quadratics x^2 + a1 x + a0 and x^2 + b1 x + b0.
mpq_class quadratic_resultant(const mpq_class& a1, const mpq_class& a0,
                              const mpq_class& b1, const mpq_class& b0);

// D(gamma) for a pair with rational eigenvalues t_i (second eigenvalues
// lambda/t_i): (t1-t2)^2 (lambda-t1 t2)^2 / (lambda t1^2 t2^2).
// Throws when a factor vanishes (non-regular element).
mpq_class weyl_disc_pair_eigen(const mpq_class& t1, const mpq_class& t2,
                               const mpq_class& lambda);

// Same discriminant from the two traces: Res(f1, f2)/lambda^2 with
// f_i = x^2 - T_i x + lambda. Agrees with the eigenvalue form and stays
// rational when the eigenvalues are irrational.
mpq_class weyl_disc_pair_traces(const mpq_class& trace1, const mpq_class& trace2,
                                const mpq_class& lambda);

// Which root normalization a discriminant uses: the group D(gamma) runs over
// the short roots of GSp_{2n} (factors 1 - alpha(gamma)); the Lie-algebra
// D(X) uses differences t_i - t_j and lambda - t_i - t_j.
enum class DiscNormalization { Group, LieAlgebra };

struct WeylDiscMany {
    mpq_class value;      // exact D(gamma) (or D(X))
    mpq_class abs_value;  // |D|, the archimedean datum for ordinary factors
};

// n-factor discriminant from Frobenius traces over F_{q_size}:
//   Group:      prod_{i<j} Res(f_i, f_j) / q_size^{n(n-1)}
//   LieAlgebra: prod_{i<j} Res(h_i, h_j), h_i = x^2 - lambda x + c_i with
//               eigenvalues t_i and lambda - t_i (traces given per factor).
// Throws on repeated characteristic polynomials.
WeylDiscMany weyl_disc_many(const std::vector<mpz_class>& traces, const mpz_class& q_size,
                            DiscNormalization norm = DiscNormalization::Group);

// Valuation of a nonzero rational at a prime.
long rational_valuation(const mpq_class& x, const mpz_class& p);

// A power q^(num/den) of q; quarter- and half-powers fall outside QRat, so
// they are carried as an exact exponent.
struct QPower {
    mpq_class exponent;
    // q^(2 exponent) as a QRat; the exponent must make that integral.
    QRat squared() const;
};

// |delta ratio|^{1/2} = q^{-n(n-1)/4} for the special coset
// a = diag(pi,1) ^ (+) n.
QPower special_descent_factor(long n);

// Total pi-exponent sum_{i<j}(3 a_i - a_j - lambda), lambda = a_1, of the
// modular-character ratio attached to a Cartan word.
long levi_ratio_exponent(const std::vector<long>& cartan_word);

// |Ext^1(E_1, E_2)| = Res(f_1, f_2)/q for nonisogenous ordinary curves.
// Throws when the traces are equal.
mpq_class ext_count(const FrobeniusPair& pair);

struct IsogenyRatio {
    mpq_class ratio_sq;  // exact square of the heuristic ratio
    double approx;       // numeric square root
};

// Heuristic moduli ratio for a pair: ratio^2 = ext_count / p.
IsogenyRatio isogeny_ratio(const FrobeniusPair& pair);

// General-n variant: ratio^2 = |D(gamma)| p^{-n(n-1)/2}.
IsogenyRatio isogeny_ratio_many(const std::vector<mpz_class>& traces, const mpz_class& p);

}  // namespace qorb
