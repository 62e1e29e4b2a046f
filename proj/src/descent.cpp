#include "qorb/descent.hpp"

#include <cmath>
#include <stdexcept>

namespace qorb {

mpq_class quadratic_resultant(const mpq_class& a1, const mpq_class& a0,
                              const mpq_class& b1, const mpq_class& b0) {
    // Res(f, g) = prod f(beta_j) with g's root data expressed through b0, b1.
    mpq_class da = a1 - b1, dc = a0 - b0;
    return da * da * b0 - da * dc * b1 + dc * dc;
}

mpq_class weyl_disc_pair_eigen(const mpq_class& t1, const mpq_class& t2,
                               const mpq_class& lambda) {
    if (t1 == 0 || t2 == 0 || lambda == 0)
        throw std::invalid_argument("eigenvalues and lambda must be nonzero");
    if (t1 == t2) throw std::invalid_argument("non-regular: t1 = t2");
    if (lambda == t1 * t2) throw std::invalid_argument("non-regular: lambda = t1 t2");
    mpq_class d = t1 - t2, e = lambda - t1 * t2;
    return d * d * e * e / (lambda * t1 * t1 * t2 * t2);
}

mpq_class weyl_disc_pair_traces(const mpq_class& trace1, const mpq_class& trace2,
                                const mpq_class& lambda) {
    if (lambda == 0) throw std::invalid_argument("lambda must be nonzero");
    mpq_class res = quadratic_resultant(-trace1, lambda, -trace2, lambda);
    if (res == 0)
        throw std::invalid_argument("non-regular: characteristic polynomials share a root");
    return res / (lambda * lambda);
}

WeylDiscMany weyl_disc_many(const std::vector<mpz_class>& traces, const mpz_class& q_size,
                            DiscNormalization norm) {
    size_t n = traces.size();
    if (n < 2) throw std::invalid_argument("need at least two factors");
    if (q_size == 0) throw std::invalid_argument("q_size must be nonzero");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (traces[i] == traces[j])
                throw std::invalid_argument("repeated characteristic polynomial");
    mpq_class lambda(q_size);
    mpq_class acc = 1;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            mpq_class res;
            if (norm == DiscNormalization::Group) {
                res = quadratic_resultant(mpq_class(-traces[i]), lambda,
                                          mpq_class(-traces[j]), lambda) /
                      (lambda * lambda);
            } else {
                // Lie algebra: the inputs are the distinguished eigenvalues
                // t_i themselves (the other one is lambda - t_i), and the
                // pair factor is (t_i - t_j)^2 (lambda - t_i - t_j)^2, which
                // is Res of the two characteristic polynomials directly.
                mpq_class ti(traces[i]), tj(traces[j]);
                mpq_class di = ti - tj, ei = lambda - ti - tj;
                res = di * di * ei * ei;
            }
            if (res == 0) throw std::invalid_argument("non-regular factor pair");
            acc *= res;
        }
    }
    WeylDiscMany out;
    out.value = acc;
    out.abs_value = acc < 0 ? mpq_class(-acc) : acc;
    return out;
}

long rational_valuation(const mpq_class& x, const mpz_class& p) {
    if (x == 0) throw std::invalid_argument("valuation of zero");
    auto val_z = [&p](mpz_class v) {
        long count = 0;
        mpz_class quo, rem;
        for (;;) {
            mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
            if (rem != 0) break;
            v = quo;
            ++count;
        }
        return count;
    };
    return val_z(x.get_num()) - val_z(x.get_den());
}

QRat QPower::squared() const {
    mpq_class doubled = 2 * exponent;
    doubled.canonicalize();
    if (doubled.get_den() != 1)
        throw std::domain_error("squared q-power still has fractional exponent");
    return QRat::q_pow(doubled.get_num().get_si());
}

QPower special_descent_factor(long n) {
    if (n < 2) throw std::invalid_argument("special descent needs n >= 2");
    mpq_class e(-n * (n - 1), 4);
    e.canonicalize();
    return QPower{e};
}

long levi_ratio_exponent(const std::vector<long>& cartan_word) {
    if (cartan_word.size() < 2)
        throw std::invalid_argument("Cartan word needs length >= 2");
    long lambda = cartan_word[0];
    long total = 0;
    for (size_t i = 0; i < cartan_word.size(); ++i)
        for (size_t j = i + 1; j < cartan_word.size(); ++j)
            total += 3 * cartan_word[i] - cartan_word[j] - lambda;
    return total;
}

mpq_class ext_count(const FrobeniusPair& pair) {
    if (pair.t1 == pair.t2)
        throw std::invalid_argument("isogenous factors: equal Frobenius traces");
    mpq_class lambda(pair.q_size);
    mpq_class res = quadratic_resultant(mpq_class(-pair.t1), lambda,
                                        mpq_class(-pair.t2), lambda);
    return res / lambda;
}

IsogenyRatio isogeny_ratio(const FrobeniusPair& pair) {
    IsogenyRatio out;
    out.ratio_sq = ext_count(pair) / mpq_class(pair.q_size);
    out.approx = std::sqrt(out.ratio_sq.get_d());
    return out;
}

IsogenyRatio isogeny_ratio_many(const std::vector<mpz_class>& traces, const mpz_class& p) {
    long n = static_cast<long>(traces.size());
    WeylDiscMany d = weyl_disc_many(traces, p, DiscNormalization::Group);
    mpz_class denom;
    mpz_pow_ui(denom.get_mpz_t(), p.get_mpz_t(), n * (n - 1) / 2);
    IsogenyRatio out;
    out.ratio_sq = d.abs_value / mpq_class(denom);
    out.approx = std::sqrt(out.ratio_sq.get_d());
    return out;
}

}  // namespace qorb
