#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qorb/halfint.hpp"

namespace qorb {

// Integer-coefficient polynomial in the symbol q, dense storage in
// ascending exponent order. Coefficients are arbitrary-precision: region
// sums over Cartan cells reach degree ~30 with large coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long c);               // constant
    Poly(const mpz_class& c);   // constant
    static Poly monomial(const mpz_class& coeff, int exp);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(int i) const;  // 0 outside range
    const mpz_class& leading() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Euclidean division over Q; requires exact results to stay integral,
    // which holds everywhere we divide (denominators are canonical divisors).
    static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);

    mpz_class content() const;  // gcd of coefficients, 0 for the zero poly
    Poly primitive_part() const;
    static Poly gcd(const Poly& a, const Poly& b);  // primitive, positive leading coeff

    mpq_class eval(const mpq_class& x) const;

    std::string str() const;  // descending sparse form, e.g. "q^4-1"

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Exact rational function in q over the rationals, kept in canonical form:
// numerator and denominator are integer polynomials with no common factor
// (polynomial or content), and the denominator has positive leading
// coefficient. Equality is structural.
class QRat {
public:
    QRat() : num_(0), den_(1) {}
    QRat(long n) : num_(n), den_(1) {}
    QRat(const mpz_class& n) : num_(n), den_(1) {}
    QRat(const mpq_class& r);
    QRat(Poly num, Poly den);  // normalizes; throws on zero denominator

    static QRat q();                      // the symbol itself
    static QRat q_pow(long e);            // q^e, Laurent exponents allowed
    static QRat q_pow(HalfInt e);         // asserts e is an integer
    static QRat monomial(const mpq_class& coeff, long exp);

    // Sum of coeff * q^exp terms; negative exponents are cleared into the
    // denominator.
    static QRat from_terms(std::initializer_list<std::pair<mpq_class, long>> terms);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);  // throws on division by zero
    friend QRat operator-(const QRat& a);
    QRat& operator+=(const QRat& b) { return *this = *this + b; }
    QRat& operator-=(const QRat& b) { return *this = *this - b; }
    QRat& operator*=(const QRat& b) { return *this = *this * b; }
    QRat& operator/=(const QRat& b) { return *this = *this / b; }
    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    QRat pow(long e) const;  // negative e inverts; throws on 0^negative

    // Exact value at q = q0; throws if q0 is a pole.
    mpq_class eval_at(const mpq_class& q0) const;

    // Fixed serialization grammar "(<int-poly>)/(<int-poly>)".
    std::string str() const;
    static QRat parse(const std::string& s);

    // All coefficients of the expanded polynomial are nonnegative integers
    // (meaningful for point counts).
    bool is_nonneg_int_polynomial() const;

private:
    void normalize();
    Poly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const QRat& f);

}  // namespace qorb
