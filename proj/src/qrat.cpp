#include "qorb/qrat.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qorb {

namespace {
const mpz_class kZero = 0;
}

Poly::Poly(long c) {
    if (c != 0) c_.push_back(mpz_class(c));
}

Poly::Poly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

Poly Poly::monomial(const mpz_class& coeff, int exp) {
    Poly p;
    if (coeff == 0) return p;
    p.c_.assign(exp + 1, kZero);
    p.c_[exp] = coeff;
    return p;
}

const mpz_class& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const mpz_class& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), kZero);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), kZero);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    rem = a;
    quot = Poly();
    if (a.degree() < b.degree()) return;
    quot.c_.assign(a.degree() - b.degree() + 1, kZero);
    // Long division; every quotient we form in this codebase is exact over Z
    // because divisors come from canonical gcds, so each step divides evenly.
    for (int d = rem.degree(); d >= b.degree() && !rem.is_zero(); d = rem.degree()) {
        mpz_class q_coeff, check;
        mpz_fdiv_qr(q_coeff.get_mpz_t(), check.get_mpz_t(), rem.leading().get_mpz_t(),
                    b.leading().get_mpz_t());
        if (check != 0)
            throw std::domain_error("inexact polynomial division");
        int shift = d - b.degree();
        quot.c_[shift] = q_coeff;
        Poly term = Poly::monomial(q_coeff, shift) * b;
        rem = rem - term;
        if (rem.degree() == d) throw std::logic_error("division failed to reduce degree");
    }
    quot.trim();
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (leading() < 0) g = -g;
    Poly r = *this;
    for (auto& c : r.c_) c /= g;
    return r;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    // Primitive Euclidean algorithm with pseudo-remainders.
    Poly u = a.primitive_part();
    Poly v = b.primitive_part();
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        // Pseudo-remainder: lc(v)^(deg u - deg v + 1) * u mod v.
        mpz_class lc = v.leading();
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), u.degree() - v.degree() + 1);
        Poly scaled = Poly(scale) * u;
        Poly rem = scaled;
        while (!rem.is_zero() && rem.degree() >= v.degree()) {
            mpz_class q_coeff = rem.leading() / v.leading();
            // lc(v) divides rem's leading coeff by construction of scale.
            Poly term = Poly::monomial(q_coeff, rem.degree() - v.degree()) * v;
            Poly next = rem - term;
            if (!next.is_zero() && next.degree() >= rem.degree()) {
                // Leading coefficient was not divisible; rescale and retry.
                rem = Poly(v.leading()) * rem;
                continue;
            }
            rem = next;
        }
        u = v;
        v = rem.primitive_part();
    }
    return u.primitive_part();
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QRat::QRat(const mpq_class& r) : num_(r.get_num()), den_(r.get_den()) {}

QRat::QRat(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void QRat::normalize() {
    if (den_.is_zero()) throw std::domain_error("QRat with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0 || g.leading() != 1) {
        Poly q, r;
        Poly::divmod(num_, g, q, r);
        num_ = q;
        Poly::divmod(den_, g, q, r);
        den_ = q;
    }
    mpz_class cn = num_.content(), cd = den_.content();
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.leading() < 0) cg = -cg;
    if (cg != 1) {
        Poly q, r;
        Poly::divmod(num_, Poly(cg), q, r);
        num_ = q;
        Poly::divmod(den_, Poly(cg), q, r);
        den_ = q;
    }
}

QRat QRat::q() { return q_pow(1); }

QRat QRat::q_pow(long e) {
    if (e >= 0) return QRat(Poly::monomial(1, e), Poly(1));
    return QRat(Poly(1), Poly::monomial(1, -e));
}

QRat QRat::q_pow(HalfInt e) {
    if (!e.is_integer())
        throw std::domain_error("half-integer exponent of q cannot enter QRat");
    return q_pow(e.as_integer());
}

QRat QRat::monomial(const mpq_class& coeff, long exp) {
    return QRat(coeff) * q_pow(exp);
}

QRat QRat::from_terms(std::initializer_list<std::pair<mpq_class, long>> terms) {
    QRat acc;
    for (const auto& [c, e] : terms) acc += monomial(c, e);
    return acc;
}

QRat operator+(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator*(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
    if (b.is_zero()) throw std::domain_error("QRat division by zero");
    return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

QRat operator-(const QRat& a) { return QRat(-a.num_, a.den_); }

QRat QRat::pow(long e) const {
    if (e == 0) return QRat(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("0 raised to a negative power");
        return QRat(0);
    }
    QRat base = e > 0 ? *this : QRat(1) / *this;
    long k = e > 0 ? e : -e;
    QRat acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

mpq_class QRat::eval_at(const mpq_class& q0) const {
    mpq_class d = den_.eval(q0);
    if (d == 0) throw std::domain_error("QRat evaluated at a pole");
    return num_.eval(q0) / d;
}

std::string QRat::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

bool QRat::is_nonneg_int_polynomial() const {
    if (den_.degree() != 0 || den_.leading() != 1) return false;
    for (int i = 0; i <= num_.degree(); ++i)
        if (num_.coeff(i) < 0) return false;
    return true;
}

namespace {

// Parser for the fixed grammar "(<int-poly>)/(<int-poly>)" with <int-poly>
// a sparse sum of terms c, cq, q^e, cq^e. Whitespace is tolerated.
struct PolyParser {
    const std::string& s;
    size_t i = 0;

    explicit PolyParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw std::invalid_argument("QRat parse error: expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(i));
    }

    mpz_class integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("QRat parse error: expected digits");
        return mpz_class(s.substr(start, i - start));
    }

    Poly poly() {
        Poly acc;
        bool first = true;
        for (;;) {
            skip_ws();
            int sign = 1;
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                break;
            }
            skip_ws();
            mpz_class coeff = 1;
            bool have_coeff = false;
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff = integer();
                have_coeff = true;
            }
            int exp = 0;
            if (eat('q')) {
                exp = 1;
                if (eat('^')) {
                    mpz_class e = integer();
                    exp = static_cast<int>(e.get_si());
                }
            } else if (!have_coeff) {
                throw std::invalid_argument("QRat parse error: expected term");
            }
            acc = acc + Poly::monomial(sign * coeff, exp);
            first = false;
        }
        return acc;
    }
};

}  // namespace

QRat QRat::parse(const std::string& s) {
    PolyParser p(s);
    p.expect('(');
    Poly num = p.poly();
    p.expect(')');
    p.expect('/');
    p.expect('(');
    Poly den = p.poly();
    p.expect(')');
    p.skip_ws();
    if (p.i != s.size())
        throw std::invalid_argument("QRat parse error: trailing input in '" + s + "'");
    return QRat(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const QRat& f) { return os << f.str(); }

}  // namespace qorb
