// SPDX-License-Identifier: Apache-2.0
#include "combwalks/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace combwalks {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(num, den);
    canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(num, den);
    canonicalize();
}

namespace {

// strict base-10 integer: optional leading '-', then digits only (GMP's own
// reader skips whitespace, which is too lax for round-trip guarantees)
bool integer_token(const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "" : s.substr(slash + 1);
    if (!integer_token(num) || (slash != std::string::npos && !integer_token(den)))
        throw std::invalid_argument("malformed rational literal: " + s);
    if (slash == std::string::npos) {
        Rational r;
        r.v_ = mpq_class(mpz_class(num, 10));
        return r;
    }
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in literal: " + s);
    return Rational(mpz_class(num, 10), d);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    Rational r;
    r.v_ = mpq_class(n, d);  // already canonical when the base is
    return r;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

double Rational::log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, v_.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, v_.get_den().get_mpz_t());
    return (std::log2(std::fabs(mn)) + double(en)) - (std::log2(md) + double(ed));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace combwalks
