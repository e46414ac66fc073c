// SPDX-License-Identifier: Apache-2.0
#include "combwalks/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace combwalks {

SparsePolynomial SparsePolynomial::constant(Rational c) {
    SparsePolynomial p;
    if (!c.is_zero()) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
}

SparsePolynomial SparsePolynomial::variable(int step) {
    if (step <= 0 || step % 2 != 0)
        throw std::invalid_argument("polynomial variables are positive even steps");
    SparsePolynomial p;
    p.terms_.emplace(Monomial{{step, 1u}}, Rational(1));
    return p;
}

std::set<int> SparsePolynomial::variables() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [step, e] : m) out.insert(step);
    return out;
}

Rational SparsePolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

namespace {

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
        if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
            out.push_back(a[ia++]);
        } else if (ia == a.size() || b[ib].first < a[ia].first) {
            out.push_back(b[ib++]);
        } else {
            out.emplace_back(a[ia].first, a[ia].second + b[ib].second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(monomial_product(ma, mb), ca * cb);
    return out;
}

SparsePolynomial SparsePolynomial::scaled(const Rational& c) const {
    SparsePolynomial out;
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

std::string SparsePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool coeff_is_one = (a == Rational(1));
        if (!coeff_is_one || m.empty()) os << a.str();
        bool need_space = !coeff_is_one && !m.empty();
        for (const auto& [step, e] : m) {
            if (need_space) os << " ";
            need_space = true;
            os << "V(" << step << ")";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

Rational poly_eval(const SparsePolynomial& p, const PotentialAssignment& a) {
    Rational total(0);
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (const auto& [step, e] : m) {
            if (!a.has(step))
                throw std::invalid_argument("unassigned variable V(" + std::to_string(step) + ")");
            term *= a.value(step).pow(e);
        }
        total += term;
    }
    return total;
}

Rational proportionality_constant(const SparsePolynomial& p, const SparsePolynomial& q) {
    if (q.is_zero()) throw std::domain_error("zero divisor");
    const auto& [m0, q0] = *q.terms().begin();
    Rational c = p.coefficient(m0) / q0;
    if (p != q.scaled(c)) throw std::domain_error("not proportional");
    return c;
}

long weighted_degree(const Monomial& m) {
    long d = 0;
    for (const auto& [step, e] : m) d += (step / 2) * long(e);
    return d;
}

}  // namespace combwalks
