// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "combwalks/assignment.hpp"
#include "combwalks/rational.hpp"

namespace combwalks {

// A monomial in the variables V(2k): sorted (step, exponent) pairs, step > 0
// even, exponent > 0. The empty monomial is the constant term.
using Monomial = std::vector<std::pair<int, unsigned>>;

// Orders monomials by their dense exponent vector (e_2, e_4, e_6, ...) read
// lexicographically; absent steps count as exponent 0.
struct MonomialDenseLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::size_t ia = 0, ib = 0;
        while (ia < a.size() && ib < b.size()) {
            if (a[ia].first != b[ib].first)
                // the side with a nonzero exponent at the smaller step is larger
                return b[ib].first < a[ia].first;
            if (a[ia].second != b[ib].second) return a[ia].second < b[ib].second;
            ++ia;
            ++ib;
        }
        return ib < b.size();
    }
};

// Sparse multivariate polynomial over the rationals in variables V(2k).
// Canonical: no zero coefficients are stored, so equality is map equality.
class SparsePolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDenseLexLess>;

    SparsePolynomial() = default;

    static SparsePolynomial constant(Rational c);
    // The variable V(step); step must be positive and even.
    static SparsePolynomial variable(int step);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    std::set<int> variables() const;

    Rational coefficient(const Monomial& m) const;

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    SparsePolynomial operator-() const;

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    SparsePolynomial scaled(const Rational& c) const;

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePolynomial& a, const SparsePolynomial& b) {
        return !(a == b);
    }

    // Human-readable form, terms in canonical order, e.g. "V(4) + 1/4 V(2)^2".
    std::string str() const;

    void add_term(const Monomial& m, const Rational& c);

private:
    TermMap terms_;
};

// Exact value of p at a. Every variable of p must be assigned in a;
// otherwise throws std::invalid_argument("unassigned variable V(s)").
Rational poly_eval(const SparsePolynomial& p, const PotentialAssignment& a);

// Returns c with p = c*q termwise. Throws std::domain_error("zero divisor")
// when q = 0, std::domain_error("not proportional") when no such c exists.
Rational proportionality_constant(const SparsePolynomial& p, const SparsePolynomial& q);

// Weighted degree sum_k k*c_k of a monomial prod V(2k)^{c_k}.
long weighted_degree(const Monomial& m);

}  // namespace combwalks
