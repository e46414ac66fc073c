// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combwalks/polynomial.hpp"
#include "combwalks/rational.hpp"
#include "combwalks/sum_engine.hpp"

namespace combwalks {

enum class Verdict { equal, proportional, mismatch };
const char* to_string(Verdict v);

struct IdentityReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
    Verdict verdict = Verdict::mismatch;
    std::optional<Rational> constant;  // set when verdict == proportional
    double ms = 0.0;

    bool passed() const { return verdict != Verdict::mismatch; }
};

// Closed-form product in b = V(2), B = V(4):
//   even n = 2m:    (1/4^{m-1}) prod_{j=1..m} [b^2/4 + (2j-1)^2 B]
//   odd  n = 2m+1:  -(b/4^m)    prod_{j=1..m} [b^2/4 + (2j)^2 B]
SparsePolynomial prop1_rhs(int n);
Rational prop1_rhs(int n, const Rational& b, const Rational& B);

// Compares the walk-sum polynomial over positive steps of {2,4} against the
// closed form; the two sides agree up to a per-n constant, surfaced in the
// report. Verdict equal means the constant is exactly 1.
IdentityReport prop1_check(int n);

// Conjectured value of that constant: (-1)^n / ((n-1)!)^2.
Rational prop1_constant_hypothesis(int n);

enum class Prop2Variant { a, b };

// Exact integer sides of the two gap-constrained tuple identities:
//   a: sum over -m < i_1 < ... < i_k < m, gaps >= 2, of prod (m^2 - i_s^2)
//      vs. sum over 1 <= j_1 < ... < j_k <= m of prod (2 j_s - 1)^2
//   b: sum over -m+1 < i_1 < ... < i_k < m, gaps >= 2, of
//      prod ((2m-1)^2 - (2 i_s - 1)^2)
//      vs. sum over 1 <= j_1 < ... < j_k <= m-1 of prod (4 j_s)^2
std::pair<mpz_class, mpz_class> prop2_sides(int k, int m, Prop2Variant variant);
IdentityReport prop2_check(int k, int m, Prop2Variant variant);

// The one-negative-step class over {-2, +4} at odd n sums to exactly zero.
IdentityReport catalan_zero_check(int m);

// Engine-versus-enumeration equivalence sweep. One report per case:
// the one-sided recurrence against brute force for every n <= n_max and
// every nonempty F+ within {2,4,6} under `assignments` seeded rational V,
// and the layered kappa recurrence (signed and absolute) against
// enumeration for n <= kappa_n_max, R,S in {1,2}, kappa <= 3.
std::vector<IdentityReport> dp_oracle_reports(int n_max, int kappa_n_max, int assignments,
                                              std::uint64_t seed);

}  // namespace combwalks
