// SPDX-License-Identifier: Apache-2.0
#include "combwalks/identities.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "combwalks/walk.hpp"

namespace combwalks {
namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

// Sum over ascending integer tuples (i_1, ..., i_k) in [lo, hi] with
// consecutive gaps >= 2 of the product of term(i_s).
mpz_class gap_tuple_sum(long lo, long hi, int k, const std::function<mpz_class(long)>& term) {
    if (k == 0) return 1;
    mpz_class total = 0;
    for (long i = lo; i + 2L * (k - 1) <= hi; ++i)
        total += term(i) * gap_tuple_sum(i + 2, hi, k - 1, term);
    return total;
}

// Sum over strictly ascending tuples (j_1, ..., j_k) in [lo, hi].
mpz_class combination_sum(long lo, long hi, int k, const std::function<mpz_class(long)>& term) {
    if (k == 0) return 1;
    mpz_class total = 0;
    for (long j = lo; j + (k - 1) <= hi; ++j)
        total += term(j) * combination_sum(j + 1, hi, k - 1, term);
    return total;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::equal: return "equal";
        case Verdict::proportional: return "proportional";
        case Verdict::mismatch: return "mismatch";
    }
    return "?";
}

SparsePolynomial prop1_rhs(int n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    auto b = SparsePolynomial::variable(2);
    auto B = SparsePolynomial::variable(4);
    auto b2_over_4 = (b * b).scaled(Rational(1, 4));
    int m = n / 2;
    SparsePolynomial p = SparsePolynomial::constant(Rational(1));
    for (int j = 1; j <= m; ++j) {
        long odd = n % 2 ? 2L * j : 2L * j - 1;
        p = p * (b2_over_4 + B.scaled(Rational(odd * odd)));
    }
    Rational scale = Rational(1, 4).pow(unsigned(m));
    if (n % 2 == 0) return p.scaled(scale * Rational(4));  // 1/4^{m-1}
    return (p * b).scaled(-scale);                         // -b/4^m
}

Rational prop1_rhs(int n, const Rational& b, const Rational& B) {
    PotentialAssignment V;
    V.set(2, b);
    V.set(4, B);
    return poly_eval(prop1_rhs(n), V);
}

IdentityReport prop1_check(int n) {
    auto start = std::chrono::steady_clock::now();
    IdentityReport rep;
    rep.id = "prop1";
    rep.params = {{"n", std::to_string(n)}};
    SparsePolynomial lhs = sum_polynomial(n, StepSet::up_to(4));
    SparsePolynomial rhs = prop1_rhs(n);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    try {
        Rational c = proportionality_constant(lhs, rhs);
        if (c == Rational(1)) {
            rep.verdict = Verdict::equal;
        } else {
            rep.verdict = Verdict::proportional;
            rep.constant = c;
        }
    } catch (const std::domain_error&) {
        rep.verdict = Verdict::mismatch;
    }
    rep.ms = ms_since(start);
    return rep;
}

Rational prop1_constant_hypothesis(int n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), unsigned(n - 1));
    Rational c(mpz_class(1), fact * fact);
    return n % 2 ? -c : c;
}

std::pair<mpz_class, mpz_class> prop2_sides(int k, int m, Prop2Variant variant) {
    if (variant == Prop2Variant::a) {
        if (k < 1 || k > m) throw std::invalid_argument("variant a requires 1 <= k <= m");
        auto lterm = [m](long i) { return mpz_class(long(m) * m - i * i); };
        auto rterm = [](long j) { return mpz_class((2 * j - 1) * (2 * j - 1)); };
        return {gap_tuple_sum(-m + 1, m - 1, k, lterm), combination_sum(1, m, k, rterm)};
    }
    if (k < 1 || k > m - 1) throw std::invalid_argument("variant b requires 1 <= k <= m-1");
    long d = 2L * m - 1;
    auto lterm = [d](long i) { return mpz_class(d * d - (2 * i - 1) * (2 * i - 1)); };
    auto rterm = [](long j) { return mpz_class(16 * j * j); };
    return {gap_tuple_sum(-m + 2, m - 1, k, lterm), combination_sum(1, m - 1, k, rterm)};
}

IdentityReport prop2_check(int k, int m, Prop2Variant variant) {
    auto start = std::chrono::steady_clock::now();
    IdentityReport rep;
    rep.id = variant == Prop2Variant::a ? "prop2a" : "prop2b";
    rep.params = {{"k", std::to_string(k)}, {"m", std::to_string(m)}};
    auto [lhs, rhs] = prop2_sides(k, m, variant);
    rep.lhs = lhs.get_str();
    rep.rhs = rhs.get_str();
    rep.verdict = lhs == rhs ? Verdict::equal : Verdict::mismatch;
    rep.ms = ms_since(start);
    return rep;
}

namespace {

Rational draw_rational(std::mt19937_64& rng) {
    long num = long(rng() % 19) - 9;
    long den = 1 + long(rng() % 9);
    return Rational(num, den);
}

}  // namespace

std::vector<IdentityReport> dp_oracle_reports(int n_max, int kappa_n_max, int assignments,
                                              std::uint64_t seed) {
    std::vector<IdentityReport> out;
    std::mt19937_64 rng(seed);
    const std::vector<std::vector<int>> step_choices = {{2},    {4},    {6},      {2, 4},
                                                        {2, 6}, {4, 6}, {2, 4, 6}};
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& sel : step_choices) {
            auto start = std::chrono::steady_clock::now();
            StepSet F(sel);
            WalkClass c;
            c.n = n;
            c.step_set = F;
            c.sign_filter = SignFilter::positive_only;

            IdentityReport rep;
            rep.id = "dp-oracle-positive";
            std::string steps_text;
            for (int s : sel) steps_text += (steps_text.empty() ? "" : ",") + std::to_string(s);
            rep.params = {{"n", std::to_string(n)},
                          {"steps", steps_text},
                          {"assignments", std::to_string(assignments)}};
            rep.verdict = Verdict::equal;
            for (int a = 0; a < assignments; ++a) {
                PotentialAssignment V;
                for (int s : sel) V.set(s, draw_rational(rng));
                SumResult bf = sum_bruteforce(c, V);
                SumResult dp = sum_positive_dp(n, F, V);
                rep.lhs = bf.rational().str();
                rep.rhs = dp.rational().str();
                if (bf.rational() != dp.rational() || bf.walk_count != dp.walk_count) {
                    rep.verdict = Verdict::mismatch;
                    break;
                }
            }
            rep.ms = ms_since(start);
            out.push_back(std::move(rep));
        }
    }
    for (int n = 1; n <= kappa_n_max; ++n) {
        for (int R = 1; R <= 2; ++R) {
            for (int S = 1; S <= 2; ++S) {
                for (int kappa = 0; kappa <= 3; ++kappa) {
                    auto start = std::chrono::steady_clock::now();
                    WalkClass c;
                    c.n = n;
                    c.step_set = StepSet({-2 * R, 2 * S});
                    c.kappa = kappa;
                    auto walks = enumerate_walks(c);
                    Rational sum(0), abs_sum(0);
                    for (const auto& w : walks) {
                        Rational h = h1(w, n, Direction::ascending);
                        sum += h;
                        abs_sum += h.abs();
                    }
                    SumResult ks = kappa_sum(n, R, S, kappa);
                    SumResult ka = kappa_abs_sum(n, R, S, kappa);

                    IdentityReport rep;
                    rep.id = "dp-oracle-kappa";
                    rep.params = {{"n", std::to_string(n)},
                                  {"R", std::to_string(R)},
                                  {"S", std::to_string(S)},
                                  {"kappa", std::to_string(kappa)}};
                    rep.lhs = sum.str() + ";" + abs_sum.str() + ";" + std::to_string(walks.size());
                    rep.rhs = ks.rational().str() + ";" + ka.rational().str() + ";" +
                              ks.walk_count.get_str();
                    bool ok = sum == ks.rational() && abs_sum == ka.rational() &&
                              ks.walk_count == long(walks.size()) &&
                              ka.walk_count == long(walks.size());
                    rep.verdict = ok ? Verdict::equal : Verdict::mismatch;
                    rep.ms = ms_since(start);
                    out.push_back(std::move(rep));
                }
            }
        }
    }
    return out;
}

IdentityReport catalan_zero_check(int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    auto start = std::chrono::steady_clock::now();
    IdentityReport rep;
    rep.id = "catalan";
    rep.params = {{"m", std::to_string(m)}};
    Rational lhs = kappa_sum(2 * m + 1, 1, 2, 1).rational();
    rep.lhs = lhs.str();
    rep.rhs = "0";
    rep.verdict = lhs.is_zero() ? Verdict::equal : Verdict::mismatch;
    rep.ms = ms_since(start);
    return rep;
}

}  // namespace combwalks
