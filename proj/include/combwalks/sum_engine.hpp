// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "combwalks/assignment.hpp"
#include "combwalks/polynomial.hpp"
#include "combwalks/rational.hpp"
#include "combwalks/walk.hpp"

namespace combwalks {

// Aggregate of a walk-sum computation. exact is true iff no floating
// arithmetic was involved and no infinite family was cut off.
struct SumResult {
    std::variant<Rational, std::complex<double>, SparsePolynomial> value;
    bool exact = true;
    mpz_class walk_count = 0;
    bool truncated = false;
    std::optional<Truncation> truncation;

    const Rational& rational() const { return std::get<Rational>(value); }
};

struct EngineOptions {
    // The single-step walk (one step of size 2n) is part of every class by
    // default; excluding it is a sensitivity toggle.
    bool include_single_step = true;
};

// --- scalar hooks for the generic dynamic programs ---

inline Rational vertex_div(const Rational& x, long d) { return x / Rational(d); }
inline SparsePolynomial vertex_div(const SparsePolynomial& p, long d) {
    return p.scaled(Rational(1, d));
}
inline std::complex<double> vertex_div(const std::complex<double>& x, long d) {
    return x / double(d);
}
inline double vertex_div(double x, long d) { return x / double(d); }

// Plain accumulation for exact scalars, compensated (Kahan) for floats.
template <class S>
struct Accumulator {
    S total{};
    void add(const S& x) { total += x; }
    const S& result() const { return total; }
};

template <>
struct Accumulator<double> {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double result() const { return sum; }
};

template <>
struct Accumulator<std::complex<double>> {
    Accumulator<double> re, im;
    void add(const std::complex<double>& x) {
        re.add(x.real());
        im.add(x.imag());
    }
    std::complex<double> result() const { return {re.result(), im.result()}; }
};

template <class S>
S unit_value();
template <>
inline Rational unit_value<Rational>() { return Rational(1); }
template <>
inline SparsePolynomial unit_value<SparsePolynomial>() {
    return SparsePolynomial::constant(Rational(1));
}
template <>
inline double unit_value<double>() { return 1.0; }
template <>
inline std::complex<double> unit_value<std::complex<double>>() { return {1.0, 0.0}; }

// Core one-sided recurrence shared by the exact, symbolic and float sums
// over walks that move monotonically from start to target: A(start) = 1,
// A(j) = [sum_s w(s) A(j - s)] / (n^2 - j^2) over interior vertices, and the
// result collects arrivals at the target. Both directions reduce to this on
// the distance-traveled axis, since the vertex factors depend only on j^2.
// step_sizes are the |s| of the permitted one-sided steps; weight(size)
// yields the matching V value.
template <class S>
S monotone_walk_sum(int n, const std::vector<int>& step_sizes,
                    const std::function<S(int)>& weight, bool include_single_step) {
    // A indexed by half-distance i, vertex distance 2i from the start
    std::vector<S> a(std::size_t(n) + 1, S{});
    a[0] = unit_value<S>();
    for (int i = 1; i < n; ++i) {
        Accumulator<S> acc;
        for (int s : step_sizes) {
            int src = i - s / 2;
            if (src < 0) continue;
            acc.add(weight(s) * a[std::size_t(src)]);
        }
        long j = -long(n) + 2L * i;
        a[std::size_t(i)] = vertex_div(acc.result(), long(n) * n - j * j);
    }
    Accumulator<S> out;
    for (int s : step_sizes) {
        int src = n - s / 2;
        if (src < 0) continue;
        if (src == 0 && !include_single_step) continue;
        out.add(weight(s) * a[std::size_t(src)]);
    }
    return out.result();
}

// --- walk-sum operations ---

// Sum of h over an explicitly enumerated finite class; the ground truth.
SumResult sum_bruteforce(const WalkClass& c, const PotentialAssignment& V,
                         const EngineOptions& opts = {});

// Sum of h over the ascending positive-step class, by the one-sided
// recurrence; equals sum_bruteforce on that class.
SumResult sum_positive_dp(int n, const StepSet& F, const PotentialAssignment& V,
                          const EngineOptions& opts = {});

// The descending negative-step twin.
SumResult sum_negative_dp(int n, const StepSet& F, const PotentialAssignment& V,
                          const EngineOptions& opts = {});

// The walk-sum polynomial in variables V(2k): evaluating it at any V gives
// sum_positive_dp(n, F, V).
SparsePolynomial sum_polynomial(int n, const StepSet& F, const EngineOptions& opts = {});

// Sum of |h| over the ascending positive-step class (h1 > 0 there, so this
// is the same recurrence with weights |V|).
SumResult abs_sum_positive(int n, const StepSet& F, const PotentialAssignment& V,
                           const EngineOptions& opts = {});

// Sum of h1 over ascending walks with steps {-2R, +2S} and exactly kappa
// negative steps. Returns 0 on the divisibility obstruction S | (n + R kappa).
SumResult kappa_sum(int n, int R, int S, int kappa, const EngineOptions& opts = {});

// Sum of |h1| over the same class.
SumResult kappa_abs_sum(int n, int R, int S, int kappa, const EngineOptions& opts = {});

struct BetaResult {
    SumResult sum;
    Rational last_layer_increment;  // contribution of walks using exactly L steps
};

// Truncated two-sided series: all admissible walks with at most L steps whose
// vertices stay within |j| <= n + W. truncated=false only when the cut is
// provably immaterial (every surviving weighted walk fits the budget).
BetaResult beta_truncated_detailed(int n, const StepSet& F, const PotentialAssignment& V,
                                   int L, int W, Direction dir = Direction::ascending,
                                   const EngineOptions& opts = {});
SumResult beta_truncated(int n, const StepSet& F, const PotentialAssignment& V, int L, int W,
                         Direction dir = Direction::ascending, const EngineOptions& opts = {});

// Number of walks of the ascending positive-step class (independent of V).
mpz_class positive_walk_count(int n, const StepSet& F, const EngineOptions& opts = {});

// Float path used by the sampling scans.
std::complex<double> positive_sum_complex(int n, const StepSet& F, const ComplexAssignment& V,
                                          const EngineOptions& opts = {});
double positive_abs_sum_float(int n, const StepSet& F, const ComplexAssignment& V,
                              const EngineOptions& opts = {});

}  // namespace combwalks
