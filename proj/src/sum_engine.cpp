// SPDX-License-Identifier: Apache-2.0
#include "combwalks/sum_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace combwalks {
namespace {

// Number of monotone admissible walks = number of compositions of 2n from
// the one-sided step sizes.
mpz_class monotone_walk_count(int n, const std::vector<int>& step_sizes,
                              bool include_single_step) {
    std::vector<mpz_class> c(std::size_t(n) + 1, 0);
    c[0] = 1;
    for (int i = 1; i < n; ++i)
        for (int s : step_sizes)
            if (i - s / 2 >= 0) c[std::size_t(i)] += c[std::size_t(i - s / 2)];
    mpz_class total = 0;
    for (int s : step_sizes) {
        int src = n - s / 2;
        if (src < 0) continue;
        if (src == 0 && !include_single_step) continue;
        total += c[std::size_t(src)];
    }
    return total;
}

std::vector<int> sizes_of(const std::vector<int>& signed_steps) {
    std::vector<int> sizes;
    sizes.reserve(signed_steps.size());
    for (int s : signed_steps) sizes.push_back(s < 0 ? -s : s);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

SumResult monotone_result(int n, const std::vector<int>& sizes,
                          const std::function<Rational(int)>& weight,
                          const EngineOptions& opts) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    SumResult r;
    if (sizes.empty()) {
        r.value = Rational(0);
        return r;
    }
    r.value = monotone_walk_sum<Rational>(n, sizes, weight, opts.include_single_step);
    r.walk_count = monotone_walk_count(n, sizes, opts.include_single_step);
    return r;
}

// Layered recurrence for walks over {-2R, +2S} with exactly kappa negative
// steps. After t steps of which l are negative the vertex is forced:
// j = -n - 2Rl + 2S(t - l), so the state is the pair (t, l) alone.
template <bool Abs>
Rational kappa_core(int n, int R, int S, int kappa, bool include_single_step,
                    mpz_class& count_out) {
    count_out = 0;
    long need = long(n) + long(R) * kappa;
    if (need % S != 0) return Rational(0);
    long q = need / S;
    long T = q + kappa;
    if (T == 1 && !include_single_step) return Rational(0);

    auto vertex = [&](long t, long l) { return -long(n) - 2L * R * l + 2L * S * (t - l); };

    std::vector<Rational> d(std::size_t(kappa) + 1);
    std::vector<mpz_class> c(std::size_t(kappa) + 1, 0);
    d[0] = Rational(1);
    c[0] = 1;
    Rational total(0);
    for (long t = 0; t < T; ++t) {
        std::vector<Rational> nd(std::size_t(kappa) + 1);
        std::vector<mpz_class> nc(std::size_t(kappa) + 1, 0);
        for (long l = 0; l <= std::min<long>(kappa, t); ++l) {
            if (c[std::size_t(l)] == 0) continue;
            for (int neg = 0; neg <= 1; ++neg) {
                long l2 = l + neg;
                if (l2 > kappa) continue;
                if ((t + 1) - l2 > q) continue;
                long j2 = vertex(t + 1, l2);
                if (t + 1 == T) {
                    // forced arrival at +n, no vertex factor
                    total += d[std::size_t(l)];
                    count_out += c[std::size_t(l)];
                    continue;
                }
                if (j2 == n || j2 == -n) continue;
                long den = long(n) * n - j2 * j2;
                if (Abs && den < 0) den = -den;
                nd[std::size_t(l2)] += d[std::size_t(l)] / Rational(den);
                nc[std::size_t(l2)] += c[std::size_t(l)];
            }
        }
        d = std::move(nd);
        c = std::move(nc);
    }
    return total;
}

// Whether a truncation budget (L, W) provably covers every walk of the
// untruncated family that can carry nonzero weight.
bool covers_family(const WalkClass& c, const PotentialAssignment* V) {
    if (!c.truncation) return true;
    int L = c.truncation->max_steps;
    int W = c.truncation->window;
    if (c.kappa) {
        auto [R, S] = c.kappa_step_pair();
        long need = long(c.n) + long(R) * *c.kappa;
        if (need % S != 0) return true;  // family already empty
        long T = need / S + *c.kappa;
        return L >= T && W >= 2L * R * *c.kappa;
    }
    // steps that can appear in a walk of nonzero weight
    std::vector<int> eff;
    for (int s : c.step_set.steps()) {
        if (V && V->value(s).is_zero()) continue;
        if (c.sign_filter == SignFilter::positive_only && s < 0) continue;
        if (c.sign_filter == SignFilter::negative_only && s > 0) continue;
        eff.push_back(s);
    }
    bool ascending = c.direction == Direction::ascending;
    int min_toward = 0;
    for (int s : eff) {
        bool toward = ascending ? s > 0 : s < 0;
        if (!toward) return false;  // a wrong-direction step keeps the family infinite
        int sz = s < 0 ? -s : s;
        if (min_toward == 0 || sz < min_toward) min_toward = sz;
    }
    if (min_toward == 0) return true;  // no walk carries weight
    return L >= (2 * c.n) / min_toward;
}

}  // namespace

SumResult sum_bruteforce(const WalkClass& c, const PotentialAssignment& V,
                         const EngineOptions& opts) {
    auto walks = enumerate_walks(c);
    Rational total(0);
    mpz_class count = 0;
    for (const auto& w : walks) {
        if (!opts.include_single_step && w.length() == 1) continue;
        total += h_weight(w, c.n, c.direction, V);
        count += 1;
    }
    SumResult r;
    r.value = total;
    r.walk_count = count;
    if (c.truncation) {
        bool covered = covers_family(c, &V);
        r.truncated = !covered;
        r.exact = covered;
        r.truncation = c.truncation;
    }
    return r;
}

SumResult sum_positive_dp(int n, const StepSet& F, const PotentialAssignment& V,
                          const EngineOptions& opts) {
    std::function<Rational(int)> w = [&](int s) { return V.value(s); };
    return monotone_result(n, F.positive_part(), w, opts);
}

SumResult sum_negative_dp(int n, const StepSet& F, const PotentialAssignment& V,
                          const EngineOptions& opts) {
    // On the distance axis the descending recurrence has the same vertex
    // factors; only the weight lookup flips sign.
    std::function<Rational(int)> w = [&](int s) { return V.value(-s); };
    return monotone_result(n, sizes_of(F.negative_part()), w, opts);
}

SparsePolynomial sum_polynomial(int n, const StepSet& F, const EngineOptions& opts) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    auto sizes = F.positive_part();
    if (sizes.empty()) return {};
    std::function<SparsePolynomial(int)> w = [](int s) { return SparsePolynomial::variable(s); };
    return monotone_walk_sum<SparsePolynomial>(n, sizes, w, opts.include_single_step);
}

SumResult abs_sum_positive(int n, const StepSet& F, const PotentialAssignment& V,
                           const EngineOptions& opts) {
    // h1 > 0 on monotone walks, so |h| factors through |V|.
    std::function<Rational(int)> w = [&](int s) { return V.value(s).abs(); };
    return monotone_result(n, F.positive_part(), w, opts);
}

namespace {

void check_kappa_args(int n, int R, int S, int kappa) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (R < 1 || S < 1) throw std::invalid_argument("step half-sizes must be >= 1");
    if (kappa < 0) throw std::invalid_argument("negative-step count must be >= 0");
}

}  // namespace

SumResult kappa_sum(int n, int R, int S, int kappa, const EngineOptions& opts) {
    check_kappa_args(n, R, S, kappa);
    SumResult r;
    mpz_class count;
    r.value = kappa_core<false>(n, R, S, kappa, opts.include_single_step, count);
    r.walk_count = count;
    return r;
}

SumResult kappa_abs_sum(int n, int R, int S, int kappa, const EngineOptions& opts) {
    check_kappa_args(n, R, S, kappa);
    SumResult r;
    mpz_class count;
    r.value = kappa_core<true>(n, R, S, kappa, opts.include_single_step, count);
    r.walk_count = count;
    return r;
}

BetaResult beta_truncated_detailed(int n, const StepSet& F, const PotentialAssignment& V,
                                   int L, int W, Direction dir, const EngineOptions& opts) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (L < 0 || W < 0) throw std::invalid_argument("truncation bounds must be >= 0");
    if (dir == Direction::descending)
        return beta_truncated_detailed(n, F.reflected(), reflected(V), L, W,
                                       Direction::ascending, opts);

    // largest representable vertex with the parity of n
    long mv = long(n) + W - (W % 2);
    auto idx = [&](long j) { return std::size_t((j + mv) / 2); };
    std::size_t size = std::size_t(mv) + 1;

    std::vector<std::pair<int, Rational>> weights;
    for (int s : F.steps()) weights.emplace_back(s, V.value(s));

    std::vector<Rational> prev(size), cur(size);
    std::vector<mpz_class> cprev(size, 0), ccur(size, 0);
    prev[idx(-n)] = Rational(1);
    cprev[idx(-n)] = 1;

    Rational total(0), last_inc(0);
    mpz_class count = 0;
    for (int t = 1; t <= L; ++t) {
        std::fill(cur.begin(), cur.end(), Rational());
        std::fill(ccur.begin(), ccur.end(), mpz_class(0));
        Rational arrivals(0);
        mpz_class arrival_count = 0;
        for (std::size_t i = 0; i < size; ++i) {
            if (cprev[i] == 0) continue;
            long j = 2L * long(i) - mv;
            for (const auto& [s, w] : weights) {
                long j2 = j + s;
                if (j2 == n) {
                    arrivals += prev[i] * w;
                    arrival_count += cprev[i];
                    continue;
                }
                if (j2 == -n || j2 > mv || j2 < -mv) continue;
                long den = long(n) * n - j2 * j2;
                cur[idx(j2)] += prev[i] * w / Rational(den);
                ccur[idx(j2)] += cprev[i];
            }
        }
        bool counted = opts.include_single_step || t > 1;
        if (counted) {
            total += arrivals;
            count += arrival_count;
            if (t == L) last_inc = arrivals;
        }
        std::swap(prev, cur);
        std::swap(cprev, ccur);
    }

    WalkClass probe;
    probe.n = n;
    probe.step_set = F;
    probe.truncation = Truncation{L, W};
    bool covered = covers_family(probe, &V);

    BetaResult b;
    b.sum.value = total;
    b.sum.walk_count = count;
    b.sum.truncated = !covered;
    b.sum.exact = covered;
    b.sum.truncation = Truncation{L, W};
    b.last_layer_increment = last_inc;
    return b;
}

SumResult beta_truncated(int n, const StepSet& F, const PotentialAssignment& V, int L, int W,
                         Direction dir, const EngineOptions& opts) {
    return beta_truncated_detailed(n, F, V, L, W, dir, opts).sum;
}

mpz_class positive_walk_count(int n, const StepSet& F, const EngineOptions& opts) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    auto sizes = F.positive_part();
    if (sizes.empty()) return 0;
    return monotone_walk_count(n, sizes, opts.include_single_step);
}

std::complex<double> positive_sum_complex(int n, const StepSet& F, const ComplexAssignment& V,
                                          const EngineOptions& opts) {
    auto sizes = F.positive_part();
    if (sizes.empty()) return {};
    std::function<std::complex<double>(int)> w = [&](int s) { return V.value(s); };
    return monotone_walk_sum<std::complex<double>>(n, sizes, w, opts.include_single_step);
}

double positive_abs_sum_float(int n, const StepSet& F, const ComplexAssignment& V,
                              const EngineOptions& opts) {
    auto sizes = F.positive_part();
    if (sizes.empty()) return 0.0;
    std::function<double(int)> w = [&](int s) { return std::abs(V.value(s)); };
    return monotone_walk_sum<double>(n, sizes, w, opts.include_single_step);
}

}  // namespace combwalks
