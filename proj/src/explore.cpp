// SPDX-License-Identifier: Apache-2.0
#include "combwalks/explore.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "combwalks/sum_engine.hpp"

namespace combwalks {

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned workers = unsigned(std::min<std::size_t>(jobs, count));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

Rational factorial(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f, mpz_class(1));
}

void check_range(int lo, int hi, const char* what) {
    if (lo > hi) throw std::invalid_argument(std::string(what) + " range is empty");
}

// value-stable uniform in [0,1): top 53 bits of the generator word
double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1p-53; }

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string complex_repr(const std::complex<double>& z) {
    std::string s = float_repr(z.real());
    s += z.imag() < 0 ? "" : "+";
    s += float_repr(z.imag());
    s += "i";
    return s;
}

}  // namespace

ScanTable q1_scan(int m, int n_min, int n_max, const ScanOptions& opts) {
    if (m < 2) throw std::invalid_argument("step cap must be >= 2");
    check_range(n_min, n_max, "n");
    if (n_min < 1) throw std::invalid_argument("n must be >= 1");
    StepSet F = StepSet::up_to(m);
    EngineOptions eo{opts.include_single_step};

    ScanTable t;
    t.columns = {"m", "n", "term_count", "normalized"};
    if (opts.full_polynomial) t.columns.push_back("polynomial");

    std::size_t count = std::size_t(n_max - n_min + 1);
    std::vector<std::vector<Json>> rows(count);
    parallel_for(count, opts.jobs, [&](std::size_t i) {
        int n = n_min + int(i);
        SparsePolynomial p = sum_polynomial(n, F, eo);
        Rational scale = Rational(4).pow(unsigned(n - 1)) * factorial(unsigned(n - 1)) *
                         factorial(unsigned(n - 1));
        std::vector<Json> row{m, n, p.term_count(), p.scaled(scale).str()};
        if (opts.full_polynomial) row.push_back(to_json(p));
        rows[i] = std::move(row);
    });
    for (auto& r : rows) t.add_row(std::move(r));
    return t;
}

ScanTable q2_scan(int m, int n_min, int n_max, int samples, std::uint64_t seed,
                  const ScanOptions& opts) {
    if (m < 2) throw std::invalid_argument("step cap must be >= 2");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    check_range(n_min, n_max, "n");
    if (n_min < 1) throw std::invalid_argument("n must be >= 1");
    StepSet F = StepSet::up_to(m);
    EngineOptions eo{opts.include_single_step};
    int dims = m / 2;

    // All coordinates are drawn upfront in a fixed order, so the worker
    // count cannot perturb the sample set.
    std::mt19937_64 rng(seed);
    auto zs = std::vector<std::vector<std::complex<double>>>(std::size_t(samples));
    for (auto& z : zs) {
        z.reserve(std::size_t(dims));
        for (int k = 0; k < dims; ++k) {
            double u_r = uniform01(rng);
            double u_t = uniform01(rng);
            // area-uniform radius on 0.5 <= r <= 2
            double r = std::sqrt(0.25 + u_r * 3.75);
            z.push_back(std::polar(r, kTwoPi * u_t));
        }
    }

    ScanTable t;
    t.columns = {"sample", "n", "z", "sum_of_abs", "abs_of_sum", "ratio", "running_max", "note"};
    std::size_t n_count = std::size_t(n_max - n_min + 1);
    auto blocks = std::vector<std::vector<std::vector<Json>>>(std::size_t(samples));
    parallel_for(std::size_t(samples), opts.jobs, [&](std::size_t si) {
        ComplexAssignment V;
        std::string zr;
        for (int k = 0; k < dims; ++k) {
            V.set(2 * (k + 1), zs[si][std::size_t(k)]);
            zr += (k ? ";" : "") + complex_repr(zs[si][std::size_t(k)]);
        }
        auto& block = blocks[si];
        block.reserve(n_count);
        double running = 0.0;
        bool have_running = false;
        for (int n = n_min; n <= n_max; ++n) {
            double num = positive_abs_sum_float(n, F, V, eo);
            double den = std::abs(positive_sum_complex(n, F, V, eo));
            Json ratio, running_cell, note;
            if (den < 1e-300) {
                note = "near-cancellation";
            } else {
                double r = num / den;
                ratio = r;
                if (!have_running || r > running) running = r;
                have_running = true;
            }
            if (have_running) running_cell = running;
            block.push_back({Json(si), n, zr, num, den, ratio, running_cell, note});
        }
    });
    for (auto& block : blocks)
        for (auto& row : block) t.add_row(std::move(row));
    return t;
}

ScanTable q3_scan(int m_min, int m_max, const ScanOptions& opts) {
    if (m_min < 1) throw std::invalid_argument("m must be >= 1");
    check_range(m_min, m_max, "m");
    EngineOptions eo{opts.include_single_step};

    ScanTable t;
    t.columns = {"m",          "n",         "b3",
                 "sum_abs_h1", "walk_count", "m_fact_abs_b3",
                 "m_fact_sum_abs", "growth"};
    std::size_t count = std::size_t(m_max - m_min + 1);
    std::vector<std::vector<Json>> rows(count);
    parallel_for(count, opts.jobs, [&](std::size_t i) {
        int m = m_min + int(i);
        int n = 2 * m + 1;
        SumResult signed_sum = kappa_sum(n, 1, 2, 3, eo);
        SumResult abs_sum = kappa_abs_sum(n, 1, 2, 3, eo);
        Rational mf = factorial(unsigned(m));
        Rational nb3 = mf * signed_sum.rational().abs();
        Rational nabs = mf * abs_sum.rational();
        Json growth;
        if (!nabs.is_zero()) growth = std::exp2(nabs.log2_abs() / double(m));
        rows[i] = {m,
                   n,
                   signed_sum.rational().str(),
                   abs_sum.rational().str(),
                   to_json(signed_sum.walk_count),
                   nb3.to_double(),
                   nabs.to_double(),
                   growth};
    });
    for (auto& r : rows) t.add_row(std::move(r));
    return t;
}

ScanTable prop3_scan(int m, int n_min, int n_max, const PotentialAssignment& V, int L, int W,
                     const ScanOptions& opts) {
    if (m < 2) throw std::invalid_argument("step cap must be >= 2");
    check_range(n_min, n_max, "n");
    if (n_min < 1) throw std::invalid_argument("n must be >= 1");
    StepSet F = StepSet::up_to(m);
    EngineOptions eo{opts.include_single_step};
    PotentialAssignment Vr = reflected(V);

    ScanTable t;
    t.columns = {"n",         "pos_sum",  "beta_asc", "beta_desc", "ratio_asc", "ratio_desc",
                 "dev_asc",   "dev_desc", "tail_asc", "tail_desc", "truncated", "note"};
    std::size_t count = std::size_t(n_max - n_min + 1);
    std::vector<std::vector<Json>> rows(count);
    parallel_for(count, opts.jobs, [&](std::size_t i) {
        int n = n_min + int(i);
        SumResult pos = sum_positive_dp(n, F, V, eo);
        BetaResult asc = beta_truncated_detailed(n, F, V, L, W, Direction::ascending, eo);
        BetaResult desc = beta_truncated_detailed(n, F, Vr, L, W, Direction::descending, eo);
        const Rational& p = pos.rational();

        Json ratio_a, ratio_d, dev_a, dev_d, note;
        if (p.is_zero()) {
            note = "degenerate";
        } else if (p.log2_abs() < -996.0) {  // |pos_sum| < ~1e-300
            note = "near-cancellation";
        } else {
            Rational ra = asc.sum.rational() / p;
            Rational rd = desc.sum.rational() / p;
            ratio_a = ra.to_double();
            ratio_d = rd.to_double();
            if (n >= 2) {
                double scale = double(n) / std::log(double(n));
                dev_a = (ra - Rational(1)).abs().to_double() * scale;
                dev_d = (rd - Rational(1)).abs().to_double() * scale;
            }
        }
        rows[i] = {n,
                   p.str(),
                   asc.sum.rational().str(),
                   desc.sum.rational().str(),
                   ratio_a,
                   ratio_d,
                   dev_a,
                   dev_d,
                   asc.last_layer_increment.abs().to_double(),
                   desc.last_layer_increment.abs().to_double(),
                   asc.sum.truncated || desc.sum.truncated,
                   note};
    });
    for (auto& r : rows) t.add_row(std::move(r));
    return t;
}

}  // namespace combwalks
