// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

#include "combwalks/assignment.hpp"
#include "combwalks/io.hpp"
#include "combwalks/walk.hpp"

namespace combwalks {

struct ScanOptions {
    unsigned jobs = 1;
    bool include_single_step = true;
    bool full_polynomial = false;  // q1: attach the full polynomial column
};

// Runs fn(0..count-1) on up to `jobs` workers. Results must land in
// pre-sized slots keyed by index; completion order never shows in output.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

// Walk-sum polynomials for the even-capped step set {2,...,m}: term counts
// and coefficients rescaled by 4^{n-1}((n-1)!)^2 so the V(2)^n coefficient
// is exactly 1 (a presentation normalization, recorded in the manifest).
ScanTable q1_scan(int m, int n_min, int n_max, const ScanOptions& opts = {});

// Seeded sampling of complex step weights, one coordinate per positive step,
// uniform on the annulus 0.5 <= |z| <= 2; reports sum|h| / |sum h| per n and
// the running max over n per sample.
ScanTable q2_scan(int m, int n_min, int n_max, int samples, std::uint64_t seed,
                  const ScanOptions& opts = {});

// Exact three-negative-step class sums at odd n = 2m+1 over steps {-2, +4},
// with m!-normalized float columns and the (m! sum|h1|)^{1/m} growth column.
ScanTable q3_scan(int m_min, int m_max, const ScanOptions& opts = {});

// Truncated two-sided sums against the positive-walk baseline. The
// descending column mirrors the problem (reflected steps and weights), so
// for a sign-symmetric step set it coincides with the ascending column.
ScanTable prop3_scan(int m, int n_min, int n_max, const PotentialAssignment& V, int L, int W,
                     const ScanOptions& opts = {});

}  // namespace combwalks
