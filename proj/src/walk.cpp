// SPDX-License-Identifier: Apache-2.0
#include "combwalks/walk.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace combwalks {

const char* to_string(Direction d) {
    return d == Direction::ascending ? "ascending" : "descending";
}

const char* to_string(SignFilter f) {
    switch (f) {
        case SignFilter::all: return "all";
        case SignFilter::positive_only: return "positive_only";
        case SignFilter::negative_only: return "negative_only";
    }
    return "?";
}

const char* to_string(AdmissibilityFailure f) {
    switch (f) {
        case AdmissibilityFailure::none: return "none";
        case AdmissibilityFailure::empty_walk: return "empty walk";
        case AdmissibilityFailure::odd_or_zero_step: return "odd or zero step";
        case AdmissibilityFailure::step_not_in_class: return "step not in class";
        case AdmissibilityFailure::sign_violation: return "sign violation";
        case AdmissibilityFailure::wrong_endpoint: return "wrong endpoint";
        case AdmissibilityFailure::boundary_vertex: return "boundary vertex";
        case AdmissibilityFailure::kappa_mismatch: return "kappa mismatch";
        case AdmissibilityFailure::length_exceeded: return "length exceeded";
        case AdmissibilityFailure::window_exceeded: return "window exceeded";
    }
    return "?";
}

StepSet::StepSet(std::vector<int> steps) : steps_(std::move(steps)) {
    for (int s : steps_) {
        if (s == 0 || s % 2 != 0)
            throw std::invalid_argument("steps must be nonzero even integers");
    }
    std::sort(steps_.begin(), steps_.end());
    if (std::adjacent_find(steps_.begin(), steps_.end()) != steps_.end())
        throw std::invalid_argument("duplicate step");
}

StepSet StepSet::up_to(int cap) {
    if (cap < 2) throw std::invalid_argument("step cap must be >= 2");
    std::vector<int> s;
    for (int v = 2; v <= cap; v += 2) {
        s.push_back(v);
        s.push_back(-v);
    }
    return StepSet(std::move(s));
}

StepSet StepSet::parse(const std::string& text) {
    std::vector<int> s;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad step list: " + text);
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad step list: " + text);
        s.push_back(v);
    }
    if (s.empty()) throw std::invalid_argument("empty step list");
    return StepSet(std::move(s));
}

std::vector<int> StepSet::positive_part() const {
    std::vector<int> out;
    for (int s : steps_)
        if (s > 0) out.push_back(s);
    return out;
}

std::vector<int> StepSet::negative_part() const {
    std::vector<int> out;
    for (int s : steps_)
        if (s < 0) out.push_back(s);
    return out;
}

bool StepSet::contains(int s) const {
    return std::binary_search(steps_.begin(), steps_.end(), s);
}

StepSet StepSet::reflected() const {
    std::vector<int> s;
    s.reserve(steps_.size());
    for (int v : steps_) s.push_back(-v);
    return StepSet(std::move(s));
}

void WalkClass::validate() const {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (step_set.empty()) throw std::invalid_argument("empty step set");
    if (kappa) {
        if (*kappa < 0) throw std::invalid_argument("kappa must be non-negative");
        kappa_step_pair();
    }
    if (truncation) {
        if (truncation->max_steps < 1) throw std::invalid_argument("truncation max_steps must be >= 1");
        if (truncation->window < 0) throw std::invalid_argument("truncation window must be >= 0");
    }
}

bool WalkClass::finite() const {
    if (sign_filter != SignFilter::all) return true;
    if (kappa) return true;
    return truncation.has_value();
}

std::pair<int, int> WalkClass::kappa_step_pair() const {
    const auto& s = step_set.steps();
    if (s.size() != 2 || s[0] >= 0 || s[1] <= 0)
        throw std::invalid_argument("kappa classes need a step set of the form {-2R, +2S}");
    return {-s[0] / 2, s[1] / 2};  // (R, S)
}

std::vector<long> walk_vertices(const Walk& w, int n, Direction dir) {
    std::vector<long> v;
    v.reserve(w.steps.size() + 1);
    long j = dir == Direction::ascending ? -long(n) : long(n);
    v.push_back(j);
    for (int s : w.steps) {
        j += s;
        v.push_back(j);
    }
    return v;
}

AdmissibilityCheck is_admissible(const Walk& w, const WalkClass& c) {
    c.validate();
    auto fail = [](AdmissibilityFailure r) { return AdmissibilityCheck{false, r}; };

    if (w.steps.empty()) return fail(AdmissibilityFailure::empty_walk);
    long negatives = 0;
    for (int s : w.steps) {
        if (s == 0 || s % 2 != 0) return fail(AdmissibilityFailure::odd_or_zero_step);
        if (!c.step_set.contains(s)) return fail(AdmissibilityFailure::step_not_in_class);
        if (c.sign_filter == SignFilter::positive_only && s < 0)
            return fail(AdmissibilityFailure::sign_violation);
        if (c.sign_filter == SignFilter::negative_only && s > 0)
            return fail(AdmissibilityFailure::sign_violation);
        if (s < 0) ++negatives;
    }

    const auto v = walk_vertices(w, c.n, c.direction);
    const long target = c.direction == Direction::ascending ? c.n : -c.n;
    if (v.back() != target) return fail(AdmissibilityFailure::wrong_endpoint);
    for (std::size_t t = 1; t + 1 < v.size(); ++t)
        if (v[t] == c.n || v[t] == -c.n) return fail(AdmissibilityFailure::boundary_vertex);

    if (c.kappa && negatives != *c.kappa) return fail(AdmissibilityFailure::kappa_mismatch);
    if (c.truncation) {
        if (long(w.steps.size()) > c.truncation->max_steps)
            return fail(AdmissibilityFailure::length_exceeded);
        for (long j : v)
            if (std::abs(j) > long(c.n) + c.truncation->window)
                return fail(AdmissibilityFailure::window_exceeded);
    }
    return {true, AdmissibilityFailure::none};
}

Rational h1(const Walk& w, int n, Direction dir) {
    const auto v = walk_vertices(w, n, dir);
    Rational p(1);
    for (std::size_t t = 1; t + 1 < v.size(); ++t) {
        long d = long(n) * n - v[t] * v[t];
        if (d == 0) throw std::domain_error("vertex on boundary");
        p *= Rational(1, d);
    }
    return p;
}

Rational h_weight(const Walk& w, int n, Direction dir, const PotentialAssignment& V) {
    Rational p = h1(w, n, dir);
    for (int s : w.steps) p *= V.value(s);
    return p;
}

namespace {

struct Enumerator {
    const WalkClass& c;
    long target;
    long anti;
    // kappa bookkeeping
    bool exact_counts = false;
    long want_neg = 0, want_pos = 0;
    int R = 0, S = 1;
    // truncation bookkeeping
    long max_len = -1;  // -1: unbounded by truncation
    long window_abs = -1;

    std::vector<int> allowed;
    std::vector<Walk> out;
    std::vector<int> prefix;

    explicit Enumerator(const WalkClass& cls) : c(cls) {
        target = c.direction == Direction::ascending ? c.n : -c.n;
        anti = -target;
        for (int s : c.step_set.steps()) {
            if (c.sign_filter == SignFilter::positive_only && s < 0) continue;
            if (c.sign_filter == SignFilter::negative_only && s > 0) continue;
            allowed.push_back(s);
        }
        if (c.kappa) {
            auto [r, sS] = c.kappa_step_pair();
            R = r;
            S = sS;
            // net displacement is target - start = 2*target here
            long need = 2L * target + 2L * long(r) * *c.kappa;
            if (need % (2L * sS) != 0 || need < 0) {
                want_neg = want_pos = -1;  // balance obstruction: empty class
            } else {
                want_neg = *c.kappa;
                want_pos = need / (2L * sS);
            }
            exact_counts = true;
        }
        if (c.truncation) {
            max_len = c.truncation->max_steps;
            window_abs = long(c.n) + c.truncation->window;
        }
    }

    void run() {
        if (exact_counts && want_neg < 0) return;
        // a sign-filtered class whose steps cannot reach the target is empty
        if (c.sign_filter == SignFilter::positive_only && target < 0) return;
        if (c.sign_filter == SignFilter::negative_only && target > 0) return;
        dfs(c.direction == Direction::ascending ? -long(c.n) : long(c.n), 0, 0);
    }

    void dfs(long j, long neg, long pos) {
        for (int s : allowed) {
            long nj = j + s;
            long nneg = neg + (s < 0 ? 1 : 0);
            long npos = pos + (s > 0 ? 1 : 0);
            if (exact_counts) {
                if (nneg > want_neg || npos > want_pos) continue;
                // the steps still owed must be able to close the gap
                if (nj - 2L * R * (want_neg - nneg) > target) continue;
                if (nj + 2L * S * (want_pos - npos) < target) continue;
            }
            if (max_len >= 0 && long(prefix.size()) + 1 > max_len) continue;
            if (window_abs >= 0 && std::abs(nj) > window_abs) continue;

            if (nj == target) {
                if (!exact_counts || (nneg == want_neg && npos == want_pos))
                    out.push_back(Walk{[&] {
                        auto steps = prefix;
                        steps.push_back(s);
                        return steps;
                    }()});
                continue;  // the endpoint may not be an interior vertex
            }
            if (nj == anti) continue;  // interior boundary touch

            // monotone filters cannot overshoot the target and return
            if (c.sign_filter == SignFilter::positive_only && nj > target) continue;
            if (c.sign_filter == SignFilter::negative_only && nj < target) continue;

            prefix.push_back(s);
            dfs(nj, nneg, npos);
            prefix.pop_back();
        }
    }
};

}  // namespace

std::vector<Walk> enumerate_walks(const WalkClass& c) {
    c.validate();
    if (!c.finite()) throw std::domain_error("infinite class");
    Enumerator e(c);
    e.run();
    return std::move(e.out);
}

}  // namespace combwalks
