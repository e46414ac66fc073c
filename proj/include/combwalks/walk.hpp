// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "combwalks/assignment.hpp"
#include "combwalks/rational.hpp"

namespace combwalks {

enum class Direction { ascending, descending };
enum class SignFilter { all, positive_only, negative_only };

const char* to_string(Direction d);
const char* to_string(SignFilter f);

// Finite set of permitted steps: nonzero even integers.
class StepSet {
public:
    StepSet() = default;
    explicit StepSet(std::vector<int> steps);

    // All nonzero even steps with |s| <= cap.
    static StepSet up_to(int cap);
    // Comma-separated list, e.g. "-2,-4,2,4".
    static StepSet parse(const std::string& text);

    const std::vector<int>& steps() const { return steps_; }  // sorted ascending
    std::vector<int> positive_part() const;
    std::vector<int> negative_part() const;
    bool contains(int s) const;
    bool empty() const { return steps_.empty(); }
    StepSet reflected() const;

private:
    std::vector<int> steps_;
};

// A walk is its step sequence; vertices are the running endpoints.
struct Walk {
    std::vector<int> steps;

    std::size_t length() const { return steps.size(); }
    friend bool operator==(const Walk& a, const Walk& b) { return a.steps == b.steps; }
    friend bool operator<(const Walk& a, const Walk& b) { return a.steps < b.steps; }
};

struct Truncation {
    int max_steps = 1;  // L
    int window = 0;     // W: vertices stay within |j| <= n + W
};

// Declarative family of walks. Finite iff a sign filter applies, or kappa is
// set (two-element step set), or a truncation is set.
struct WalkClass {
    int n = 1;
    Direction direction = Direction::ascending;
    StepSet step_set;
    SignFilter sign_filter = SignFilter::all;
    std::optional<int> kappa;  // exact number of negative steps
    std::optional<Truncation> truncation;

    // Throws std::invalid_argument on an ill-formed class (n < 1, kappa on a
    // step set that is not {-2R, +2S}, bad truncation bounds).
    void validate() const;
    bool finite() const;
    // For a kappa class: the two-element step set decomposed as {-2R, +2S}.
    std::pair<int, int> kappa_step_pair() const;
};

// j(0..length): j(0) = -n (ascending) or +n (descending), then partial sums.
std::vector<long> walk_vertices(const Walk& w, int n, Direction dir);

enum class AdmissibilityFailure {
    none,
    empty_walk,
    odd_or_zero_step,
    step_not_in_class,
    sign_violation,
    wrong_endpoint,
    boundary_vertex,
    kappa_mismatch,
    length_exceeded,
    window_exceeded,
};

const char* to_string(AdmissibilityFailure f);

struct AdmissibilityCheck {
    bool admissible = false;
    AdmissibilityFailure reason = AdmissibilityFailure::none;
};

AdmissibilityCheck is_admissible(const Walk& w, const WalkClass& c);

// Product of 1/(n^2 - j^2) over the interior vertices j(1..length-1); the
// empty product is 1. Throws std::domain_error("vertex on boundary") if an
// interior vertex sits at +-n.
Rational h1(const Walk& w, int n, Direction dir);

// h1 times the product of step weights V(x(t)) over all steps.
Rational h_weight(const Walk& w, int n, Direction dir, const PotentialAssignment& V);

// All admissible walks of a finite class, in lexicographic step-sequence
// order. Throws std::domain_error("infinite class") otherwise.
std::vector<Walk> enumerate_walks(const WalkClass& c);

}  // namespace combwalks
