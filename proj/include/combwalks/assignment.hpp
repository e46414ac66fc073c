// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <map>
#include <stdexcept>

#include "combwalks/rational.hpp"

namespace combwalks {

// Step weights V(s), keyed by nonzero even step. The weight of step 0 is
// identically zero and may not be assigned; steps absent from the map have
// weight zero.
template <class Scalar>
class BasicAssignment {
public:
    BasicAssignment() = default;
    BasicAssignment(std::initializer_list<std::pair<const int, Scalar>> init)
        : values_(init) {
        validate();
    }
    explicit BasicAssignment(std::map<int, Scalar> values) : values_(std::move(values)) {
        validate();
    }

    void set(int step, Scalar value) {
        check_step(step);
        values_[step] = std::move(value);
    }

    Scalar value(int step) const {
        auto it = values_.find(step);
        return it == values_.end() ? Scalar{} : it->second;
    }

    bool has(int step) const { return values_.count(step) != 0; }
    const std::map<int, Scalar>& values() const { return values_; }

private:
    static void check_step(int step) {
        if (step == 0) throw std::invalid_argument("V(0) is identically zero and may not be assigned");
        if (step % 2 != 0) throw std::invalid_argument("steps must be even");
    }
    void validate() const {
        for (const auto& [s, v] : values_) check_step(s);
    }

    std::map<int, Scalar> values_;
};

using PotentialAssignment = BasicAssignment<Rational>;
using ComplexAssignment = BasicAssignment<std::complex<double>>;

// Mirror image s -> -s of an assignment.
template <class Scalar>
BasicAssignment<Scalar> reflected(const BasicAssignment<Scalar>& a) {
    std::map<int, Scalar> out;
    for (const auto& [s, v] : a.values()) out[-s] = v;
    return BasicAssignment<Scalar>(std::move(out));
}

}  // namespace combwalks
