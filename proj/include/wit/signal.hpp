#pragma once

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wit/error.hpp"

namespace wit {

/// A finite real sample vector (unit sample step) and its energy sum x^2.
class SampledSignal {
public:
    SampledSignal() = default;

    explicit SampledSignal(std::vector<double> samples, std::string name = {})
        : samples_(std::move(samples)), name_(std::move(name)) {
        if (samples_.size() < 2) throw PreconditionError("a signal needs at least two samples");
        for (std::size_t i = 0; i < samples_.size(); ++i)
            if (!std::isfinite(samples_[i]))
                throw PreconditionError("sample " + std::to_string(i) + " is not finite");
        for (double x : samples_) energy_ += x * x;
    }

    std::size_t size() const { return samples_.size(); }
    double energy() const { return energy_; }
    const std::vector<double>& samples() const { return samples_; }
    std::span<const double> view() const { return samples_; }
    double operator[](std::size_t i) const { return samples_[i]; }
    const std::string& name() const { return name_; }

    SampledSignal scaled(double factor) const {
        std::vector<double> s = samples_;
        for (double& x : s) x *= factor;
        return SampledSignal(std::move(s), name_);
    }

private:
    std::vector<double> samples_;
    std::string name_;
    double energy_ = 0.0;
};

}  // namespace wit
