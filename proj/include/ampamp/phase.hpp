// Copyright 2026 The ampamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

#include "ampamp/rational.hpp"

namespace ampamp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Oracle phase scale ps in radians per cost unit.
///
/// When ps is a rational multiple of pi (as every target-derived scale is),
/// the product C * ps is reduced modulo 2 pi in exact arithmetic before the
/// conversion to floating point.
class PhaseScale {
   public:
    PhaseScale() = default;

    static PhaseScale radians(double value) {
        PhaseScale p;
        p.radians_ = value;
        return p;
    }

    static PhaseScale pi_times(const Rational& multiple) {
        PhaseScale p;
        p.radians_ = kPi * to_double(multiple);
        p.pi_multiple_ = multiple;
        return p;
    }

    double value() const { return radians_; }
    const std::optional<Rational>& pi_multiple() const { return pi_multiple_; }

    PhaseScale negated() const {
        return pi_multiple_ ? pi_times(-*pi_multiple_) : radians(-radians_);
    }

    /// C * ps reduced into [0, 2 pi).
    double phase_of(const Rational& cost) const {
        if (pi_multiple_) {
            Rational turns = floor_mod(cost * *pi_multiple_, Rational(2));
            return kPi * to_double(turns);
        }
        long double x = to_long_double(cost) * static_cast<long double>(radians_);
        constexpr long double two_pi = 6.283185307179586476925286766559005768L;
        x = std::fmod(x, two_pi);
        if (x < 0) x += two_pi;
        return static_cast<double>(x);
    }

    std::complex<double> factor_of(const Rational& cost) const { return std::polar(1.0, phase_of(cost)); }

   private:
    double radians_ = 0.0;
    std::optional<Rational> pi_multiple_;
};

}  // namespace ampamp
