#pragma once

#include "levy/errors.hpp"

#include <string>

namespace levy {

enum class SDomain { Full01, Half1 };

// Levy parameter s. Full01 is (0,1], Half1 is (1/2,1]. The closed right end
// admits the Gaussian case used by several limit checks.
class FractionalExponent {
public:
    explicit FractionalExponent(double s, SDomain tag = SDomain::Full01) : s_(s), tag_(tag)
    {
        if (!(s > 0.0 && s <= 1.0))
            throw DomainError("fractional exponent: s=" + std::to_string(s) + " outside (0,1]");
        if (tag == SDomain::Half1 && !(s > 0.5))
            throw DomainError("fractional exponent: s=" + std::to_string(s) + " outside (1/2,1]");
    }

    static FractionalExponent half1(double s) { return FractionalExponent(s, SDomain::Half1); }

    double value() const noexcept { return s_; }
    SDomain domain() const noexcept { return tag_; }
    bool above_half() const noexcept { return s_ > 0.5; }

private:
    double s_;
    SDomain tag_;
};

} // namespace levy
