#ifndef BTV_AMPLITUDE_HPP
#define BTV_AMPLITUDE_HPP

#include <complex>
#include <cmath>

namespace btv {

using cplx = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

/// Complex scalar with tolerance-aware comparison; the invariant's value type.
struct Amplitude {
    cplx value{0.0, 0.0};
    double tolerance{kDefaultTolerance};

    bool approx_equal(const Amplitude& other) const {
        return std::abs(value - other.value) <= tolerance;
    }
    bool approx_equal(cplx v) const { return std::abs(value - v) <= tolerance; }
};

inline bool approx(cplx a, cplx b, double tol = kDefaultTolerance) {
    return std::abs(a - b) <= tol;
}

}  // namespace btv

#endif
