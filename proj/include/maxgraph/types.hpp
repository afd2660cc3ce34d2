#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace maxgraph {

using cplx = std::complex<double>;

/// Point of L^3 with coordinates (x1, x2, x3); x3 is the timelike axis.
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<cplx, 3>;

inline constexpr double kPi = 3.14159265358979323846;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double max_abs(const Vec3& a) { return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])}); }
inline double norm(const Vec3& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

/// Point of the Riemann sphere. `infinite` overrides `value`.
struct ExtendedComplex {
    cplx value{};
    bool infinite = false;

    static ExtendedComplex infinity() { return {cplx{}, true}; }
    bool is_zero() const { return !infinite && value == cplx{}; }
};

enum class ErrorKind {
    OrderingViolation,
    LengthMismatch,
    SignDomain,
    BranchPointEvaluation,
    DegenerateGauss,
    Infeasible,
    QuadratureFailure,
    PathThroughSingularity,
    NonConvergent,
    VerificationFailure,
    DegenerateSingularity,
    AmbiguousDirection,
    NotOnHyperboloid,
    WeldFailure,
    IOFailure,
    OrderingInfeasible,
    NotClosedOnCurve,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace maxgraph
