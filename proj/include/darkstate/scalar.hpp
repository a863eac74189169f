#pragma once

#include <complex>
#include <string>
#include <type_traits>

#include "darkstate/rational.hpp"

namespace darkstate {

/// Arithmetic regime of an analysis run.
enum class Regime { Exact, Float };

/// Complex number with exact rational parts. Closed under + - * / with no rounding.
class GaussianRational {
public:
    GaussianRational() = default;
    template <std::integral I>
    GaussianRational(I re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    [[nodiscard]] const Rational& real() const { return re_; }
    [[nodiscard]] const Rational& imag() const { return im_; }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational conj(const GaussianRational& z) { return {z.real(), -z.imag()}; }
/// |z|^2, exact.
inline Rational norm(const GaussianRational& z) { return z.real() * z.real() + z.imag() * z.imag(); }

inline GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    const Rational d = norm(o);
    if (d.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    *this *= conj(o);
    re_ /= d;
    im_ /= d;
    return *this;
}

using ExactScalar = GaussianRational;
using FloatScalar = std::complex<double>;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, ExactScalar>;

template <class T>
concept Scalar = std::is_same_v<T, ExactScalar> || std::is_same_v<T, FloatScalar>;

/// Real field matching a scalar type (Rational for exact, double for float).
template <Scalar T>
using RealOf = std::conditional_t<is_exact_v<T>, Rational, double>;

template <Scalar T>
constexpr Regime regime_of() {
    return is_exact_v<T> ? Regime::Exact : Regime::Float;
}

inline bool is_zero(const ExactScalar& z) { return z.is_zero(); }
inline bool is_zero(const FloatScalar& z) { return z == 0.0; }

/// Nearest binary64 complex value.
inline FloatScalar to_float(const ExactScalar& z) { return {z.real().to_double(), z.imag().to_double()}; }
inline FloatScalar to_float(const FloatScalar& z) { return z; }

/// Converts an exact value into scalar type T (rounds when T is floating).
template <Scalar T>
T from_exact(const ExactScalar& z) {
    if constexpr (is_exact_v<T>)
        return z;
    else
        return to_float(z);
}

template <Scalar T>
RealOf<T> real_from_exact(const Rational& r) {
    if constexpr (is_exact_v<T>)
        return r;
    else
        return r.to_double();
}

/// "p/q + r/s i" style rendering; integers and pure real/imaginary values are shortened.
std::string to_string(const ExactScalar& z);
/// 15 significant digits per component.
std::string to_string(const FloatScalar& z);
std::string to_string(double x);

}  // namespace darkstate
