#include "darkstate/scalar.hpp"

#include <cstdio>

namespace darkstate {

std::string to_string(const ExactScalar& z) {
    const Rational& re = z.real();
    const Rational& im = z.imag();
    if (im.is_zero()) return re.str();
    const std::string im_abs = im.abs().str() + " i";
    if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + im_abs;
    return re.str() + (im.sign() < 0 ? " - " : " + ") + im_abs;
}

std::string to_string(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string to_string(const FloatScalar& z) {
    const double re = z.real();
    const double im = z.imag();
    if (im == 0.0) return to_string(re);
    const std::string im_abs = to_string(std::abs(im)) + " i";
    if (re == 0.0) return (im < 0 ? "-" : "") + im_abs;
    return to_string(re) + (im < 0 ? " - " : " + ") + im_abs;
}

}  // namespace darkstate
