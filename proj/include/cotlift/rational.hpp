#ifndef COTLIFT_RATIONAL_HPP
#define COTLIFT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cotlift {

// Exact arbitrary-precision coefficient field. No floating point anywhere in
// the kernel: "is zero" must be a decision, not a tolerance.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace cotlift

#endif
