#ifndef COTLIFT_PARSER_HPP
#define COTLIFT_PARSER_HPP

#include "cotlift/fiber_scalar.hpp"

#include <string>

namespace cotlift {

// Expression grammar for manifests: coordinates x1..xn and p1..pn, integers,
// rationals a/b, operators + - * / ^, parentheses. Whitespace-insensitive.
// Division requires a momentum-free, not identically zero divisor; exponents
// are non-negative integer literals.
FiberScalar parse_fiber(const std::string& text, int dim);

// Same grammar restricted to the base: momenta are rejected. Returns the
// unique canonical form; is_zero on the result is exact.
BaseScalar parse_base(const std::string& text, int dim);

} // namespace cotlift

#endif
