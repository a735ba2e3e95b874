#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace polygauss {

// Counts and exponents (norms, totients, class numbers, power exponents) are
// exact arbitrary-precision integers: q^{deg f} outgrows 64 bits quickly.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace polygauss
