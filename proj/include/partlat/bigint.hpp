#ifndef PARTLAT_BIGINT_HPP
#define PARTLAT_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace partlat {

// Exact arbitrary-precision counts. All combinatorial quantities are kept
// exact; rounding happens only at formatting time.
using BigCount = boost::multiprecision::cpp_int;

// Formats x as "d.dd*10^e" style scientific notation with `digits`
// significant digits, e.g. sci(1379400, 3) == "1.38e6".
std::string sci(const BigCount& x, int digits = 3);

}  // namespace partlat

#endif
