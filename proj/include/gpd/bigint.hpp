#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gpd {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace gpd
