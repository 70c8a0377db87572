#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sodlab {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;

inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace sodlab
