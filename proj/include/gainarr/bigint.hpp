#pragma once

#include <gmpxx.h>

#include <string>

namespace gainarr {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRational& v) { return v.get_str(); }

}  // namespace gainarr
