#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace tourplan {

// All penalties and metric values are exact rationals; doubles appear only
// in reports.
using Rat = boost::rational<std::int64_t>;

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_fraction_string(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace tourplan
