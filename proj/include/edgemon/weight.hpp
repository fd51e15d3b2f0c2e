#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace edgemon {

// Exact nonnegative vertex weight.
// Compare with Weight(n), not a bare int: in C++20 `w == 0` picks boost's
// reversed mixed-type operator and recurses forever.
using Weight = boost::rational<std::int64_t>;

// "num/den" in lowest terms, or "num" when the denominator is 1.
std::string format_weight(const Weight& w);

// Accepts "num" or "num/den" (optionally signed). Throws InputError on bad syntax.
Weight parse_weight(std::string_view text);

}  // namespace edgemon
