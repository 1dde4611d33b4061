#pragma once

#include <boost/rational.hpp>
#include <string>

namespace pgg {

// Exact arithmetic for step values and prices. All quantities that decide
// a pure equilibrium (utilities, step comparisons against p) stay rational;
// expected utilities and threshold-game math are done in double.
using Rat = boost::rational<long long>;

// Accepts "3", "-7", "3/4", "-1/2", "1.25", "2.5e-3".
Rat rat_parse(const std::string& text);

// Exact value of the shortest decimal that round-trips to x. Human-entered
// constants like 0.3 become 3/10 rather than the 2^-52 binary expansion.
Rat rat_from_double(double x);

std::string rat_str(const Rat& r);  // "num/den", or just "num" for integers

double rat_double(const Rat& r);

}  // namespace pgg
