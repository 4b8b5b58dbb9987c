#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zetabound {

using Rational = boost::multiprecision::cpp_rational;

// Exact Bernoulli numbers B_0..B_max in the B_1 = -1/2 convention, computed
// from the binomial convolution sum_{k=0}^{n} C(n+1,k) B_k = 0 over exact
// rationals.
class BernoulliTable {
public:
    // Unchecked except for max_index >= 0; the public entry point with the
    // documented range contract is bernoulli_table() below.
    explicit BernoulliTable(int max_index);

    int max_index() const { return static_cast<int>(values_.size()) - 1; }

    const Rational& at(int k) const;

    // B_{2k} / (2k)! rounded to binary64, for the Euler-Maclaurin correction
    // terms.  Requires 2k <= max_index.
    double em_coefficient(int k) const;

private:
    std::vector<Rational> values_;
};

// Checked constructor: 0 <= max_index <= 120.
BernoulliTable bernoulli_table(int max_index);

}  // namespace zetabound
