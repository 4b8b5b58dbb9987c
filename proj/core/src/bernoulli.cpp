#include <zetabound/bernoulli.hpp>

#include <zetabound/errors.hpp>

namespace zetabound {

namespace {

using Integer = boost::multiprecision::cpp_int;

}  // namespace

BernoulliTable::BernoulliTable(int max_index) {
    if (max_index < 0) {
        throw ParameterError("bernoulli table size must be non-negative");
    }
    values_.reserve(max_index + 1);
    values_.emplace_back(1);
    // sum_{k=0}^{n} C(n+1,k) B_k = 0, solved for B_n; binomials kept as a
    // running row of Pascal's triangle for C(n+1, .).
    std::vector<Integer> binom{1, 1};  // row n+1 = 1: C(1,0), C(1,1)
    for (int n = 1; n <= max_index; ++n) {
        // advance to row n+1
        binom.push_back(1);
        for (int k = n; k >= 1; --k) binom[k] += binom[k - 1];
        Rational acc = 0;
        for (int k = 0; k < n; ++k) acc += Rational(binom[k]) * values_[k];
        values_.push_back(-acc / Rational(binom[n]));
    }
}

const Rational& BernoulliTable::at(int k) const {
    if (k < 0 || k > max_index()) {
        throw ParameterError("bernoulli index out of table range");
    }
    return values_[k];
}

double BernoulliTable::em_coefficient(int k) const {
    if (k < 0 || 2 * k > max_index()) {
        throw ParameterError("euler-maclaurin coefficient index out of table range");
    }
    Integer fact = 1;
    for (int i = 2; i <= 2 * k; ++i) fact *= i;
    Rational c = values_[2 * k] / Rational(fact);
    return c.convert_to<double>();
}

BernoulliTable bernoulli_table(int max_index) {
    if (max_index < 0 || max_index > 120) {
        throw ParameterError("bernoulli table supports indices 0..120");
    }
    return BernoulliTable(max_index);
}

}  // namespace zetabound
