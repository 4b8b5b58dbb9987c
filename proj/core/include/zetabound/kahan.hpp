#pragma once

namespace zetabound {

// Kahan compensated accumulator.  Works for double and std::complex<double>
// alike: complex addition is component-wise, so the compensation algebra
// carries over unchanged.
template <typename T>
class KahanSum {
public:
    void add(const T& x) {
        const T y = x - carry_;
        const T t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }

    // carry_ holds the negated unabsorbed residue, so folding it back in
    // recovers sub-ulp progress (matters when increments sit near ulp(sum)).
    T value() const { return sum_ - carry_; }

private:
    T sum_{};
    T carry_{};
};

}  // namespace zetabound
