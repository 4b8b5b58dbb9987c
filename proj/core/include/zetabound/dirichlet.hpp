#pragma once

#include <utility>
#include <vector>

#include <zetabound/certificate.hpp>
#include <zetabound/complex.hpp>
#include <zetabound/hurwitz.hpp>

namespace zetabound {

inline constexpr int kMaxModulus = 10000;

struct UnitGroupStructure {
    int modulus;
    long phi;  // group order
    // Independent cyclic generators (unit, order); their orders multiply to
    // phi.  Empty for q = 1, 2.
    std::vector<std::pair<long, long>> generators;
    std::vector<bool> is_unit;  // indexed by residue 0..q-1
    // Exponent vector per residue (empty for non-units): a residue a equals
    // prod_i generators[i].first ^ exponents[i] (mod q).
    std::vector<std::vector<long>> decomposition;
};

// Structure of (Z/qZ)^* for 1 <= q <= 10000, via prime factorization,
// primitive roots mod odd prime powers, the (-1, 5) generators mod 2^e, and
// CRT lifting.
UnitGroupStructure unit_group(int q);

struct DirichletCharacter {
    int modulus;
    int index;  // position in the canonical enumeration
    // chi(a) = e(log_table[a] / unity_order) on units; log_table holds -1 and
    // values holds 0 on non-units.  The integer table is the exact source of
    // truth; `values` is its binary64 image.
    long unity_order;  // lcm of the generator orders (1 for q = 1, 2)
    std::vector<long> log_table;
    std::vector<Complex> values;
    std::vector<long> exponents;  // chosen exponent per group generator
    long order;                   // multiplicative order of the character
    bool is_principal;
    bool is_primitive;
    int conductor;
};

// All phi(q) characters mod q in a deterministic order: exponent vectors
// enumerated lexicographically, so the principal character comes first.
std::vector<DirichletCharacter> characters_mod(int q);

struct LTerm {
    int a;
    Complex chi_a;
    Complex hurwitz_value;  // zeta(s, a/q)
};

struct LDecomposition {
    DirichletCharacter character;
    Complex s;
    std::vector<LTerm> terms;  // units a in increasing order
    Complex value;             // q^{-s} * sum_a chi(a) zeta(s, a/q)
    double abs_error_estimate;
};

// L(chi, s) through the Hurwitz decomposition.  s must lie outside the pole
// band for every character, principal or not: the evaluator works through
// zeta(s, a/q), which has its pole there.
LDecomposition dirichlet_L(const DirichletCharacter& chi, const Complex& s,
                           const EMConfig& cfg = {});

struct IdentityCheck {
    double residual;
    double combined_error;  // sum of the contributing error estimates
};

// |L(chi_0, s) - zeta(s) * prod_{p | q} (1 - p^{-s})| for the principal
// character mod q.
IdentityCheck check_principal_identity(int q, const Complex& s,
                                       const EMConfig& cfg = {});

// |zeta(s, 1/2) - (2^s - 1) * zeta(s)|.
IdentityCheck check_half_identity(const Complex& s, const EMConfig& cfg = {});

// Composite certificate that L(chi, sigma) for the character mod 2 has no
// zeros in (0, 1): closed-form sign arithmetic on [1/2, 1), transfer through
// the w = 1/2 identity on (0, 1/2), and a corroborating numeric scan.
CompositeCertificate certify_chi2_zero_free(const EMConfig& cfg = {});

}  // namespace zetabound
