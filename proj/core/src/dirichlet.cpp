#include <zetabound/dirichlet.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include <zetabound/kahan.hpp>

namespace zetabound {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> factors;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

long pow_mod(long base, long exp, long mod) {
    long r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// x = 1 (mod m2), x = r (mod m1), gcd(m1, m2) = 1.
long crt_with_one(long r, long m1, long m2) {
    long inv = 1, n = m2 % m1;
    // m2^{-1} mod m1 by Fermat-free brute force; moduli here are <= 10^4
    for (long t = 1; t < m1; ++t) {
        if (n * t % m1 == 1) {
            inv = t;
            break;
        }
    }
    long shift = (r - 1) % m1;
    if (shift < 0) shift += m1;
    return (1 + m2 * (shift * inv % m1)) % (m1 * m2);
}

struct LocalFactor {
    long pe;
    std::vector<std::pair<long, long>> gens;  // (generator mod pe, order)
    std::unordered_map<long, std::vector<long>> dlog;
};

LocalFactor local_structure(long p, int e) {
    LocalFactor f;
    f.pe = 1;
    for (int i = 0; i < e; ++i) f.pe *= p;

    if (p == 2) {
        if (e == 1) {
            f.dlog[1] = {};
        } else if (e == 2) {
            f.gens = {{3, 2}};
            f.dlog[1] = {0};
            f.dlog[3] = {1};
        } else {
            const long ord5 = 1L << (e - 2);
            f.gens = {{f.pe - 1, 2}, {5, ord5}};
            long v = 1;
            for (long y = 0; y < ord5; ++y) {
                f.dlog[v] = {0, y};
                f.dlog[f.pe - v] = {1, y};
                v = v * 5 % f.pe;
            }
        }
        return f;
    }

    const long phi = (f.pe / p) * (p - 1);
    const auto phi_primes = prime_divisors(phi);
    long g = 2;
    for (;; ++g) {
        if (g % p == 0) continue;
        bool primitive = true;
        for (long r : phi_primes) {
            if (pow_mod(g, phi / r, f.pe) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) break;
    }
    f.gens = {{g, phi}};
    long v = 1;
    for (long j = 0; j < phi; ++j) {
        f.dlog[v] = {j};
        v = v * g % f.pe;
    }
    return f;
}

Complex root_of_unity(long t, long order) {
    // quarter turns come out exact, so real characters stay exactly real
    if ((4 * t) % order == 0) {
        switch ((4 * t / order) % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double angle = kTwoPi * static_cast<double>(t) / static_cast<double>(order);
    return std::polar(1.0, angle);
}

void validate_modulus(int q) {
    if (q < 1 || q > kMaxModulus) {
        throw ParameterError("modulus must be in [1, 10000]");
    }
}

}  // namespace

UnitGroupStructure unit_group(int q) {
    validate_modulus(q);
    UnitGroupStructure g;
    g.modulus = q;
    g.is_unit.assign(q, false);
    g.decomposition.assign(q, {});

    const auto factors = factorize(q);
    std::vector<LocalFactor> locals;
    locals.reserve(factors.size());
    for (const auto& [p, e] : factors) locals.push_back(local_structure(p, e));

    for (const auto& lf : locals) {
        for (const auto& [gen, order] : lf.gens) {
            const long lifted = q == lf.pe ? gen : crt_with_one(gen, lf.pe, q / lf.pe);
            g.generators.emplace_back(lifted, order);
        }
    }

    g.phi = 0;
    for (long a = 0; a < q; ++a) {
        if (std::gcd(a, static_cast<long>(q)) != 1) continue;
        g.is_unit[a] = true;
        ++g.phi;
        auto& exps = g.decomposition[a];
        exps.reserve(g.generators.size());
        for (const auto& lf : locals) {
            const auto& local_exps = lf.dlog.at(a % lf.pe);
            exps.insert(exps.end(), local_exps.begin(), local_exps.end());
        }
    }

    long order_product = 1;
    for (const auto& [gen, order] : g.generators) order_product *= order;
    if (order_product != g.phi) {
        throw Error("unit group decomposition is inconsistent");
    }
    return g;
}

std::vector<DirichletCharacter> characters_mod(int q) {
    const UnitGroupStructure g = unit_group(q);
    const size_t r = g.generators.size();

    long unity = 1;
    for (const auto& [gen, order] : g.generators) {
        unity = std::lcm(unity, order);
    }

    // units that are = 1 mod d, per divisor d of q, shared by the conductor
    // search of every character
    std::vector<long> divisors;
    for (long d = 1; d <= q; ++d) {
        if (q % d == 0) divisors.push_back(d);
    }
    std::vector<std::vector<long>> kernel_candidates(divisors.size());
    for (size_t di = 0; di < divisors.size(); ++di) {
        const long d = divisors[di];
        for (long a = 0; a < q; ++a) {
            if (g.is_unit[a] && a % d == 1 % d) kernel_candidates[di].push_back(a);
        }
    }

    std::vector<DirichletCharacter> chars;
    chars.reserve(static_cast<size_t>(g.phi));

    std::vector<long> c(r, 0);
    for (long index = 0; index < g.phi; ++index) {
        DirichletCharacter chi;
        chi.modulus = q;
        chi.index = static_cast<int>(index);
        chi.unity_order = unity;
        chi.exponents = c;
        chi.log_table.assign(q, -1);
        chi.values.assign(q, Complex(0.0, 0.0));

        for (long a = 0; a < q; ++a) {
            if (!g.is_unit[a]) continue;
            long t = 0;
            for (size_t i = 0; i < r; ++i) {
                const long step = unity / g.generators[i].second;
                t = (t + c[i] % unity * (g.decomposition[a][i] % unity) % unity * step) % unity;
            }
            chi.log_table[a] = t;
            chi.values[a] = root_of_unity(t, unity);
        }

        chi.order = 1;
        for (size_t i = 0; i < r; ++i) {
            const long d = g.generators[i].second;
            chi.order = std::lcm(chi.order, d / std::gcd(d, c[i]));
        }
        chi.is_principal = std::all_of(c.begin(), c.end(),
                                       [](long x) { return x == 0; });

        chi.conductor = q;
        for (size_t di = 0; di < divisors.size(); ++di) {
            bool trivial = true;
            for (long a : kernel_candidates[di]) {
                if (chi.log_table[a] != 0) {
                    trivial = false;
                    break;
                }
            }
            if (trivial) {
                chi.conductor = static_cast<int>(divisors[di]);
                break;
            }
        }
        chi.is_primitive = chi.conductor == q;

        chars.push_back(std::move(chi));

        // lexicographic odometer: last exponent moves fastest
        for (size_t i = r; i-- > 0;) {
            if (++c[i] < g.generators[i].second) break;
            c[i] = 0;
        }
    }
    return chars;
}

LDecomposition dirichlet_L(const DirichletCharacter& chi, const Complex& s,
                           const EMConfig& cfg) {
    validate_modulus(chi.modulus);
    if (!is_finite(s)) throw DomainError("s must be finite");
    if (std::abs(s - Complex(1.0, 0.0)) < kPoleBand) {
        throw PoleError(
            "s inside the pole band: the Hurwitz decomposition has its pole at "
            "s = 1 for every character");
    }

    const int q = chi.modulus;
    LDecomposition dec;
    dec.character = chi;
    dec.s = s;

    KahanSum<Complex> sum;
    double err = 0.0;
    for (int a = 1; a <= q; ++a) {
        const Complex chi_a = chi.values[a % q];
        if (chi.log_table[a % q] < 0) continue;
        const EvalResult hz =
            hurwitz_zeta({s, static_cast<double>(a) / q}, cfg);
        sum.add(chi_a * hz.value);
        err += hz.abs_error_estimate;
        dec.terms.push_back({a, chi_a, hz.value});
    }

    const Complex prefactor = pow_real_base(static_cast<double>(q), -s);
    dec.value = prefactor * sum.value();
    dec.abs_error_estimate = std::abs(prefactor) * err;
    if (!is_finite(dec.value)) throw OverflowError("L value overflowed");
    return dec;
}

namespace {

double rounding_allowance(double lhs_mag, double rhs_mag) {
    return 64.0 * std::numeric_limits<double>::epsilon() * (lhs_mag + rhs_mag);
}

}  // namespace

IdentityCheck check_principal_identity(int q, const Complex& s,
                                       const EMConfig& cfg) {
    validate_modulus(q);
    const auto chars = characters_mod(q);
    const LDecomposition lhs = dirichlet_L(chars.front(), s, cfg);

    const EvalResult z = riemann_zeta(s, cfg);
    Complex prod(1.0, 0.0);
    for (long p : prime_divisors(q)) {
        prod *= Complex(1.0, 0.0) - pow_real_base(static_cast<double>(p), -s);
    }
    const Complex rhs = z.value * prod;

    IdentityCheck chk;
    chk.residual = std::abs(lhs.value - rhs);
    chk.combined_error = lhs.abs_error_estimate +
                         std::abs(prod) * z.abs_error_estimate +
                         rounding_allowance(std::abs(lhs.value), std::abs(rhs));
    return chk;
}

IdentityCheck check_half_identity(const Complex& s, const EMConfig& cfg) {
    const EvalResult lhs = hurwitz_zeta({s, 0.5}, cfg);
    const EvalResult z = riemann_zeta(s, cfg);
    const Complex factor = pow_real_base(2.0, s) - Complex(1.0, 0.0);
    const Complex rhs = factor * z.value;

    IdentityCheck chk;
    chk.residual = std::abs(lhs.value - rhs);
    chk.combined_error = lhs.abs_error_estimate +
                         std::abs(factor) * z.abs_error_estimate +
                         rounding_allowance(std::abs(lhs.value), std::abs(rhs));
    return chk;
}

CompositeCertificate certify_chi2_zero_free(const EMConfig& cfg) {
    const ScanSubject subject = DirichletLSubject{2, 0};
    const std::string id = subject_id(subject);

    CompositeCertificate cert;
    cert.subject = id;
    cert.conclusion = "no zeros in (0, 1)";

    ZeroFreeCertificate upper;
    upper.kind = CertKind::theorem_exact;
    upper.interval = {0.5, 1.0 - kPoleBand, false, true};
    upper.subject = id;
    upper.conclusion = "negative";
    upper.reasoning = {
        "L(chi, sigma) = 2^{-sigma} zeta(sigma, 1/2) for the character mod 2",
        "2^{-sigma} > 0, so the sign is the sign of zeta(sigma, 1/2)",
        "for sigma in [1/2, 1): 1 - sigma <= 1/2 = w, so the closed-form "
        "bound (1 - sigma - w)/((1 - sigma) w^sigma) is <= 0",
        "zeta(sigma, 1/2) is strictly below that bound, hence negative",
    };
    for (double sigma : {0.5, 0.75, 1.0 - kPoleBand}) {
        upper.bound_samples.push_back({sigma, 0.5, theorem_bound({sigma, 0.5})});
    }
    cert.parts.push_back(std::move(upper));

    ZeroFreeCertificate lower;
    lower.kind = CertKind::identity_transfer;
    lower.interval = {0.0, 0.5, true, true};
    lower.subject = id;
    lower.conclusion = "negative";
    lower.reasoning = {
        "zeta(sigma, 1/2) = (2^sigma - 1) zeta(sigma), and 2^sigma - 1 > 0 "
        "for sigma > 0",
        "for sigma in (0, 1/2): 1 - sigma <= 1 = w holds at w = 1, so "
        "zeta(sigma) is negative by the closed-form bound",
        "L(chi, sigma) = 2^{-sigma} (2^sigma - 1) zeta(sigma) < 0",
    };
    for (double sigma : {0.1, 0.25, 0.4}) {
        lower.bound_samples.push_back({sigma, 1.0, theorem_bound({sigma, 1.0})});
    }
    cert.parts.push_back(std::move(lower));

    bool corroborated = false;
    try {
        ZeroFreeCertificate scan = scan_sign(subject, 0.01, 0.99, 0.01, cfg);
        corroborated = scan.conclusion == "no zeros" && !scan.scan_records.empty() &&
                       scan.scan_records.front().sign == Sign::neg;
        cert.parts.push_back(std::move(scan));
    } catch (const ScanAborted& e) {
        ZeroFreeCertificate failed;
        failed.kind = CertKind::numeric_scan;
        failed.interval = {0.01, 0.99, false, false};
        failed.subject = id;
        failed.conclusion = std::string("corroboration failed: ") + e.what();
        failed.scan_records = e.partial();
        failed.complete = false;
        cert.parts.push_back(std::move(failed));
    }
    cert.corroboration_ok = corroborated;
    return cert;
}

}  // namespace zetabound
