#pragma once

// Solvability of |N_{Q(zeta_l)/Q}(x)| = a for rational a. The engine decides
// solvability only; witnesses are symbolic recipes, never field elements.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "stick/class_data.hpp"
#include "stick/galois.hpp"
#include "stick/stickelberger.hpp"

namespace stick {

struct PrimePower {
    mpz_class prime;
    long exponent = 0;  // nonzero

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct SignedFactorization {
    int sign = 0;  // -1, 0, +1
    std::vector<PrimePower> factors;  // primes strictly increasing

    mpq_class value() const;
};

/// Throws Error(InvalidArgument) when denominator is 0.
SignedFactorization factor_rational(const mpz_class& numerator, const mpz_class& denominator);
SignedFactorization factor_rational(const mpq_class& a);

struct PrimeLocalData {
    mpz_class p;
    bool ramified = false;
    std::int64_t residue_degree = 1;
};

PrimeLocalData local_data(const CyclotomicModulus& m, const mpz_class& p);

enum class NormStatus { Solvable, NotSolvable, Unknown };

enum class NormRule {
    Zero,            // a = 0, witness x = 0
    Negative,        // norms from a totally complex field are positive
    DegreeMismatch,  // f_p does not divide v_p(a)
    Ramified,        // p = l: N(1 - zeta) = l
    Inert,           // f_p = l-1: N(p) = p^f
    Bezout,          // gcd(f h, l-1) | f: beta^s p^t with N(beta) = p^{fh}
    PrincipalPrimes, // h prime and R = {1}: primes of degree f > 1 are principal
    NoRule,
};

struct RuleFiring {
    std::optional<mpz_class> prime;
    NormRule rule = NormRule::NoRule;
    std::string detail;
    /// Earlier rules that were tried for this prime and did not apply.
    std::vector<std::string> rejected;
    /// For Bezout: f h s + (l-1) t = f.
    std::optional<mpz_class> s;
    std::optional<mpz_class> t;

    friend bool operator==(const RuleFiring&, const RuleFiring&) = default;
};

struct NormVerdict {
    std::int64_t ell = 0;
    mpq_class a;
    NormStatus status = NormStatus::Unknown;
    std::vector<RuleFiring> trace;
    std::vector<std::string> assumptions;

    friend bool operator==(const NormVerdict&, const NormVerdict&) = default;
};

/// Decides |N(x)| = a. `r_summary`, when given, is the residue-generation
/// table for the same l and enables the principal-primes rule. Throws
/// Error(InvalidArgument) if cd is for another conductor.
NormVerdict norm_solvable(const CyclotomicModulus& m, const mpq_class& a, const ClassNumberRecord& cd,
                          const std::optional<RSummary>& r_summary = std::nullopt);

/// Parses "n", "-n" or "n/d" exactly. Throws Error(ParseError).
mpq_class parse_rational(std::string_view text);

std::string_view to_string(NormStatus s);
std::string_view to_string(NormRule r);
NormStatus parse_norm_status(std::string_view s);
NormRule parse_norm_rule(std::string_view s);

}  // namespace stick
