#pragma once

// The integral group ring Z[G] for G = Gal(Q(zeta_l)/Q), stored densely:
// coefficient of sigma_a lives at index a-1.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "stick/galois.hpp"

namespace stick {

class GroupRingElement {
public:
    /// The zero element.
    explicit GroupRingElement(const CyclotomicModulus& m);
    /// Throws Error(DimensionMismatch) unless coeffs.size() == l-1.
    GroupRingElement(const CyclotomicModulus& m, std::vector<mpz_class> coeffs);

    /// sum of sigma_r over the given residues (repeats accumulate).
    static GroupRingElement from_support(const CyclotomicModulus& m,
                                         std::span<const GroupElement> support);

    const CyclotomicModulus& modulus() const noexcept { return modulus_; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

    const mpz_class& operator[](GroupElement g) const { return coeffs_[index(g)]; }
    mpz_class& operator[](GroupElement g) { return coeffs_[index(g)]; }

    bool is_zero() const;
    /// True when every coefficient is 0 or 1.
    bool is_indicator() const;
    /// Residues with nonzero coefficient, ascending.
    std::vector<GroupElement> support() const;
    mpz_class coefficient_sum() const;
    std::size_t weight() const { return support().size(); }

    GroupRingElement& operator+=(const GroupRingElement& rhs);
    GroupRingElement& operator-=(const GroupRingElement& rhs);
    GroupRingElement& operator*=(const mpz_class& k);

    friend GroupRingElement operator+(GroupRingElement lhs, const GroupRingElement& rhs) { return lhs += rhs; }
    friend GroupRingElement operator-(GroupRingElement lhs, const GroupRingElement& rhs) { return lhs -= rhs; }
    friend GroupRingElement operator*(const mpz_class& k, GroupRingElement x) { return x *= k; }
    friend GroupRingElement operator-(GroupRingElement x) { return x *= -1; }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b)
    {
        return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::size_t index(GroupElement g) const { return static_cast<std::size_t>(g.residue - 1); }
    void require_same_modulus(const GroupRingElement& rhs) const;

    CyclotomicModulus modulus_;
    std::vector<mpz_class> coeffs_;
};

/// Left multiplication by sigma_c: the coefficient of sigma_a moves to sigma_{ca}.
GroupRingElement group_act(GroupElement c, const GroupRingElement& x);

/// N, the sum of all group elements.
GroupRingElement trace_element(const CyclotomicModulus& m);

/// theta_a = sum_{i=1}^{l-1} floor(a i / l) sigma_i^{-1}.
/// Throws Error(NotCoprime) unless a >= 1 and gcd(a, l) = 1.
GroupRingElement theta_a(const CyclotomicModulus& m, const mpz_class& a);

/// f_i = theta_{i+1} - theta_i, 1 <= i <= (l-1)/2; Error(IndexOutOfRange) otherwise.
GroupRingElement kummer_f(const CyclotomicModulus& m, std::int64_t i);

/// Sum of the canonical coset representatives of G modulo its order-f subgroup.
GroupRingElement theta_f_element(const CyclotomicModulus& m, std::int64_t f);

// Text forms. Support sets "{1,5}" are printed whenever every coefficient is
// 0 or 1; otherwise the coefficient form "2*s1 - 3*s5" is used. The parser
// also accepts "N" for the trace element and terms written without an
// explicit coefficient ("s1 + s5").
std::string format_element(const GroupRingElement& x);
std::string format_support(std::span<const GroupElement> support);
std::string format_coefficients(const GroupRingElement& x);
GroupRingElement parse_element(const CyclotomicModulus& m, std::string_view text);

}  // namespace stick
