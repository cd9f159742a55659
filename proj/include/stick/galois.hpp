#pragma once

// Arithmetic in G = Gal(Q(zeta_l)/Q) ~ (Z/lZ)^*, a cyclic group of order l-1.
// The automorphism sigma_a : zeta -> zeta^a is represented by its residue a.

#include <compare>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace stick {

/// Deterministic trial-division primality test.
bool is_prime_small(std::int64_t n);

/// Positive divisors of n in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// The conductor l of Q(zeta_l); always an odd prime.
class CyclotomicModulus {
public:
    /// Throws Error(NotPrime) unless ell is an odd prime.
    explicit CyclotomicModulus(std::int64_t ell);

    std::int64_t ell() const noexcept { return ell_; }
    /// |G| = l - 1.
    std::int64_t group_order() const noexcept { return ell_ - 1; }
    /// (l - 1) / 2, the number of Kummer generators f_i.
    std::int64_t half() const noexcept { return (ell_ - 1) / 2; }
    /// Smallest primitive root mod l.
    std::int64_t primitive_root() const noexcept { return root_; }

    friend bool operator==(const CyclotomicModulus&, const CyclotomicModulus&) = default;

private:
    std::int64_t ell_;
    std::int64_t root_;
};

/// sigma_a, with 1 <= a <= l-1.
struct GroupElement {
    std::int64_t residue = 1;

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Reduces any integer coprime to l into a group element.
/// Throws Error(NotCoprime) when l | a.
GroupElement element(std::int64_t a, const CyclotomicModulus& m);

GroupElement multiply(GroupElement a, GroupElement b, const CyclotomicModulus& m);
GroupElement inverse(GroupElement a, const CyclotomicModulus& m);
GroupElement power(GroupElement a, std::int64_t e, const CyclotomicModulus& m);

/// Order of p mod l; for an unramified rational prime p this is its residue
/// degree in Q(zeta_l). Throws Error(RamifiedPrime) when l | p.
std::int64_t multiplicative_order(std::int64_t p, const CyclotomicModulus& m);
std::int64_t multiplicative_order(const mpz_class& p, const CyclotomicModulus& m);

struct Subgroup {
    std::int64_t order = 1;
    std::vector<GroupElement> members;  // ascending

    bool contains(GroupElement g) const;
};

/// The unique subgroup of order f. Throws Error(NotADivisor) unless f | l-1.
Subgroup subgroup_of_order(const CyclotomicModulus& m, std::int64_t f);

/// Smallest member of each coset of `sub`, ascending.
std::vector<GroupElement> coset_representatives(const CyclotomicModulus& m, const Subgroup& sub);

/// The coset u*sub, ascending.
std::vector<GroupElement> coset_of(GroupElement u, const Subgroup& sub, const CyclotomicModulus& m);

}  // namespace stick
