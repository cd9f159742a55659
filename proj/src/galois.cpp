#include "stick/galois.hpp"

#include <algorithm>
#include <string>

#include "stick/error.hpp"

namespace stick {

namespace {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n)
{
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t n)
{
    std::int64_t result = 1 % n;
    base %= n;
    if (base < 0)
        base += n;
    while (e > 0) {
        if (e & 1)
            result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    return result;
}

std::int64_t order_of_residue(std::int64_t r, std::int64_t ell)
{
    for (std::int64_t d : divisors(ell - 1))
        if (pow_mod(r, d, ell) == 1)
            return d;
    throw Error(ErrorCode::InternalInvariant, "residue has no order dividing l-1");
}

}  // namespace

bool is_prime_small(std::int64_t n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0 || n % 3 == 0)
        return false;
    for (std::int64_t i = 5; i <= n / i; i += 6)
        if (n % i == 0 || n % (i + 2) == 0)
            return false;
    return true;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0)
            continue;
        small.push_back(d);
        if (d != n / d)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

CyclotomicModulus::CyclotomicModulus(std::int64_t ell) : ell_(ell), root_(0)
{
    if (ell < 3 || !is_prime_small(ell))
        throw Error(ErrorCode::NotPrime, std::to_string(ell) + " is not an odd prime");
    for (std::int64_t g = 1; g < ell; ++g) {
        if (order_of_residue(g, ell) == ell - 1) {
            root_ = g;
            break;
        }
    }
}

GroupElement element(std::int64_t a, const CyclotomicModulus& m)
{
    std::int64_t r = a % m.ell();
    if (r < 0)
        r += m.ell();
    if (r == 0)
        throw Error(ErrorCode::NotCoprime,
                    std::to_string(a) + " is not coprime to " + std::to_string(m.ell()));
    return GroupElement{r};
}

GroupElement multiply(GroupElement a, GroupElement b, const CyclotomicModulus& m)
{
    return GroupElement{mul_mod(a.residue, b.residue, m.ell())};
}

GroupElement inverse(GroupElement a, const CyclotomicModulus& m)
{
    // a^(l-2) = a^-1 by Fermat.
    return GroupElement{pow_mod(a.residue, m.ell() - 2, m.ell())};
}

GroupElement power(GroupElement a, std::int64_t e, const CyclotomicModulus& m)
{
    e %= m.group_order();
    if (e < 0)
        e += m.group_order();
    return GroupElement{pow_mod(a.residue, e, m.ell())};
}

std::int64_t multiplicative_order(std::int64_t p, const CyclotomicModulus& m)
{
    std::int64_t r = p % m.ell();
    if (r < 0)
        r += m.ell();
    if (r == 0)
        throw Error(ErrorCode::RamifiedPrime,
                    std::to_string(p) + " is divisible by " + std::to_string(m.ell()));
    return order_of_residue(r, m.ell());
}

std::int64_t multiplicative_order(const mpz_class& p, const CyclotomicModulus& m)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(m.ell()));
    if (r == 0)
        throw Error(ErrorCode::RamifiedPrime,
                    p.get_str() + " is divisible by " + std::to_string(m.ell()));
    return order_of_residue(r.get_si(), m.ell());
}

bool Subgroup::contains(GroupElement g) const
{
    return std::binary_search(members.begin(), members.end(), g);
}

Subgroup subgroup_of_order(const CyclotomicModulus& m, std::int64_t f)
{
    if (f <= 0 || m.group_order() % f != 0)
        throw Error(ErrorCode::NotADivisor,
                    std::to_string(f) + " does not divide " + std::to_string(m.group_order()));
    Subgroup sub;
    sub.order = f;
    GroupElement gen = power(GroupElement{m.primitive_root()}, m.group_order() / f, m);
    GroupElement x{1};
    for (std::int64_t k = 0; k < f; ++k) {
        sub.members.push_back(x);
        x = multiply(x, gen, m);
    }
    std::sort(sub.members.begin(), sub.members.end());
    return sub;
}

std::vector<GroupElement> coset_of(GroupElement u, const Subgroup& sub, const CyclotomicModulus& m)
{
    std::vector<GroupElement> out;
    out.reserve(sub.members.size());
    for (GroupElement h : sub.members)
        out.push_back(multiply(u, h, m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GroupElement> coset_representatives(const CyclotomicModulus& m, const Subgroup& sub)
{
    std::vector<bool> covered(static_cast<std::size_t>(m.ell()), false);
    std::vector<GroupElement> reps;
    for (std::int64_t u = 1; u < m.ell(); ++u) {
        if (covered[static_cast<std::size_t>(u)])
            continue;
        reps.push_back(GroupElement{u});
        for (GroupElement h : sub.members)
            covered[static_cast<std::size_t>(multiply(GroupElement{u}, h, m).residue)] = true;
    }
    return reps;
}

}  // namespace stick
