#include "stick/factor.hpp"

#include <algorithm>
#include <map>

#include "stick/error.hpp"

namespace stick {

namespace {

constexpr unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr unsigned long kTrialBound = 10000;

bool miller_rabin(const mpz_class& n, unsigned long base)
{
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    mpz_class a = base, x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n - 1)
            return true;
    }
    return false;
}

mpz_class brent_rho(const mpz_class& n, unsigned long c)
{
    mpz_class y = 2, x, g = 1, q = 1, ys, diff;
    const unsigned long m = 128;
    auto step = [&](mpz_class& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    for (unsigned long r = 1; g == 1; r <<= 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i)
            step(y);
        for (unsigned long k = 0; k < r && g == 1; k += m) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                step(y);
                diff = abs(x - y);
                q = q * diff % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
    }
    if (g == n) {
        // Backtrack one step at a time from the last saved point.
        do {
            step(ys);
            diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split(const mpz_class& n, std::map<mpz_class, long>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        split(r, out);
        split(r, out);
        return;
    }
    for (unsigned long c = 1;; ++c) {
        mpz_class d = brent_rho(n, c);
        if (d != n) {
            split(d, out);
            split(n / d, out);
            return;
        }
    }
}

}  // namespace

bool is_prime(const mpz_class& n)
{
    if (n < 2)
        return false;
    for (unsigned long p : kBases) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    static const mpz_class deterministic_bound("3317044064679887385961981");
    if (n >= deterministic_bound)
        return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
    return std::all_of(std::begin(kBases), std::end(kBases), [&](unsigned long b) { return miller_rabin(n, b); });
}

std::vector<std::pair<mpz_class, long>> factor_integer(const mpz_class& n)
{
    if (n == 0)
        throw Error(ErrorCode::InvalidArgument, "cannot factor 0");
    mpz_class rest = abs(n);
    std::map<mpz_class, long> found;
    for (unsigned long p = 2; p < kTrialBound && rest > 1; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++found[mpz_class(p)];
        }
    }
    split(rest, found);
    for (const auto& [p, e] : found)
        if (!is_prime(p))
            throw Error(ErrorCode::InternalInvariant, "factorization produced composite " + p.get_str());
    return {found.begin(), found.end()};
}

}  // namespace stick
