#include "stick/norm_solver.hpp"

#include <algorithm>
#include <cctype>

#include "stick/error.hpp"
#include "stick/factor.hpp"

namespace stick {

mpq_class SignedFactorization::value() const
{
    mpq_class v = sign;
    for (const auto& [p, e] : factors) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
        v *= e > 0 ? mpq_class(pe) : mpq_class(mpz_class(1), pe);
    }
    v.canonicalize();
    return v;
}

SignedFactorization factor_rational(const mpz_class& numerator, const mpz_class& denominator)
{
    if (denominator == 0)
        throw Error(ErrorCode::InvalidArgument, "zero denominator");
    mpq_class a(numerator, denominator);
    a.canonicalize();
    return factor_rational(a);
}

SignedFactorization factor_rational(const mpq_class& a)
{
    SignedFactorization out;
    out.sign = sgn(a);
    if (out.sign == 0)
        return out;
    std::vector<PrimePower> merged;
    if (a.get_num() != 1 && a.get_num() != -1)
        for (auto& [p, e] : factor_integer(a.get_num()))
            merged.push_back({p, e});
    if (a.get_den() != 1)
        for (auto& [p, e] : factor_integer(a.get_den()))
            merged.push_back({p, -e});
    // Numerator and denominator are coprime, so no prime repeats.
    std::sort(merged.begin(), merged.end(), [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
    out.factors = std::move(merged);
    return out;
}

PrimeLocalData local_data(const CyclotomicModulus& m, const mpz_class& p)
{
    PrimeLocalData d;
    d.p = p;
    d.ramified = (p == m.ell());
    d.residue_degree = d.ramified ? 1 : multiplicative_order(p, m);
    return d;
}

namespace {

void add_assumption(NormVerdict& v, std::string_view a)
{
    if (std::find(v.assumptions.begin(), v.assumptions.end(), a) == v.assumptions.end())
        v.assumptions.emplace_back(a);
}

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

NormVerdict norm_solvable(const CyclotomicModulus& m, const mpq_class& a, const ClassNumberRecord& cd,
                          const std::optional<RSummary>& r_summary)
{
    if (cd.ell != m.ell())
        throw Error(ErrorCode::InvalidArgument,
                    "class number record for l=" + str(cd.ell) + " used with l=" + str(m.ell()));
    NormVerdict v;
    v.ell = m.ell();
    v.a = a;
    v.a.canonicalize();

    if (v.a == 0) {
        v.status = NormStatus::Solvable;
        v.trace.push_back({std::nullopt, NormRule::Zero, "x = 0", {}, {}, {}});
        return v;
    }
    if (v.a < 0) {
        v.status = NormStatus::NotSolvable;
        v.trace.push_back({std::nullopt, NormRule::Negative,
                           "Q(zeta_" + str(m.ell()) + ") is totally complex, so every nonzero norm is positive",
                           {}, {}, {}});
        return v;
    }

    SignedFactorization fac = factor_rational(v.a);
    std::vector<PrimeLocalData> local;
    for (const auto& pp : fac.factors) {
        local.push_back(local_data(m, pp.prime));
        const auto f = local.back().residue_degree;
        if (pp.exponent % f != 0)
            v.trace.push_back({pp.prime, NormRule::DegreeMismatch,
                               "v_p(a) = " + std::to_string(pp.exponent) + " is not a multiple of the residue degree "
                                   + str(f),
                               {}, {}, {}});
    }
    if (!v.trace.empty()) {
        v.status = NormStatus::NotSolvable;
        return v;
    }

    v.status = NormStatus::Solvable;
    const mpz_class ell_minus_one = m.group_order();
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        const auto& ld = local[i];
        const std::int64_t f = ld.residue_degree;
        RuleFiring fire;
        fire.prime = ld.p;

        if (ld.ramified) {
            fire.rule = NormRule::Ramified;
            fire.detail = "p = l is totally ramified: N(1 - zeta) = " + str(m.ell());
            v.trace.push_back(std::move(fire));
            continue;
        }
        fire.rejected.push_back("ramified: p != l");
        if (f == m.group_order()) {
            fire.rule = NormRule::Inert;
            fire.detail = "p is inert (f = " + str(f) + "): N(p) = p^" + str(f);
            v.trace.push_back(std::move(fire));
            continue;
        }
        fire.rejected.push_back("inert: f = " + str(f) + " < " + str(m.group_order()));

        const mpz_class fh = f * cd.h;
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), fh.get_mpz_t(), ell_minus_one.get_mpz_t());
        if (mpz_divisible_p(mpz_class(f).get_mpz_t(), g.get_mpz_t())) {
            const mpz_class k = f / g;
            s *= k;
            t *= k;
            if (fh * s + ell_minus_one * t != f)
                throw Error(ErrorCode::InternalInvariant, "Bezout exponent identity failed");
            fire.rule = NormRule::Bezout;
            fire.detail = "gcd(f*h, l-1) = gcd(" + fh.get_str() + ", " + ell_minus_one.get_str() + ") = "
                          + g.get_str() + " divides f = " + str(f) + "; with (beta) = P^" + cd.h.get_str()
                          + ", N(beta^s * p^t) = p^f since " + fh.get_str() + "*(" + s.get_str() + ") + "
                          + ell_minus_one.get_str() + "*(" + t.get_str() + ") = " + str(f);
            fire.s = s;
            fire.t = t;
            add_assumption(v, kAssumeHPlusOne);
            v.trace.push_back(std::move(fire));
            continue;
        }
        fire.rejected.push_back("bezout: gcd(f*h, l-1) = " + g.get_str() + " does not divide f = " + str(f));

        const bool h_prime = is_prime(cd.h);
        const bool trivial_r = r_summary && r_summary->is_trivial();
        if (h_prime && trivial_r && f > 1) {
            fire.rule = NormRule::PrincipalPrimes;
            fire.detail = "h = " + cd.h.get_str() + " is prime and R = {1}, so the primes of degree " + str(f)
                          + " above p are principal and have norm p^" + str(f);
            add_assumption(v, kAssumeHPlusOne);
            for (const auto& asn : r_summary->assumptions)
                add_assumption(v, asn);
            v.trace.push_back(std::move(fire));
            continue;
        }
        if (!h_prime)
            fire.rejected.push_back("principal_primes: h = " + cd.h.get_str() + " is not prime");
        else if (!r_summary)
            fire.rejected.push_back("principal_primes: no residue-generation table supplied");
        else if (!trivial_r)
            fire.rejected.push_back("principal_primes: R = {1} is not established");
        else
            fire.rejected.push_back("principal_primes: p splits completely (f = 1)");
        fire.rule = NormRule::NoRule;
        fire.detail = "no rule shows that p^" + str(f) + " is a norm";
        v.status = NormStatus::Unknown;
        v.trace.push_back(std::move(fire));
    }
    return v;
}

mpq_class parse_rational(std::string_view text)
{
    auto fail = [&](const char* why) -> mpq_class {
        throw Error(ErrorCode::ParseError, "cannot parse rational \"" + std::string(text) + "\": " + why);
    };
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
        negative = s[pos++] == '-';
    auto digits = [&](std::size_t from) {
        std::size_t end = from;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])))
            ++end;
        return end;
    };
    std::size_t num_end = digits(pos);
    if (num_end == pos)
        return fail("expected digits");
    mpz_class num(s.substr(pos, num_end - pos), 10);
    mpz_class den = 1;
    if (num_end < s.size()) {
        if (s[num_end] != '/')
            return fail("unexpected character");
        std::size_t den_end = digits(num_end + 1);
        if (den_end == num_end + 1 || den_end != s.size())
            return fail("expected digits after '/'");
        den = mpz_class(s.substr(num_end + 1), 10);
        if (den == 0)
            return fail("zero denominator");
    }
    mpq_class q(negative ? -num : num, den);
    q.canonicalize();
    return q;
}

std::string_view to_string(NormStatus s)
{
    switch (s) {
    case NormStatus::Solvable: return "SOLVABLE";
    case NormStatus::NotSolvable: return "NOT_SOLVABLE";
    case NormStatus::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::string_view to_string(NormRule r)
{
    switch (r) {
    case NormRule::Zero: return "zero";
    case NormRule::Negative: return "negative";
    case NormRule::DegreeMismatch: return "degree_mismatch";
    case NormRule::Ramified: return "ramified";
    case NormRule::Inert: return "inert";
    case NormRule::Bezout: return "bezout";
    case NormRule::PrincipalPrimes: return "principal_primes";
    case NormRule::NoRule: return "no_rule";
    }
    return "?";
}

NormStatus parse_norm_status(std::string_view s)
{
    for (NormStatus v : {NormStatus::Solvable, NormStatus::NotSolvable, NormStatus::Unknown})
        if (to_string(v) == s)
            return v;
    throw Error(ErrorCode::ParseError, "unknown norm status '" + std::string(s) + "'");
}

NormRule parse_norm_rule(std::string_view s)
{
    for (NormRule r : {NormRule::Zero, NormRule::Negative, NormRule::DegreeMismatch, NormRule::Ramified,
                       NormRule::Inert, NormRule::Bezout, NormRule::PrincipalPrimes, NormRule::NoRule})
        if (to_string(r) == s)
            return r;
    throw Error(ErrorCode::ParseError, "unknown norm rule '" + std::string(s) + "'");
}

}  // namespace stick
