#include "stick/stickelberger.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "stick/error.hpp"

namespace stick {

namespace {

IntMatrix basis_matrix(const CyclotomicModulus& m)
{
    std::vector<IntVector> cols;
    for (std::int64_t i = 1; i <= m.half(); ++i)
        cols.push_back(kummer_f(m, i).coeffs());
    cols.push_back(trace_element(m).coeffs());
    return IntMatrix::from_columns(cols);
}

std::vector<std::int64_t> residues(const std::vector<GroupElement>& gs)
{
    std::vector<std::int64_t> out;
    out.reserve(gs.size());
    for (GroupElement g : gs)
        out.push_back(g.residue);
    return out;
}

GroupRingElement coset_trace(const CyclotomicModulus& m, const std::vector<std::int64_t>& reps)
{
    GroupRingElement x(m);
    for (std::int64_t r : reps)
        x[element(r, m)] += 1;
    return x;
}

}  // namespace

KummerBasis::KummerBasis(const CyclotomicModulus& m) : modulus_(m), solver_(basis_matrix(m))
{
    if (solver_.rank() != static_cast<std::size_t>(m.half() + 1))
        throw Error(ErrorCode::InternalInvariant,
                    "Kummer basis for l=" + std::to_string(m.ell()) + " has rank " + std::to_string(solver_.rank()));
}

GroupRingElement KummerBasis::column(std::size_t j) const
{
    return GroupRingElement(modulus_, matrix().column(j));
}

MembershipResult KummerBasis::member(const GroupRingElement& theta) const
{
    if (!(theta.modulus() == modulus_))
        throw Error(ErrorCode::ModulusMismatch,
                    "element over l=" + std::to_string(theta.modulus().ell()) + " tested against basis for l="
                        + std::to_string(modulus_.ell()));
    SolveOutcome out = solver_.solve(theta.coeffs());
    if (auto* sol = std::get_if<Solution>(&out))
        return InS{std::move(sol->x)};
    return NotInS{std::move(out)};
}

bool verify_membership(const CyclotomicModulus& m, const GroupRingElement& theta, const MembershipResult& r)
{
    if (!(theta.modulus() == m))
        return false;
    IntMatrix fresh = basis_matrix(m);
    if (const auto* in = std::get_if<InS>(&r))
        return verify_outcome(fresh, theta.coeffs(), Solution{in->coefficients});
    const auto& cert = std::get<NotInS>(r).certificate;
    return !std::holds_alternative<Solution>(cert) && verify_outcome(fresh, theta.coeffs(), cert);
}

void require_h_plus_one(const CyclotomicModulus& m, const ClassNumberRecord& cd, const VerdictOptions& opts)
{
    if (cd.ell != m.ell())
        throw Error(ErrorCode::InvalidArgument,
                    "class number record for l=" + std::to_string(cd.ell) + " used with l=" + std::to_string(m.ell()));
    if (opts.assume_h_plus_one)
        return;
    if (m.ell() >= kHPlusKnownBound)
        throw Error(ErrorCode::HPlusUnknown,
                    "h_l^+ = 1 is only known for l < 100; pass the assume-h-plus-one flag for l="
                        + std::to_string(m.ell()));
    if (cd.h_plus != 1)
        throw Error(ErrorCode::HPlusUnknown,
                    "h_plus = " + cd.h_plus.get_str() + " for l=" + std::to_string(m.ell()));
}

ResidueGenerationVerdict residue_generation_verdict(const KummerBasis& basis, std::int64_t f,
                                                    const ClassNumberRecord& cd, const VerdictOptions& opts)
{
    const CyclotomicModulus& m = basis.modulus();
    Subgroup sub = subgroup_of_order(m, f);
    require_h_plus_one(m, cd, opts);

    ResidueGenerationVerdict v;
    v.ell = m.ell();
    v.f = f;
    if (f == 1) {
        v.status = RStatus::InR;
        v.reason.kind = ReasonKind::DensityTheorem;
        return v;
    }
    if (cd.h == 1) {
        v.status = RStatus::InR;
        v.reason.kind = ReasonKind::TrivialClassGroup;
        return v;
    }
    if (f == m.group_order()) {
        v.status = RStatus::NotInR;
        v.reason.kind = ReasonKind::InertNontrivialClass;
        return v;
    }

    auto canonical = coset_representatives(m, sub);
    std::vector<std::int64_t> reps = residues(canonical);
    auto not_in_r = [&](std::vector<std::int64_t> used, MembershipResult r, std::size_t tested) {
        v.status = RStatus::NotInR;
        v.reason.kind = ReasonKind::ThetaNotInS;
        v.reason.representatives = std::move(used);
        v.reason.variants_tested = tested;
        v.reason.membership = std::move(r);
        v.assumptions.emplace_back(kAssumeHPlusOne);
        if (opts.assume_h_plus_one)
            v.assumptions.emplace_back(kAssumeHPlusByUser);
        v.assumptions.emplace_back(kAssumeIndexHMinus);
        return v;
    };

    std::size_t tested = 1;
    MembershipResult first = basis.member(coset_trace(m, reps));
    if (!is_member(first))
        return not_in_r(reps, std::move(first), tested);

    // Every other choice of representatives is the canonical trace plus a sum
    // of single-coset swaps, so checking each swap covers all choices.
    for (std::size_t k = 0; k < canonical.size(); ++k) {
        for (GroupElement alt : coset_of(canonical[k], sub, m)) {
            if (alt == canonical[k])
                continue;
            ++tested;
            std::vector<std::int64_t> variant = reps;
            variant[k] = alt.residue;
            MembershipResult r = basis.member(coset_trace(m, variant));
            if (!is_member(r))
                return not_in_r(std::move(variant), std::move(r), tested);
        }
    }

    v.status = RStatus::Inconclusive;
    v.reason.kind = ReasonKind::ThetaInS;
    v.reason.representatives = reps;
    v.reason.variants_tested = tested;
    v.reason.membership = std::move(first);
    return v;
}

ResidueGenerationVerdict residue_generation_verdict(const CyclotomicModulus& m, std::int64_t f,
                                                    const ClassNumberRecord& cd, const VerdictOptions& opts)
{
    // Fail on preconditions before paying for the basis.
    subgroup_of_order(m, f);
    require_h_plus_one(m, cd, opts);
    return residue_generation_verdict(KummerBasis(m), f, cd, opts);
}

std::vector<ResidueGenerationVerdict> compute_R_table(const CyclotomicModulus& m, const ClassNumberRecord& cd,
                                                      const VerdictOptions& opts)
{
    require_h_plus_one(m, cd, opts);
    std::vector<ResidueGenerationVerdict> out;
    std::optional<KummerBasis> basis;
    for (std::int64_t f : divisors(m.group_order())) {
        // The basis is only needed once some f reaches the membership test.
        if (!basis && f != 1 && cd.h != 1 && f != m.group_order())
            basis.emplace(m);
        if (basis) {
            out.push_back(residue_generation_verdict(*basis, f, cd, opts));
            continue;
        }
        ResidueGenerationVerdict v;
        v.ell = m.ell();
        v.f = f;
        if (f == 1) {
            v.status = RStatus::InR;
            v.reason.kind = ReasonKind::DensityTheorem;
        } else if (cd.h == 1) {
            v.status = RStatus::InR;
            v.reason.kind = ReasonKind::TrivialClassGroup;
        } else {
            v.status = RStatus::NotInR;
            v.reason.kind = ReasonKind::InertNontrivialClass;
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool verify_verdict(const ResidueGenerationVerdict& v)
{
    if (!v.reason.membership)
        return v.reason.kind != ReasonKind::ThetaNotInS && v.reason.kind != ReasonKind::ThetaInS;
    bool member = is_member(*v.reason.membership);
    if (member != (v.reason.kind == ReasonKind::ThetaInS))
        return false;
    CyclotomicModulus m(v.ell);
    Subgroup sub = subgroup_of_order(m, v.f);
    const auto& reps = v.reason.representatives;
    if (reps.size() != static_cast<std::size_t>(m.group_order() / v.f))
        return false;
    // The representatives must hit every coset exactly once.
    std::vector<bool> hit(static_cast<std::size_t>(m.ell()), false);
    for (std::int64_t r : reps) {
        if (r < 1 || r >= m.ell())
            return false;
        for (GroupElement g : coset_of(GroupElement{r}, sub, m)) {
            if (hit[static_cast<std::size_t>(g.residue)])
                return false;
            hit[static_cast<std::size_t>(g.residue)] = true;
        }
    }
    return verify_membership(m, coset_trace(m, reps), *v.reason.membership);
}

RSummary summarize(const std::vector<ResidueGenerationVerdict>& table)
{
    RSummary s;
    for (const auto& v : table) {
        if (v.status == RStatus::InR)
            s.in_r.push_back(v.f);
        else if (v.status == RStatus::Inconclusive)
            s.inconclusive.push_back(v.f);
        for (const auto& a : v.assumptions)
            if (std::find(s.assumptions.begin(), s.assumptions.end(), a) == s.assumptions.end())
                s.assumptions.push_back(a);
    }
    return s;
}

std::vector<std::vector<ResidueGenerationVerdict>> scan_range(std::int64_t ell_min, std::int64_t ell_max,
                                                              const ClassNumberTable& table,
                                                              const VerdictOptions& opts, unsigned jobs)
{
    std::vector<CyclotomicModulus> moduli;
    for (std::int64_t ell = std::max<std::int64_t>(ell_min, 3); ell <= ell_max; ++ell) {
        if (ell % 2 == 0 || !is_prime_small(ell))
            continue;
        CyclotomicModulus m(ell);
        require_h_plus_one(m, table.at(ell), opts);
        moduli.push_back(m);
    }

    std::vector<std::vector<ResidueGenerationVerdict>> out(moduli.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(moduli.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < moduli.size(); ++i)
            out[i] = compute_R_table(moduli[i], table.at(moduli[i].ell()), opts);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < moduli.size(); i = next++) {
                    try {
                        out[i] = compute_R_table(moduli[i], table.at(moduli[i].ell()), opts);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                    }
                }
            });
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

StressSummary representative_stress(const KummerBasis& basis, std::int64_t f, std::size_t samples,
                                    std::uint64_t seed)
{
    const CyclotomicModulus& m = basis.modulus();
    Subgroup sub = subgroup_of_order(m, f);
    auto canonical = coset_representatives(m, sub);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, sub.members.size() - 1);
    StressSummary s;
    for (std::size_t n = 0; n < samples; ++n) {
        std::vector<std::int64_t> reps;
        for (GroupElement c : canonical)
            reps.push_back(multiply(c, sub.members[pick(rng)], m).residue);
        ++s.samples;
        if (is_member(basis.member(coset_trace(m, reps))))
            ++s.in_s;
        else
            ++s.not_in_s;
    }
    return s;
}

std::string_view to_string(RStatus s)
{
    switch (s) {
    case RStatus::InR: return "IN_R";
    case RStatus::NotInR: return "NOT_IN_R";
    case RStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::string_view to_string(ReasonKind k)
{
    switch (k) {
    case ReasonKind::DensityTheorem: return "density_theorem";
    case ReasonKind::TrivialClassGroup: return "trivial_class_group";
    case ReasonKind::InertNontrivialClass: return "inert_nontrivial_class";
    case ReasonKind::ThetaNotInS: return "theta_not_in_S";
    case ReasonKind::ThetaInS: return "theta_in_S";
    }
    return "?";
}

RStatus parse_rstatus(std::string_view s)
{
    for (RStatus v : {RStatus::InR, RStatus::NotInR, RStatus::Inconclusive})
        if (to_string(v) == s)
            return v;
    throw Error(ErrorCode::ParseError, "unknown verdict status '" + std::string(s) + "'");
}

ReasonKind parse_reason_kind(std::string_view s)
{
    for (ReasonKind k : {ReasonKind::DensityTheorem, ReasonKind::TrivialClassGroup, ReasonKind::InertNontrivialClass,
                         ReasonKind::ThetaNotInS, ReasonKind::ThetaInS})
        if (to_string(k) == s)
            return k;
    throw Error(ErrorCode::ParseError, "unknown verdict reason '" + std::string(s) + "'");
}

}  // namespace stick
