#pragma once

// The Kummer basis {f_1, ..., f_{(l-1)/2}, N} of the Stickelberger ideal S,
// certificate-bearing membership tests, and the per-(l, f) verdicts on whether
// classes of degree-f primes generate the class group of Q(zeta_l).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stick/class_data.hpp"
#include "stick/galois.hpp"
#include "stick/group_ring.hpp"
#include "stick/zlattice.hpp"

namespace stick {

/// theta = sum_i coefficients[i] * column_i, columns ordered f_1..f_{(l-1)/2}, N.
struct InS {
    IntVector coefficients;

    friend bool operator==(const InS&, const InS&) = default;
};

/// certificate is a RationalInfeasible or NonIntegral outcome.
struct NotInS {
    SolveOutcome certificate;

    friend bool operator==(const NotInS&, const NotInS&) = default;
};

using MembershipResult = std::variant<InS, NotInS>;

inline bool is_member(const MembershipResult& r) { return std::holds_alternative<InS>(r); }

class KummerBasis {
public:
    /// Verifies the rank is (l+1)/2 at construction.
    explicit KummerBasis(const CyclotomicModulus& m);

    const CyclotomicModulus& modulus() const noexcept { return modulus_; }
    const IntMatrix& matrix() const noexcept { return solver_.matrix(); }
    std::size_t rank() const noexcept { return solver_.rank(); }
    /// Column j as a group ring element (j == (l-1)/2 is N).
    GroupRingElement column(std::size_t j) const;

    /// Throws Error(ModulusMismatch) for an element over another field.
    MembershipResult member(const GroupRingElement& theta) const;

private:
    CyclotomicModulus modulus_;
    LatticeSolver solver_;
};

inline KummerBasis kummer_basis(const CyclotomicModulus& m) { return KummerBasis(m); }
inline MembershipResult member_of_S(const KummerBasis& basis, const GroupRingElement& theta)
{
    return basis.member(theta);
}

/// Checks a membership answer against a freshly built basis matrix.
bool verify_membership(const CyclotomicModulus& m, const GroupRingElement& theta, const MembershipResult& r);

enum class RStatus { InR, NotInR, Inconclusive };

enum class ReasonKind {
    DensityTheorem,        // f = 1
    TrivialClassGroup,     // h = 1
    InertNontrivialClass,  // f = l-1, h > 1: inert primes are principal
    ThetaNotInS,           // some coset trace lies outside S
    ThetaInS,              // every coset trace lies in S
};

struct VerdictReason {
    ReasonKind kind = ReasonKind::DensityTheorem;
    /// Coset representatives of the coset trace whose membership is reported.
    std::vector<std::int64_t> representatives;
    /// Number of coset traces tested (canonical plus single-coset swaps).
    std::size_t variants_tested = 0;
    std::optional<MembershipResult> membership;

    friend bool operator==(const VerdictReason&, const VerdictReason&) = default;
};

struct ResidueGenerationVerdict {
    std::int64_t ell = 0;
    std::int64_t f = 0;
    RStatus status = RStatus::Inconclusive;
    VerdictReason reason;
    std::vector<std::string> assumptions;

    friend bool operator==(const ResidueGenerationVerdict&, const ResidueGenerationVerdict&) = default;
};

inline constexpr std::string_view kAssumeHPlusOne = "h_plus_equals_one";
inline constexpr std::string_view kAssumeHPlusByUser = "h_plus_assumed_by_user";
inline constexpr std::string_view kAssumeIndexHMinus = "index_h_minus";

struct VerdictOptions {
    /// Permit conductors with unknown or nontrivial h_plus by assuming h_plus = 1.
    bool assume_h_plus_one = false;
};

/// Throws Error(HPlusUnknown) unless h_plus = 1 is known for the record or
/// assumed through the options, and Error(InvalidArgument) if the record is
/// for another conductor.
void require_h_plus_one(const CyclotomicModulus& m, const ClassNumberRecord& cd, const VerdictOptions& opts);

/// Decides f in R for Q(zeta_l)/Q. Rules, first match wins: f = 1 is in R;
/// h = 1 puts every f in R; f = l-1 with h > 1 is not in R; otherwise the
/// canonical coset trace theta_f and then each single-coset-swap variant is
/// tested for membership in S. A variant outside S gives NOT_IN_R with its
/// certificate; if all lie in S (hence every choice of representatives does)
/// the verdict is INCONCLUSIVE.
ResidueGenerationVerdict residue_generation_verdict(const KummerBasis& basis, std::int64_t f,
                                                    const ClassNumberRecord& cd, const VerdictOptions& opts = {});
ResidueGenerationVerdict residue_generation_verdict(const CyclotomicModulus& m, std::int64_t f,
                                                    const ClassNumberRecord& cd, const VerdictOptions& opts = {});

/// One verdict per divisor of l-1, ascending.
std::vector<ResidueGenerationVerdict> compute_R_table(const CyclotomicModulus& m, const ClassNumberRecord& cd,
                                                      const VerdictOptions& opts = {});

/// Re-derives the coset trace named in a verdict and re-verifies its
/// certificate against a fresh basis. Verdicts without membership data pass.
bool verify_verdict(const ResidueGenerationVerdict& v);

/// Summary of a full table: is R = {1}, and under which assumptions.
struct RSummary {
    std::vector<std::int64_t> in_r;
    std::vector<std::int64_t> inconclusive;
    std::vector<std::string> assumptions;

    bool is_trivial() const { return inconclusive.empty() && in_r.size() == 1 && in_r.front() == 1; }
};
RSummary summarize(const std::vector<ResidueGenerationVerdict>& table);

/// Verdict tables for every odd prime in [ell_min, ell_max], ascending.
/// Preconditions for every conductor are checked before any work starts;
/// with jobs > 1 conductors are processed by a worker pool. Output does not
/// depend on jobs.
std::vector<std::vector<ResidueGenerationVerdict>> scan_range(std::int64_t ell_min, std::int64_t ell_max,
                                                              const ClassNumberTable& table,
                                                              const VerdictOptions& opts = {},
                                                              unsigned jobs = 1);

/// Membership tags of randomly chosen coset-representative sets for theta_f.
struct StressSummary {
    std::size_t samples = 0;
    std::size_t in_s = 0;
    std::size_t not_in_s = 0;
};
StressSummary representative_stress(const KummerBasis& basis, std::int64_t f, std::size_t samples,
                                    std::uint64_t seed);

std::string_view to_string(RStatus s);
std::string_view to_string(ReasonKind k);
RStatus parse_rstatus(std::string_view s);
ReasonKind parse_reason_kind(std::string_view s);

}  // namespace stick
