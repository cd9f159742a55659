#include "stick/report.hpp"

#include <sstream>

#include "stick/group_ring.hpp"

namespace stick {

namespace {

std::string sigma(std::size_t row) { return "s" + std::to_string(row + 1); }

// Renders sum_r c_r * [coefficient of s_r] as a linear form over the rows.
std::string row_form(const IntVector& u)
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t r = 0; r < u.size(); ++r) {
        if (u[r] == 0)
            continue;
        mpz_class mag = abs(u[r]);
        out << (first ? (u[r] < 0 ? "-" : "") : (u[r] < 0 ? " - " : " + "));
        out << mag.get_str() << "*[" << sigma(r) << "]";
        first = false;
    }
    return first ? "0" : out.str();
}

std::string coefficient_list(const CyclotomicModulus& m, const IntVector& c)
{
    std::ostringstream out;
    out << "a_0 = " << c.back().get_str();
    for (std::int64_t i = 1; i <= m.half(); ++i)
        out << ", a_" << i << " = " << c[static_cast<std::size_t>(i - 1)].get_str();
    return out.str();
}

std::string join(const std::vector<std::string>& xs)
{
    std::string out;
    for (const auto& x : xs)
        out += (out.empty() ? "" : ", ") + x;
    return out;
}

std::string int_list(const std::vector<std::int64_t>& xs)
{
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

}  // namespace

std::string describe_outcome(const CyclotomicModulus&, const SolveOutcome& o)
{
    std::ostringstream out;
    if (const auto* s = std::get_if<Solution>(&o)) {
        out << "integer solution x = (";
        for (std::size_t i = 0; i < s->x.size(); ++i)
            out << (i ? ", " : "") << s->x[i].get_str();
        out << ")";
    } else if (const auto* r = std::get_if<RationalInfeasible>(&o)) {
        out << "no rational solution: the row combination " << row_form(r->dual)
            << " vanishes on every basis element but not on the target";
    } else {
        const auto& n = std::get<NonIntegral>(o);
        out << "rational solution is not integral: HNF coordinate " << n.pivot << " equals "
            << n.value.get_str() << "; the form (" << row_form(n.dual) << ")/" << n.denominator.get_str()
            << " is integral on every basis element but not on the target";
    }
    return out.str();
}

std::string describe_membership(const CyclotomicModulus& m, const MembershipResult& r)
{
    if (const auto* in = std::get_if<InS>(&r))
        return "in S: " + coefficient_list(m, in->coefficients);
    return "not in S: " + describe_outcome(m, std::get<NotInS>(r).certificate);
}

std::string render_basis(const KummerBasis& basis)
{
    std::ostringstream out;
    const auto& m = basis.modulus();
    for (std::int64_t i = 1; i <= m.half(); ++i)
        out << "f_" << i << " = " << format_element(basis.column(static_cast<std::size_t>(i - 1))) << "\n";
    out << "N = " << format_element(basis.column(static_cast<std::size_t>(m.half()))) << "\n";
    return out.str();
}

std::string render_verdict(const ResidueGenerationVerdict& v)
{
    std::ostringstream out;
    out << "f=" << v.f << "  " << to_string(v.status) << "  ";
    switch (v.reason.kind) {
    case ReasonKind::DensityTheorem:
        out << "every class contains primes of residue degree 1";
        break;
    case ReasonKind::TrivialClassGroup:
        out << "class number is 1";
        break;
    case ReasonKind::InertNontrivialClass:
        out << "degree l-1 primes are inert, hence principal, and h > 1";
        break;
    case ReasonKind::ThetaNotInS:
        out << "coset trace over " << int_list(v.reason.representatives) << " is "
            << describe_membership(CyclotomicModulus(v.ell), *v.reason.membership) << " (" << v.reason.variants_tested
            << " representative set" << (v.reason.variants_tested == 1 ? "" : "s") << " tested)";
        break;
    case ReasonKind::ThetaInS:
        out << "every coset trace lies in S (" << v.reason.variants_tested << " representative sets tested); canonical "
            << int_list(v.reason.representatives) << " is "
            << describe_membership(CyclotomicModulus(v.ell), *v.reason.membership);
        break;
    }
    if (!v.assumptions.empty())
        out << "  [assumes " << join(v.assumptions) << "]";
    return out.str();
}

std::string render_table(const std::vector<ResidueGenerationVerdict>& table, const ClassNumberRecord& cd)
{
    std::ostringstream out;
    out << "l=" << cd.ell << "  h=" << cd.h.get_str() << " (h+=" << cd.h_plus.get_str()
        << ", h-=" << cd.h_minus.get_str() << ")\n";
    for (const auto& v : table)
        out << render_verdict(v) << "\n";
    RSummary s = summarize(table);
    out << "R = " << int_list(s.in_r);
    if (!s.inconclusive.empty())
        out << ", undecided " << int_list(s.inconclusive);
    out << "\n";
    return out.str();
}

std::string tsv_header() { return "ell\tf\tstatus\treason\n"; }

std::string tsv_row(const ResidueGenerationVerdict& v)
{
    return std::to_string(v.ell) + "\t" + std::to_string(v.f) + "\t" + std::string(to_string(v.status)) + "\t"
           + std::string(to_string(v.reason.kind)) + "\n";
}

std::string render_norm(const NormVerdict& v)
{
    std::ostringstream out;
    out << "|N(x)| = " << v.a.get_str() << " over Q(zeta_" << v.ell << "): " << to_string(v.status) << "\n";
    for (const auto& f : v.trace) {
        out << "  " << (f.prime ? "p=" + f.prime->get_str() : std::string("(a)")) << "  " << to_string(f.rule) << ": "
            << f.detail << "\n";
    }
    if (!v.assumptions.empty())
        out << "  assumes " << join(v.assumptions) << "\n";
    return out.str();
}

std::string worked_example_report(const ClassNumberTable& table)
{
    std::ostringstream out;
    const CyclotomicModulus m23(23);
    const ClassNumberRecord& cd23 = table.at(23);
    const KummerBasis basis(m23);

    out << "# Residue-degree generation for Q(zeta_23)\n\n";
    out << "## Kummer basis of the Stickelberger ideal (f_i = theta_{i+1} - theta_i)\n\n";
    out << render_basis(basis);
    out << "\nf_4 is computed from its definition. A published table of these\n"
           "supports repeats the f_1 support for f_4; that list fails f_4 = theta_5 - theta_4.\n\n";

    out << "## Coset traces\n\n";
    for (std::int64_t f : {11, 2}) {
        GroupRingElement theta = theta_f_element(m23, f);
        out << "theta_" << f << " = " << format_element(theta) << "\n";
        out << "  " << describe_membership(m23, basis.member(theta)) << "\n";
    }
    out << "\n";

    out << "## R for l=23\n\n";
    auto t23 = compute_R_table(m23, cd23);
    out << render_table(t23, cd23) << "\n";

    out << "## Norm equations |N(x)| = a over Q(zeta_23)\n\n";
    std::optional<RSummary> r23 = summarize(t23);
    for (const char* a : {"0", "-4", "-1", "23", "47", "2048", "32", "1/2048", "1081", "4", "2209", "45101"}) {
        mpq_class q = parse_rational(a);
        out << render_norm(norm_solvable(m23, q, cd23, r23));
    }
    out << "knot number of Q(zeta_23): 1 (stated, not computed)\n\n";

    out << "# Residue-degree generation for Q(zeta_29)\n\n";
    const CyclotomicModulus m29(29);
    out << render_table(compute_R_table(m29, table.at(29)), table.at(29));
    return out.str();
}

}  // namespace stick
