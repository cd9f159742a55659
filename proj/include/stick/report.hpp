#pragma once

// Human-readable and TSV renderings, plus the worked l = 23 / l = 29 report.

#include <string>
#include <vector>

#include "stick/class_data.hpp"
#include "stick/norm_solver.hpp"
#include "stick/stickelberger.hpp"

namespace stick {

std::string describe_outcome(const CyclotomicModulus& m, const SolveOutcome& o);
std::string describe_membership(const CyclotomicModulus& m, const MembershipResult& r);

std::string render_basis(const KummerBasis& basis);
std::string render_verdict(const ResidueGenerationVerdict& v);
std::string render_table(const std::vector<ResidueGenerationVerdict>& table, const ClassNumberRecord& cd);

std::string tsv_header();
std::string tsv_row(const ResidueGenerationVerdict& v);

std::string render_norm(const NormVerdict& v);

/// The full l = 23 computation (basis, both coset-trace memberships, R
/// table, norm verdicts) followed by the l = 29 table.
std::string worked_example_report(const ClassNumberTable& table);

}  // namespace stick
