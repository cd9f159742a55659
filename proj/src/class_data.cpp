#include "stick/class_data.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "stick/error.hpp"
#include "stick/zlattice.hpp"

namespace stick {

namespace detail {
extern const std::string_view builtin_class_table;
}

namespace {

[[noreturn]] void malformed(int line_no, const std::string& why)
{
    throw Error(ErrorCode::MalformedTable, "class number table line " + std::to_string(line_no) + ": " + why);
}

mpz_class parse_positive(const std::string& token, int line_no)
{
    mpz_class v;
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || v.set_str(token, 10) != 0)
        malformed(line_no, "'" + token + "' is not a non-negative integer");
    if (v <= 0)
        malformed(line_no, "class numbers are positive");
    return v;
}

}  // namespace

ClassNumberTable ClassNumberTable::parse(std::istream& in)
{
    ClassNumberTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, c, extra;
        if (!(fields >> a))
            continue;
        if (!(fields >> b >> c) || (fields >> extra))
            malformed(line_no, "expected exactly three fields 'ell h_plus h_minus'");

        mpz_class ell = parse_positive(a, line_no);
        if (!ell.fits_slong_p() || ell < 3 || !is_prime_small(ell.get_si()))
            malformed(line_no, a + " is not an odd prime");
        ClassNumberRecord rec;
        rec.ell = ell.get_si();
        rec.h_plus = parse_positive(b, line_no);
        rec.h_minus = parse_positive(c, line_no);
        rec.h = rec.h_plus * rec.h_minus;
        if (rec.ell < kHPlusKnownBound && rec.h_plus != 1)
            malformed(line_no, "h_plus must be 1 for l < 100");
        if (!table.records_.emplace(rec.ell, rec).second)
            malformed(line_no, "duplicate record for " + a);
    }
    for (std::int64_t ell = 3; ell < kHPlusKnownBound; ell += 2)
        if (is_prime_small(ell) && !table.contains(ell))
            throw Error(ErrorCode::MissingPrime, "class number table has no record for l=" + std::to_string(ell));
    return table;
}

ClassNumberTable ClassNumberTable::parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse(in);
}

ClassNumberTable ClassNumberTable::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::MalformedTable, "cannot open class number table " + path.string());
    return parse(in);
}

const ClassNumberTable& ClassNumberTable::builtin()
{
    static const ClassNumberTable table = parse(detail::builtin_class_table);
    return table;
}

const ClassNumberRecord& ClassNumberTable::at(std::int64_t ell) const
{
    auto it = records_.find(ell);
    if (it == records_.end())
        throw Error(ErrorCode::MissingPrime, "no class number record for l=" + std::to_string(ell));
    return it->second;
}

mpz_class maillet_h_minus(const CyclotomicModulus& m)
{
    if (m.ell() < 5)
        throw Error(ErrorCode::InvalidArgument, "Maillet determinant needs l >= 5");
    const auto n = static_cast<std::size_t>(m.half());
    IntMatrix d(n, n);
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b) {
            GroupElement binv = inverse(GroupElement{static_cast<std::int64_t>(b)}, m);
            d(a - 1, b - 1) = multiply(GroupElement{static_cast<std::int64_t>(a)}, binv, m).residue;
        }
    mpz_class det = abs(bareiss_determinant(d));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(m.ell()),
                  static_cast<unsigned long>((m.ell() - 3) / 2));
    if (!mpz_divisible_p(det.get_mpz_t(), scale.get_mpz_t()))
        throw Error(ErrorCode::InexactDivision,
                    "Maillet determinant for l=" + std::to_string(m.ell()) + " is not divisible by l^((l-3)/2)");
    return det / scale;
}

}  // namespace stick
