#include "stick/group_ring.hpp"

#include <algorithm>
#include <cctype>

#include "stick/error.hpp"

namespace stick {

GroupRingElement::GroupRingElement(const CyclotomicModulus& m)
    : modulus_(m), coeffs_(static_cast<std::size_t>(m.group_order()))
{
}

GroupRingElement::GroupRingElement(const CyclotomicModulus& m, std::vector<mpz_class> coeffs)
    : modulus_(m), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != static_cast<std::size_t>(m.group_order()))
        throw Error(ErrorCode::DimensionMismatch,
                    "group ring element needs " + std::to_string(m.group_order()) + " coefficients, got "
                        + std::to_string(coeffs_.size()));
}

GroupRingElement GroupRingElement::from_support(const CyclotomicModulus& m,
                                                std::span<const GroupElement> support)
{
    GroupRingElement x(m);
    for (GroupElement g : support)
        x[element(g.residue, m)] += 1;
    return x;
}

bool GroupRingElement::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

bool GroupRingElement::is_indicator() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpz_class& c) { return c == 0 || c == 1; });
}

std::vector<GroupElement> GroupRingElement::support() const
{
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            out.push_back(GroupElement{static_cast<std::int64_t>(i + 1)});
    return out;
}

mpz_class GroupRingElement::coefficient_sum() const
{
    mpz_class s = 0;
    for (const auto& c : coeffs_)
        s += c;
    return s;
}

void GroupRingElement::require_same_modulus(const GroupRingElement& rhs) const
{
    if (!(modulus_ == rhs.modulus_))
        throw Error(ErrorCode::ModulusMismatch,
                    "group ring elements over l=" + std::to_string(modulus_.ell()) + " and l="
                        + std::to_string(rhs.modulus_.ell()));
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs)
{
    require_same_modulus(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs)
{
    require_same_modulus(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

GroupRingElement& GroupRingElement::operator*=(const mpz_class& k)
{
    for (auto& c : coeffs_)
        c *= k;
    return *this;
}

GroupRingElement group_act(GroupElement c, const GroupRingElement& x)
{
    const auto& m = x.modulus();
    c = element(c.residue, m);
    GroupRingElement out(m);
    for (std::int64_t a = 1; a < m.ell(); ++a)
        out[multiply(c, GroupElement{a}, m)] = x[GroupElement{a}];
    return out;
}

GroupRingElement trace_element(const CyclotomicModulus& m)
{
    return GroupRingElement(m, std::vector<mpz_class>(static_cast<std::size_t>(m.group_order()), 1));
}

GroupRingElement theta_a(const CyclotomicModulus& m, const mpz_class& a)
{
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m.ell()));
    if (a < 1 || g != 1)
        throw Error(ErrorCode::NotCoprime,
                    "theta_a needs a >= 1 coprime to " + std::to_string(m.ell()) + ", got " + a.get_str());
    GroupRingElement x(m);
    mpz_class q;
    for (std::int64_t i = 1; i < m.ell(); ++i) {
        mpz_class ai = a * static_cast<long>(i);
        mpz_fdiv_q_ui(q.get_mpz_t(), ai.get_mpz_t(), static_cast<unsigned long>(m.ell()));
        x[inverse(GroupElement{i}, m)] = q;
    }
    return x;
}

GroupRingElement kummer_f(const CyclotomicModulus& m, std::int64_t i)
{
    if (i < 1 || i > m.half())
        throw Error(ErrorCode::IndexOutOfRange,
                    "Kummer index " + std::to_string(i) + " outside [1, " + std::to_string(m.half()) + "]");
    return theta_a(m, i + 1) - theta_a(m, i);
}

GroupRingElement theta_f_element(const CyclotomicModulus& m, std::int64_t f)
{
    auto reps = coset_representatives(m, subgroup_of_order(m, f));
    return GroupRingElement::from_support(m, reps);
}

std::string format_support(std::span<const GroupElement> support)
{
    std::string out = "{";
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(support[i].residue);
    }
    return out + "}";
}

std::string format_coefficients(const GroupRingElement& x)
{
    std::string out;
    for (GroupElement g : x.support()) {
        const mpz_class& c = x[g];
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        mpz_class mag = abs(c);
        out += mag.get_str() + "*s" + std::to_string(g.residue);
    }
    return out.empty() ? "0" : out;
}

std::string format_element(const GroupRingElement& x)
{
    if (x.is_indicator())
        return format_support(x.support());
    return format_coefficients(x);
}

namespace {

class ElementParser {
public:
    ElementParser(const CyclotomicModulus& m, std::string_view text) : m_(m), text_(text) {}

    GroupRingElement parse()
    {
        skip_ws();
        GroupRingElement out(m_);
        if (peek() == '{') {
            ++pos_;
            skip_ws();
            if (peek() != '}') {
                for (;;) {
                    out[residue(read_int())] += 1;
                    skip_ws();
                    if (peek() == ',') {
                        ++pos_;
                        skip_ws();
                        continue;
                    }
                    break;
                }
            }
            expect('}');
        } else {
            out = sum();
        }
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing characters");
        return out;
    }

private:
    GroupRingElement sum()
    {
        GroupRingElement out(m_);
        bool first = true;
        for (;;) {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                break;
            }
            first = false;
            term(out, sign);
        }
        return out;
    }

    void term(GroupRingElement& out, int sign)
    {
        mpz_class coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = read_int();
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            } else if (peek() != 's' && peek() != 'N') {
                // a bare integer is only valid as the literal 0
                if (coeff != 0)
                    fail("expected a group element after coefficient");
                return;
            }
        }
        coeff *= sign;
        if (peek() == 'N') {
            ++pos_;
            out += coeff * trace_element(m_);
        } else if (peek() == 's') {
            ++pos_;
            out[residue(read_int())] += coeff;
        } else {
            fail("expected 's<index>' or 'N'");
        }
    }

    GroupElement residue(const mpz_class& v)
    {
        if (v < 1 || v >= m_.ell())
            fail("index " + v.get_str() + " outside [1, " + std::to_string(m_.ell() - 1) + "]");
        return GroupElement{v.get_si()};
    }

    mpz_class read_int()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    void expect(char c)
    {
        skip_ws();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const
    {
        throw Error(ErrorCode::ParseError,
                    "cannot parse element \"" + std::string(text_) + "\" at offset "
                        + std::to_string(pos_) + ": " + why);
    }

    const CyclotomicModulus& m_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GroupRingElement parse_element(const CyclotomicModulus& m, std::string_view text)
{
    return ElementParser(m, text).parse();
}

}  // namespace stick
