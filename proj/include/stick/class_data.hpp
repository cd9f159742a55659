#pragma once

// Class numbers h = h_plus * h_minus of Q(zeta_l). These are inputs to the
// residue-degree and norm pipelines; the Maillet determinant gives an
// independent check of every shipped h_minus.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string_view>

#include <gmpxx.h>

#include "stick/galois.hpp"

namespace stick {

struct ClassNumberRecord {
    std::int64_t ell = 0;
    mpz_class h_plus = 1;
    mpz_class h_minus = 1;
    mpz_class h = 1;

    friend bool operator==(const ClassNumberRecord&, const ClassNumberRecord&) = default;
};

/// Conductors below this bound have h_plus = 1 unconditionally.
inline constexpr std::int64_t kHPlusKnownBound = 100;

class ClassNumberTable {
public:
    /// Parses "ell h_plus h_minus" records. Throws Error(MalformedTable) on a
    /// bad line, a non-prime ell, a duplicate, or h_plus != 1 below 100, and
    /// Error(MissingPrime) if some odd prime below 100 has no record.
    static ClassNumberTable parse(std::istream& in);
    static ClassNumberTable parse(std::string_view text);
    static ClassNumberTable load(const std::filesystem::path& path);
    /// The table compiled in from data/class_numbers.txt.
    static const ClassNumberTable& builtin();

    bool contains(std::int64_t ell) const { return records_.contains(ell); }
    /// Throws Error(MissingPrime) if absent.
    const ClassNumberRecord& at(std::int64_t ell) const;
    const std::map<std::int64_t, ClassNumberRecord>& records() const noexcept { return records_; }

private:
    std::map<std::int64_t, ClassNumberRecord> records_;
};

/// |det(R(a b^{-1} mod l))_{1 <= a,b <= (l-1)/2}| / l^{(l-3)/2}.
/// Throws Error(InvalidArgument) for l < 5 and Error(InexactDivision) if the
/// quotient is not exact.
mpz_class maillet_h_minus(const CyclotomicModulus& m);

}  // namespace stick
