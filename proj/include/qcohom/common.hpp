#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcohom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;

// Error types surfaced through the public API.  Each carries a short
// human-readable message; the CLI maps them to exit code 3 (or 2 for
// input-shaped problems).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QCOHOM_ERROR(NAME)                                              \
    struct NAME : Error {                                               \
        explicit NAME(const std::string& msg = #NAME) : Error(msg) {}   \
    }

QCOHOM_ERROR(RelationNotInSpan);
QCOHOM_ERROR(NotInvolution);
QCOHOM_ERROR(WrongOrder);
QCOHOM_ERROR(RelationViolation);
QCOHOM_ERROR(NotFinite);
QCOHOM_ERROR(NotSubgroup);
QCOHOM_ERROR(NotNormal);
QCOHOM_ERROR(UnknownPreset);
QCOHOM_ERROR(NotAUnit);
QCOHOM_ERROR(NotCyclic);
QCOHOM_ERROR(InfiniteFactor);
QCOHOM_ERROR(NotACycle);
QCOHOM_ERROR(NotACocycle);
QCOHOM_ERROR(HypothesisFails);
QCOHOM_ERROR(NotA2Cycle);
QCOHOM_ERROR(NonIntegralCoefficients);
QCOHOM_ERROR(NotEquivariant);
QCOHOM_ERROR(NoEmbedding);
QCOHOM_ERROR(MalformedInput);

#undef QCOHOM_ERROR

inline Int int_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Reduced fraction in [0,1), rendered "p/q" with q > 0.
struct Frac {
    Int num{0};
    Int den{1};

    Frac() = default;
    Frac(const Int& p, const Int& q) {
        if (q == 0) throw Error("zero denominator");
        Int n = int_mod(p, boost::multiprecision::abs(q));
        Int d = boost::multiprecision::abs(q);
        Int g = boost::multiprecision::gcd(n, d);
        if (g == 0) g = 1;
        num = n / g;
        den = d / g;
    }
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Frac& o) const { return !(*this == o); }
    bool is_zero() const { return num == 0; }
    Frac negated() const { return Frac(den - num, den); }
    std::string str() const { return num.str() + "/" + den.str(); }
};

inline Frac frac_add(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
}

}  // namespace qcohom
