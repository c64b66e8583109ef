#ifndef CRPC_MULTIPOLY_HPP
#define CRPC_MULTIPOLY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "crpc/errors.hpp"

namespace crpc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exponent tuple over the fixed variable slots (x, y, C).
using Monomial = std::array<unsigned, 3>;

/// Graded-lex: total degree first, then lex with x > y > C.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Sparse multivariate polynomial with exact rational coefficients over up to
/// three variables. Zero coefficients are never stored.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(const Rational& c) {
        if (c != 0) terms_[{0, 0, 0}] = c;
    }
    static MultiPoly variable(int slot, unsigned power = 1) {
        MultiPoly p;
        Monomial m{0, 0, 0};
        m[slot] = power;
        p.terms_[m] = 1;
        return p;
    }
    static MultiPoly term(const Rational& c, unsigned i, unsigned j, unsigned l) {
        MultiPoly p;
        if (c != 0) p.terms_[{i, j, l}] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational, GradedLex>& terms() const { return terms_; }

    Rational coeff(unsigned i, unsigned j, unsigned l) const {
        auto it = terms_.find({i, j, l});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree over all variables (-1 for the zero polynomial).
    int total_degree() const;
    /// Total degree counting only the (x, y) slots.
    int degree_xy() const;
    int degree_in(int slot) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    /// Substitute var `slot` by c * var `slot`.
    MultiPoly scale_variable(int slot, const Rational& c) const;
    /// Substitute an exact rational value for var `slot`.
    MultiPoly substitute(int slot, const Rational& value) const;

    /// Exact division; nullopt if the divisor does not divide exactly.
    std::optional<MultiPoly> try_divide(const MultiPoly& divisor) const;

    /// Divide by the rational content and make the graded-lex leading
    /// coefficient positive.
    MultiPoly normalized() const;

    double eval(double x, double y, double c_value) const;

    /// Deterministic text form, graded-lex descending, with variable names.
    std::string to_text(const std::array<std::string, 3>& names = {"x", "y", "C"}) const;

private:
    std::map<Monomial, Rational, GradedLex> terms_;

    void add_term(const Monomial& m, const Rational& c);
};

/// Numerator/denominator pair; the denominator is never identically zero.
struct RationalFunction {
    MultiPoly numerator;
    MultiPoly denominator;
};

} // namespace crpc

#endif
