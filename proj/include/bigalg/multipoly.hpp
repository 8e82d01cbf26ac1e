#pragma once

#include "bigalg/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bigalg {

/// Hard cap on variables per polynomial ring; sl_5 needs 24 Lie coordinates.
inline constexpr std::size_t kMaxVars = 24;

/// Ordered list of variable names. At most one variable (the "limit" variable w)
/// may carry negative exponents; w stands for z^(1/2), so its integer exponents
/// encode half-integer powers of z.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names, std::optional<std::size_t> limit_var = std::nullopt);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require(std::string_view name) const;
    std::optional<std::size_t> limit_var() const { return limit_var_; }

    bool operator==(const VarSet& other) const = default;

private:
    std::vector<std::string> names_;
    std::optional<std::size_t> limit_var_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_vars(std::vector<std::string> names, std::optional<std::string> limit_var = std::nullopt);

/// Exponent vector; unused slots stay zero so comparison is plain lexicographic.
struct Monomial {
    std::array<std::int16_t, kMaxVars> exp{};

    auto operator<=>(const Monomial&) const = default;

    int total_degree() const;
    int weighted_degree(std::span<const int> weights) const;
    Monomial operator+(const Monomial& other) const;
};

/// Sparse polynomial over Q. Terms are kept sorted by exponent vector with no
/// zero coefficients, so structural equality is polynomial equality.
class MultiPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarSetPtr vars, const Rational& c);
    static MultiPoly variable(VarSetPtr vars, std::size_t index);
    static MultiPoly variable(VarSetPtr vars, std::string_view name);
    static MultiPoly term(VarSetPtr vars, const Monomial& m, const Rational& c);

    const VarSetPtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    /// a += c * b without materializing c * b.
    void add_scaled(const MultiPoly& b, const Rational& c);
    MultiPoly pow(unsigned e) const;

    MultiPoly derivative(std::size_t var) const;
    MultiPoly derivative(std::string_view var) const;

    /// Evaluates at a rational point; point.size() must equal the arity.
    Rational evaluate(std::span<const Rational> point) const;

    /// Ring homomorphism x_i -> images[i]; images all live in one target ring.
    MultiPoly substitute(std::span<const MultiPoly> images) const;

    /// Re-expresses the polynomial over a larger (or renamed) ring: variable i maps to slot map[i].
    MultiPoly embed(VarSetPtr target, std::span<const std::size_t> map) const;

    /// Common weighted degree of all terms, nullopt if inhomogeneous; zero has no degree.
    std::optional<int> homogeneous_degree(std::span<const int> weights) const;
    std::optional<int> homogeneous_degree() const;
    int max_total_degree() const;

    bool operator==(const MultiPoly& other) const;

    std::string to_string() const;

private:
    void check_compatible(const MultiPoly& other) const;
    void check_exponents(const Monomial& m) const;
    static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign);

    VarSetPtr vars_;
    std::vector<Term> terms_;
};

/// Integer multiple with coprime coefficients and a positive coefficient on the largest monomial.
MultiPoly primitive_part(const MultiPoly& p);

/// Parses sums and products of rationals, variables, powers and parentheses, e.g. "3*M1^2 + (N1 - 1/2)^2".
MultiPoly parse_polynomial(const VarSetPtr& vars, std::string_view text);

}  // namespace bigalg
