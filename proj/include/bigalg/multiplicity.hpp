#pragma once

#include "bigalg/big_algebra.hpp"
#include "bigalg/qpoly.hpp"
#include "bigalg/rep.hpp"

#include <string>
#include <vector>

namespace bigalg {

/// P_q(pi) from prod_{a > 0} (1 - q e^a)^{-1}; pi in fundamental coordinates. Guard n <= 5.
QPolynomial qkostant_partition(const Weight& pi, int n);
/// m^mu_lambda(q) = sum_w sign(w) P_q(w(mu + rho) - (lambda + rho)).
QPolynomial lusztig_m(const Weight& mu, const Weight& lambda);

enum class Torus { standard, h_plus_e };
Torus parse_torus(const std::string& text);
std::string torus_name(Torus t);

/// exp(-rho(e)/2): conjugates the standard torus to the one containing h + e.
QMatrix unipotent_twist(const Representation& rep);
/// Weight space for the chosen torus; standard weight vectors transported by unipotent_twist.
std::vector<QVector> torus_weight_space(const Representation& rep, const Weight& lambda, Torus torus);

struct BrylinskiFiltration {
    Weight lambda;
    Torus torus = Torus::standard;
    std::vector<QVector> ambient;
    std::vector<std::vector<QVector>> F;  // F_p = {x : e^{p+1} x = 0}, p = 0, 1, ...
    std::vector<std::size_t> dims;
    QPolynomial jump_series;              // sum_p dim(F_p / F_{p-1}) q^p
};

BrylinskiFiltration brylinski_filtration(const Representation& rep, const Weight& lambda, Torus torus);

enum class LimitMethod { filtration_sum, z_limit };
std::vector<QVector> e_limit(const Representation& rep, const Weight& lambda, LimitMethod method);
/// Common kernel of rho(x) over the centralizer of e.
std::vector<QVector> centralizer_invariants(const Representation& rep);
/// Whether rho(x) for x in the centralizer of e + z h acts by scalars on H^z applied to the h+e weight space.
bool twisted_weight_space_check(const Representation& rep, const Weight& lambda, const Rational& z);

struct MultiplicityAlgebra {
    Weight lambda;
    std::vector<QVector> limit_space;
    std::vector<std::string> labels;
    std::vector<QMatrix> operators;          // generators restricted to limit_space
    std::vector<std::size_t> graded_dims;    // by generator degree i
    std::vector<std::vector<QMatrix>> graded_basis;
    std::vector<int> nilpotency;             // smallest k with op^k = 0, 0 if not nilpotent
    QPolynomial hilbert;                     // sum_i dim Q^i q^{(mu - lambda, rho) - i}
    bool invariant = false;
};

/// Calibrated generators evaluated at e, with labels.
struct GeneratorsAtE {
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::vector<QMatrix> matrices;
    std::vector<bool> medium;
};
GeneratorsAtE generators_at_e(const Calibration& cal);

MultiplicityAlgebra multiplicity_algebra(const Representation& rep, const GeneratorsAtE& gens, const Weight& lambda);

struct QuotientReport {
    bool chain = false;             // lim V_lambda inside lim V_min and stable under Q_min
    std::size_t fiber_dimension = 0;
    std::size_t quotient_dimension = 0;   // B_e / (medium generators at e)
    std::size_t minimal_dimension = 0;    // dim Q_{mu_min}
    bool medium_annihilates = false;
    bool passed() const { return chain && medium_annihilates && quotient_dimension == minimal_dimension; }
};

QuotientReport quotient_chain_check(const Representation& rep, const GeneratorsAtE& gens, const Weight& lambda);

}  // namespace bigalg
