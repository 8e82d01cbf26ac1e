#pragma once

#include "bigalg/big_algebra.hpp"
#include "bigalg/linalg.hpp"
#include "bigalg/qpoly.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace bigalg {

enum class SkeletonRecipe { identity, set_c3_zero, pullback_along_e_plus_tf };
SkeletonRecipe default_recipe(int n);
std::string recipe_name(SkeletonRecipe r);

/// Generators specialized to a one-parameter principal line.
struct Skeleton {
    SkeletonRecipe recipe = SkeletonRecipe::identity;
    std::string parameter;            // "c2" or "t"
    std::vector<std::string> labels;
    std::vector<PolyMatrix> operators;  // over the single parameter variable
    std::vector<MultiPoly> invariants;  // c_2..c_n along the line
};

Skeleton principal_restriction(const Calibration& cal, SkeletonRecipe recipe);

struct PrincipalSpectrum {
    QVector point;  // c-values of h
    std::vector<std::string> medium_labels;
    std::map<Weight, std::vector<Rational>> medium_eigen;
    bool injective = false;
    std::vector<std::string> big_labels;
    std::vector<JointBlock> big_blocks;
};

/// Medium generators at h read off on weight spaces; big generators decomposed jointly.
PrincipalSpectrum principal_spectrum(const Calibration& cal);

/// Values of a polynomial when its variables are replaced by commuting matrices.
QMatrix evaluate_matrix_polynomial(const MultiPoly& p, const std::vector<QMatrix>& values);

struct IdentityCheck {
    std::string identity;
    bool zero = false;
};

/// Identities in I3, Y with I3 = (M1)_h / 4 and Y = (M2)_h / 4 (sl_3 only).
std::vector<IdentityCheck> verify_quantum_number_identities(const Calibration& cal,
                                                            const std::vector<std::string>& identities);

struct CsvReport {
    std::size_t rows = 0;
    double max_residual = 0;
    bool passed = false;
};

/// Grid "a:b:steps" gives steps + 1 equally spaced rational points.
std::vector<Rational> parse_grid(const std::string& text);
/// Real roots with multiplicity, ascending, each refined to width below eps.
std::vector<Rational> real_eigenvalues(const QMatrix& m, const Rational& eps);
std::string format_decimal(const Rational& r, int digits = 18);

/// Rows "param,generator,branch,value"; each value is checked against the exact characteristic polynomial.
CsvReport emit_skeleton_points(const Skeleton& sk, const std::vector<Rational>& grid, std::ostream& out);
/// Rows at the principal point of the companion section.
CsvReport emit_principal_points(const Calibration& cal, std::ostream& out);

struct SigmaData {
    QMatrix on_lie;       // sigma on Lie coordinates
    QMatrix intertwiner;  // S with S rho(X) S^{-1} = rho(sigma X), S fixes the highest weight vector
    bool fixes_triple = false;
    bool intertwines = false;
};

SigmaData sigma_automorphism(const RepPtr& rep);
/// (sigma F)(x) = S F(sigma x) S^{-1}.
PolyMatrix apply_sigma(const SigmaData& s, const KirillovElement& f);
/// +1 or -1 if sigma F = +-F, otherwise 0.
int sigma_eigenvalue(const SigmaData& s, const KirillovElement& f);

struct CoinvariantReport {
    std::map<std::string, int> sigma_on_generators;
    std::map<std::string, int> sigma_on_invariants;
    std::vector<std::size_t> coinvariant_dims;  // per degree
    std::vector<std::size_t> target_dims;       // B of the folded algebra, per degree
    std::vector<MultiPoly> even_relations;      // relations among fixed generators modulo odd ones
    std::vector<MultiPoly> translated;          // after the generator dictionary
    std::vector<MultiPoly> target_relations;
    bool hilbert_match = false;
    bool relations_match = false;
    bool fixed_scheme_single = false;
    std::vector<std::pair<Weight, Rational>> jantzen_traces;
    std::vector<std::pair<Weight, std::size_t>> target_weight_dims;
    bool jantzen_match = false;
    bool passed() const { return hilbert_match && relations_match && fixed_scheme_single && jantzen_match; }
};

/// The octet instance: B^{w1+w2}(sl_3)_sigma against B^{w1}(sl_2), up to max_degree.
CoinvariantReport coinvariant_algebra(const Calibration& octet, int max_degree = 6);

}  // namespace bigalg
