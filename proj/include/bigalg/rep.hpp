#pragma once

#include "bigalg/lie.hpp"
#include "bigalg/qmatrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bigalg {

/// Irreducible sl_n-module with exact matrices for the Lie basis of build_sl(n).
struct Representation {
    int n = 0;
    Weight mu;
    std::size_t dim = 0;
    std::vector<QMatrix> rho;
    /// Standard-torus weight of each basis vector.
    std::vector<Weight> weights;
    /// Lowering word (simple indices, applied right to left in order of listing) per basis vector.
    std::vector<std::vector<int>> words;
    std::map<Weight, std::vector<std::size_t>> weight_table;
    std::vector<std::string> log;

    SlPtr algebra() const { return build_sl(n); }
    /// rho(x) for a coordinate vector x.
    QMatrix rho_of(const QVector& x) const;
    /// Dominant weights of the module, ordered by depth (mu - lambda, rho).
    std::vector<Weight> dominant_weights() const;
    std::vector<QVector> weight_space(const Weight& lambda) const;
};

using RepPtr = std::shared_ptr<const Representation>;

/// Exterior power of the standard representation on k-subsets (1 <= k <= n-1).
RepPtr fundamental_rep(int n, int k);

/// Highest-weight module built inside a tensor product of fundamentals by lowering closure.
RepPtr build_irrep(const Weight& mu, std::size_t dim_bound = 400);

/// build_irrep with an on-disk cache; an empty directory disables caching.
RepPtr build_irrep_cached(const Weight& mu, const std::string& cache_dir, std::size_t dim_bound = 400);

struct WeightSpace {
    std::vector<Rational> label;  // eigenvalue per torus element
    std::vector<QVector> basis;
};

/// Simultaneous eigenspaces of rho(t) for commuting semisimple t with rational spectrum.
std::vector<WeightSpace> weight_spaces(const Representation& rep, const std::vector<QVector>& torus);

/// Bracket fidelity [rho(X_i), rho(X_j)] = rho([X_i, X_j]) on all pairs.
bool check_bracket_fidelity(const Representation& rep);

std::string rep_to_json(const Representation& rep);
RepPtr rep_from_json(const std::string& text);

inline constexpr int kRepCacheVersion = 1;

}  // namespace bigalg
