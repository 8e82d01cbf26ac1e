#pragma once

#include "bigalg/multipoly.hpp"
#include "bigalg/polymatrix.hpp"
#include "bigalg/qmatrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bigalg {

/// Weight in fundamental-weight coordinates (length n-1).
using Weight = std::vector<int>;

/// sl_n with basis E_ij (i != j, lexicographic) followed by H_i = E_ii - E_{i+1,i+1}.
struct SlAlgebra {
    int n = 0;
    std::size_t dim = 0;
    std::vector<QMatrix> basis;
    std::vector<std::string> names;
    /// bracket[i][j] = coordinates of [X_i, X_j].
    std::vector<std::vector<QVector>> bracket;
    QMatrix trace_form;   // tr(X_i X_j)
    QMatrix killing;      // 2n * trace_form
    QMatrix killing_inv;
    /// dual[i] = coordinates of the Killing-dual X^i.
    std::vector<QVector> dual;
    /// Principal triple, as coordinate vectors.
    QVector e, f, h;
    /// Coordinate ring variables x0..x{N-1}.
    VarSetPtr coord_vars;

    std::vector<Weight> simple_roots;
    std::vector<Weight> positive_roots;
    /// Positive roots in simple-root coordinates, same order as positive_roots.
    std::vector<std::vector<int>> positive_roots_simple;
    Weight rho;
    std::vector<int> degrees;  // 2..n

    QVector coords(const QMatrix& x) const;
    QMatrix element(const QVector& c) const;
    QVector lie_bracket(const QVector& a, const QVector& b) const;
    /// Matrix of ad(x) on coordinates.
    QMatrix ad(const QVector& x) const;
    std::size_t index_of(int i, int j) const;  // E_ij
    std::size_t cartan_index(int i) const;     // H_i
    /// Symbolic generic element A = sum x_i X_i as an n x n PolyMatrix.
    PolyMatrix generic_element() const;
};

using SlPtr = std::shared_ptr<const SlAlgebra>;

/// Cached per n; throws for n < 2.
SlPtr build_sl(int n);

/// Killing form recomputed from structure constants, tr(ad X_i ad X_j).
QMatrix killing_from_structure(const SlAlgebra& g);

/// Variables c2..cn.
VarSetPtr c_vars(int n);

/// Companion matrix with char poly t^n + c2 t^{n-2} + ... + cn.
PolyMatrix kostant_section_companion(int n);
QMatrix kostant_section_companion(int n, const std::vector<Rational>& cvals);
/// Lie coordinates of the companion matrix as polynomials in c2..cn.
std::vector<MultiPoly> section_coordinates(const SlAlgebra& g);

/// c2..cn of a concrete matrix, as coefficients of det(tI - A).
std::vector<Rational> char_coefficients(const QMatrix& a);

/// Basis of the centralizer g_x.
std::vector<QVector> centralizer(const SlAlgebra& g, const QVector& x);

struct WeylElement {
    std::vector<int> perm;  // permutation of epsilon coordinates
    int sign = 1;
};
std::vector<WeylElement> weyl_group(int n);
Weight weyl_act(const WeylElement& w, const Weight& lambda);

/// Traceless epsilon coordinates of a weight.
std::vector<Rational> to_epsilon(const Weight& lambda);
/// Basic inner product, (alpha, alpha) = 2 for roots.
Rational inner_product(const Weight& a, const Weight& b);
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
bool is_dominant(const Weight& w);
/// Simple-root coordinates if the weight lies in the root lattice.
std::optional<std::vector<int>> simple_root_coords(const Weight& w);
/// Value of the weight on the principal h.
int weight_on_h(const Weight& w);
/// Zero or the fundamental weight in the class of mu modulo the root lattice.
Weight minuscule_min(const Weight& mu);
/// Weyl dimension formula.
Integer weyl_dimension(const Weight& mu);
/// Parses "1,0,2"; checks length n-1.
Weight parse_weight(const std::string& text, int n);
std::string weight_to_string(const Weight& w);

}  // namespace bigalg
