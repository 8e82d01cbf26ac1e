#pragma once

#include "bigalg/polymatrix.hpp"
#include "bigalg/rep.hpp"

#include <optional>
#include <string>

namespace bigalg {

/// End(V)-valued polynomial on sl_n, in the coordinates x0..x{N-1} of build_sl(n).
struct KirillovElement {
    RepPtr rep;
    PolyMatrix matrix;
    std::optional<int> degree;
    std::string label;

    QMatrix evaluate(const QVector& x) const { return matrix.evaluate(x); }
};

/// c_k(A): coefficient of t^{n-k} in det(tI - A), A = sum x_i X_i.
const MultiPoly& invariant_ck(int n, int k);

KirillovElement scalar_element(const RepPtr& rep, const MultiPoly& p, std::string label = "");
/// A -> rho(A).
KirillovElement small_operator(const RepPtr& rep);
/// A -> rho(grad c_k(A) projected to trace zero), gradient taken with respect to tr(XY).
KirillovElement medium_operator(const RepPtr& rep, int k);
/// D(F) = 1/2 sum_i rho(X^i) dF/dx_i with the Killing-dual basis.
KirillovElement wei_D(const KirillovElement& a);
/// The same operator computed in the basis Y_i = sum_j T(j, i) X_j, expressed back in x.
KirillovElement wei_D_in_basis(const KirillovElement& a, const QMatrix& T);
/// D^i(c_k Id) for 0 < i < k <= n.
KirillovElement big_operator(const RepPtr& rep, int i, int k);
/// Infinitesimal invariance: dF([X, x]) = [rho(X), F(x)] for every basis X.
bool equivariance_check(const KirillovElement& a);
KirillovElement commutator(const KirillovElement& a, const KirillovElement& b);
KirillovElement product(const KirillovElement& a, const KirillovElement& b);

/// r with a = r * b, if such a rational exists (b nonzero).
std::optional<Rational> proportionality(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace bigalg
