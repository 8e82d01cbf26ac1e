#include "bigalg/linalg.hpp"

#include <map>

namespace bigalg {

QVector EchelonBasis::reduce(QVector v) const
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = v[pivots_[i]];
        if (f == 0) continue;
        const QVector& r = rows_[i];
        for (std::size_t k = pivots_[i]; k < dim_; ++k)
            if (r[k] != 0) v[k] -= f * r[k];
    }
    return v;
}

bool EchelonBasis::add(const QVector& v)
{
    if (v.size() != dim_) throw Error("EchelonBasis: vector length mismatch");
    QVector r = v;
    QVector combo;
    if (track_) {
        combo.assign(inserted_.size() + 1, 0);
        combo.back() = 1;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = r[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t k = pivots_[i]; k < dim_; ++k)
            if (rows_[i][k] != 0) r[k] -= f * rows_[i][k];
        if (track_)
            for (std::size_t k = 0; k < combos_[i].size(); ++k) combo[k] -= f * combos_[i][k];
    }
    std::size_t p = 0;
    while (p < dim_ && r[p] == 0) ++p;
    if (p == dim_) return false;
    Rational inv = 1 / r[p];
    for (std::size_t k = p; k < dim_; ++k) r[k] *= inv;
    if (track_) {
        for (auto& c : combo) c *= inv;
        combos_.push_back(std::move(combo));
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    inserted_.push_back(v);
    return true;
}

bool EchelonBasis::contains(const QVector& v) const { return is_zero(reduce(v)); }

std::optional<QVector> EchelonBasis::coordinates(const QVector& v) const
{
    if (!track_) throw Error("EchelonBasis: coordinates need tracking");
    QVector r = v;
    QVector coords(inserted_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = r[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t k = pivots_[i]; k < dim_; ++k)
            if (rows_[i][k] != 0) r[k] -= f * rows_[i][k];
        for (std::size_t k = 0; k < combos_[i].size(); ++k) coords[k] += f * combos_[i][k];
    }
    if (!is_zero(r)) return std::nullopt;
    return coords;
}

std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dim)
{
    EchelonBasis eb(dim);
    for (const auto& v : vectors) eb.add(v);
    return eb.basis();
}

bool subspace_contains(const std::vector<QVector>& big, const std::vector<QVector>& small, std::size_t dim)
{
    EchelonBasis eb(dim);
    for (const auto& v : big) eb.add(v);
    for (const auto& v : small)
        if (!eb.contains(v)) return false;
    return true;
}

bool subspace_equal(const std::vector<QVector>& a, const std::vector<QVector>& b, std::size_t dim)
{
    return subspace_contains(a, b, dim) && subspace_contains(b, a, dim);
}

std::vector<QVector> intersection(const std::vector<QVector>& a, const std::vector<QVector>& b, std::size_t dim)
{
    auto ba = span_basis(a, dim), bb = span_basis(b, dim);
    QMatrix m(dim, ba.size() + bb.size());
    for (std::size_t j = 0; j < ba.size(); ++j) m.set_column(j, ba[j]);
    for (std::size_t j = 0; j < bb.size(); ++j) {
        QVector neg = bb[j];
        for (auto& x : neg) x = -x;
        m.set_column(ba.size() + j, neg);
    }
    std::vector<QVector> out;
    for (const auto& k : kernel(m)) {
        QVector v(dim);
        for (std::size_t j = 0; j < ba.size(); ++j)
            if (k[j] != 0)
                for (std::size_t i = 0; i < dim; ++i) v[i] += k[j] * ba[j][i];
        out.push_back(std::move(v));
    }
    return span_basis(out, dim);
}

std::vector<QVector> matrix_kernel_on(const QMatrix& m, const std::vector<QVector>& basis)
{
    // Vectors v in span(basis) with m v = 0.
    QMatrix img(m.rows(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) img.set_column(j, m.apply(basis[j]));
    std::vector<QVector> out;
    for (const auto& k : kernel(img)) {
        QVector v(m.cols());
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (k[j] != 0)
                for (std::size_t i = 0; i < v.size(); ++i) v[i] += k[j] * basis[j][i];
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

using LaurentColumn = std::map<int, QVector>;  // exponent -> coefficient vector, no zero vectors

void prune(LaurentColumn& c)
{
    for (auto it = c.begin(); it != c.end();)
        it = is_zero(it->second) ? c.erase(it) : std::next(it);
}

}  // namespace

std::vector<QVector> limit_of_span(const PolyMatrix& columns, std::size_t wvar)
{
    std::size_t dim = columns.rows();
    std::vector<LaurentColumn> cols(columns.cols());
    for (std::size_t j = 0; j < columns.cols(); ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
            for (const auto& [m, c] : columns(i, j).terms()) {
                for (std::size_t v = 0; v < kMaxVars; ++v)
                    if (v != wvar && m.exp[v] != 0) throw Error("limit_of_span: entries must involve only w");
                auto& vec = cols[j][m.exp[wvar]];
                if (vec.empty()) vec.assign(dim, 0);
                vec[i] += c;
            }
        }
        prune(cols[j]);
        if (cols[j].empty()) throw Error("limit_of_span: zero column");
    }
    // Each pass strictly raises one valuation; the bound guards against generic dependence.
    for (std::size_t guard = 0; guard < 100000; ++guard) {
        std::vector<QVector> lead;
        for (const auto& c : cols) lead.push_back(c.begin()->second);
        QMatrix lm = QMatrix::from_columns(lead, dim);
        auto ker = kernel(lm);
        if (ker.empty()) return lead;
        const QVector& a = ker.front();
        std::size_t jstar = cols.size();
        int vmax = 0;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (a[j] == 0) continue;
            int v = cols[j].begin()->first;
            if (jstar == cols.size() || v > vmax) {
                jstar = j;
                vmax = v;
            }
        }
        LaurentColumn repl;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (a[j] == 0) continue;
            int shift = vmax - cols[j].begin()->first;
            for (const auto& [e, vec] : cols[j]) {
                auto& dst = repl[e + shift];
                if (dst.empty()) dst.assign(dim, 0);
                for (std::size_t i = 0; i < dim; ++i)
                    if (vec[i] != 0) dst[i] += a[j] * vec[i];
            }
        }
        prune(repl);
        if (repl.empty()) throw Error("limit_of_span: columns are generically dependent");
        cols[jstar] = std::move(repl);
    }
    throw Error("limit_of_span: valuation echelon did not terminate");
}

namespace {

struct Block {
    std::vector<QVector> basis;
    std::vector<std::optional<Rational>> eig;
    std::vector<UPoly> factor;
};

std::vector<QVector> lift(const std::vector<QVector>& local, const std::vector<QVector>& basis, std::size_t n)
{
    std::vector<QVector> out;
    for (const auto& k : local) {
        QVector v(n);
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (k[j] != 0)
                for (std::size_t i = 0; i < n; ++i) v[i] += k[j] * basis[j][i];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<JointBlock> joint_invariant_decomposition(const std::vector<QMatrix>& ms)
{
    if (ms.empty()) throw Error("joint_invariant_decomposition: no matrices");
    std::size_t n = ms[0].rows();
    for (const auto& m : ms)
        if (m.rows() != n || m.cols() != n) throw Error("joint_invariant_decomposition: shape mismatch");
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a + 1; b < ms.size(); ++b)
            if (!commutator(ms[a], ms[b]).is_zero()) throw Error("joint_invariant_decomposition: matrices do not commute");

    std::vector<Block> blocks;
    {
        Block whole;
        for (std::size_t i = 0; i < n; ++i) {
            QVector e(n);
            e[i] = 1;
            whole.basis.push_back(e);
        }
        blocks.push_back(std::move(whole));
    }
    for (const auto& m : ms) {
        std::vector<Block> next;
        for (auto& blk : blocks) {
            QMatrix r = restrict_to(m, blk.basis);
            UPoly chi = charpoly(r);
            std::size_t covered = 0;
            UPoly rest = chi;
            for (const auto& [root, mult] : rational_roots(chi)) {
                QMatrix shifted = r - QMatrix::identity(r.rows()) * root;
                auto local = kernel(power(shifted, static_cast<unsigned>(mult)));
                Block b;
                b.basis = lift(local, blk.basis, n);
                b.eig = blk.eig;
                b.eig.push_back(root);
                b.factor = blk.factor;
                b.factor.push_back(UPoly());
                covered += b.basis.size();
                for (int k = 0; k < mult; ++k) rest = divmod(rest, UPoly({Rational(-root), Rational(1)})).first;
                next.push_back(std::move(b));
            }
            if (covered < blk.basis.size()) {
                // Irrational part: generalized kernel of the remaining characteristic factor.
                QMatrix g = rest.evaluate(r);
                auto local = kernel(g);
                Block b;
                b.basis = lift(local, blk.basis, n);
                b.eig = blk.eig;
                b.eig.push_back(std::nullopt);
                UPoly sq = rest;
                UPoly gg = gcd(rest, rest.derivative());
                if (gg.degree() > 0) sq = divmod(rest, gg).first;
                b.factor = blk.factor;
                b.factor.push_back(sq.monic());
                next.push_back(std::move(b));
            }
        }
        blocks = std::move(next);
    }
    std::vector<JointBlock> out;
    for (auto& b : blocks) out.push_back({std::move(b.basis), std::move(b.eig), std::move(b.factor)});
    return out;
}

bool simple_spectrum_check(const QMatrix& m) { return is_squarefree(charpoly(m)); }

}  // namespace bigalg
