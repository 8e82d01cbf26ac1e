#include "bigalg/rep.hpp"

#include "bigalg/linalg.hpp"

#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace bigalg {

QMatrix Representation::rho_of(const QVector& x) const
{
    QMatrix m(dim, dim);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) m += rho[i] * x[i];
    return m;
}

std::vector<Weight> Representation::dominant_weights() const
{
    std::vector<Weight> out;
    for (const auto& [w, idx] : weight_table)
        if (is_dominant(w)) out.push_back(w);
    auto depth = [&](const Weight& w) { return inner_product(sub(mu, w), build_sl(n)->rho); };
    std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) { return depth(a) < depth(b); });
    return out;
}

std::vector<QVector> Representation::weight_space(const Weight& lambda) const
{
    std::vector<QVector> out;
    auto it = weight_table.find(lambda);
    if (it == weight_table.end()) return out;
    for (auto i : it->second) {
        QVector v(dim);
        v[i] = 1;
        out.push_back(v);
    }
    return out;
}

namespace {

std::vector<std::vector<int>> k_subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> s(static_cast<std::size_t>(k));
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Weight subset_weight(int n, const std::vector<int>& s)
{
    Weight w(static_cast<std::size_t>(n - 1), 0);
    for (int x : s) {
        if (x < n - 1) w[static_cast<std::size_t>(x)] += 1;
        if (x > 0) w[static_cast<std::size_t>(x - 1)] -= 1;
    }
    return w;
}

// Exterior power Λ^k of the standard representation.
std::shared_ptr<Representation> exterior_power(int n, int k)
{
    auto g = build_sl(n);
    auto subsets = k_subsets(n, k);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = i;
    auto rep = std::make_shared<Representation>();
    rep->n = n;
    rep->mu = Weight(static_cast<std::size_t>(n - 1), 0);
    rep->mu[static_cast<std::size_t>(k - 1)] = 1;
    rep->dim = subsets.size();
    for (const auto& x : g->basis) {
        QMatrix m(rep->dim, rep->dim);
        for (std::size_t col = 0; col < subsets.size(); ++col) {
            const auto& s = subsets[col];
            // X acts as a derivation: sum over positions of X e_{s_p}.
            for (std::size_t p = 0; p < s.size(); ++p)
                for (int r = 0; r < n; ++r) {
                    Rational c = x(static_cast<std::size_t>(r), static_cast<std::size_t>(s[p]));
                    if (c == 0) continue;
                    std::vector<int> t = s;
                    t[p] = r;
                    if (r != s[p] && std::find(s.begin(), s.end(), r) != s.end()) continue;
                    // Sort t and track the permutation sign.
                    int sign = 1;
                    for (std::size_t a = 0; a < t.size(); ++a)
                        for (std::size_t b = a + 1; b < t.size(); ++b)
                            if (t[a] > t[b]) sign = -sign;
                    std::sort(t.begin(), t.end());
                    m(index.at(t), col) += c * sign;
                }
        }
        rep->rho.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        rep->weights.push_back(subset_weight(n, subsets[i]));
        rep->weight_table[rep->weights.back()].push_back(i);
    }
    return rep;
}

using SparseVec = std::map<std::uint64_t, Rational>;

// Sparse semi-echelon basis of one weight space, tracking coordinates in the chosen basis.
struct SparseEchelon {
    std::vector<SparseVec> rows;
    std::vector<std::uint64_t> pivots;
    std::vector<QVector> combos;
    std::size_t count = 0;

    // Returns the residual and accumulates -coefficients into combo.
    SparseVec reduce(SparseVec v, QVector* combo) const
    {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto it = v.find(pivots[i]);
            if (it == v.end()) continue;
            Rational f = it->second;
            for (const auto& [k, c] : rows[i]) {
                Rational& slot = v[k];
                slot -= f * c;
                if (slot == 0) v.erase(k);
            }
            if (combo)
                for (std::size_t k = 0; k < combos[i].size(); ++k) (*combo)[k] += f * combos[i][k];
        }
        return v;
    }

    bool add(const SparseVec& v)
    {
        QVector combo(count + 1);
        SparseVec r = reduce(v, &combo);
        if (r.empty()) return false;
        for (auto& c : combo) c = -c;
        combo[count] = 1;
        Rational inv = 1 / r.begin()->second;
        for (auto& [k, c] : r) c *= inv;
        for (auto& c : combo) c *= inv;
        for (auto& cb : combos) cb.resize(count + 1);
        pivots.push_back(r.begin()->first);
        rows.push_back(std::move(r));
        combos.push_back(std::move(combo));
        ++count;
        return true;
    }

    std::optional<QVector> coordinates(const SparseVec& v) const
    {
        QVector coords(count);
        SparseVec r = reduce(v, &coords);
        if (!r.empty()) return std::nullopt;
        return coords;
    }
};

// cols[factor][basis element][column] = sparse column entries.
using ColumnTable = std::vector<std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>>>;

struct Factor {
    std::shared_ptr<Representation> rep;
    std::uint64_t stride;
};

// Action of Lie basis element a on a sparse tensor vector.
SparseVec act(const std::vector<Factor>& factors, const ColumnTable& cols, std::size_t a, const SparseVec& v)
{
    SparseVec out;
    for (const auto& [idx, c] : v) {
        for (std::size_t f = 0; f < factors.size(); ++f) {
            std::uint64_t d = factors[f].rep->dim;
            std::uint64_t digit = (idx / factors[f].stride) % d;
            std::uint64_t base = idx - digit * factors[f].stride;
            for (const auto& [row, val] : cols[f][a][digit]) {
                std::uint64_t target = base + row * factors[f].stride;
                Rational& slot = out[target];
                slot += c * val;
                if (slot == 0) out.erase(target);
            }
        }
    }
    return out;
}

}  // namespace

RepPtr fundamental_rep(int n, int k)
{
    if (k < 1 || k > n - 1) throw Error("fundamental_rep: k out of range");
    auto rep = exterior_power(n, k);
    rep->log.push_back("exterior power " + std::to_string(k) + " of the standard representation");
    return rep;
}

RepPtr build_irrep(const Weight& mu, std::size_t dim_bound)
{
    int n = static_cast<int>(mu.size()) + 1;
    if (n < 2) throw Error("build_irrep: weight must have at least one coordinate");
    if (!is_dominant(mu)) throw Error("build_irrep: weight is not dominant");
    Integer expected = weyl_dimension(mu);
    if (expected > static_cast<long>(dim_bound))
        throw Error("build_irrep: dimension " + expected.get_str() + " exceeds bound " + std::to_string(dim_bound));
    auto g = build_sl(n);
    std::size_t N = g->dim;

    auto rep = std::make_shared<Representation>();
    rep->n = n;
    rep->mu = mu;

    // Tensor factors and their sparse column tables.
    std::vector<Factor> factors;
    std::uint64_t stride = 1;
    for (int k = 1; k < n; ++k)
        for (int c = 0; c < mu[static_cast<std::size_t>(k - 1)]; ++c) {
            auto f = exterior_power(n, k);
            factors.push_back({f, stride});
            stride *= f->dim;
            if (stride > (std::uint64_t(1) << 60)) throw Error("build_irrep: tensor ambient too large");
        }
    rep->log.push_back("tensor of " + std::to_string(factors.size()) + " fundamental factors, ambient dim " + std::to_string(stride));
    ColumnTable cols(factors.size());
    for (std::size_t f = 0; f < factors.size(); ++f) {
        const auto& fr = *factors[f].rep;
        cols[f].resize(N);
        for (std::size_t a = 0; a < N; ++a) {
            cols[f][a].resize(fr.dim);
            for (std::size_t j = 0; j < fr.dim; ++j)
                for (std::size_t i = 0; i < fr.dim; ++i)
                    if (fr.rho[a](i, j) != 0) cols[f][a][j].emplace_back(i, fr.rho[a](i, j));
        }
    }

    // Highest-weight vector: product of the top subsets, ambient index 0.
    SparseVec hw{{0, Rational(1)}};
    for (int i = 0; i + 1 < n; ++i) {
        std::size_t raise = g->index_of(i, i + 1);
        if (!act(factors, cols, raise, hw).empty()) throw Error("build_irrep: no highest-weight vector found");
    }

    std::map<Weight, SparseEchelon> spaces;
    std::vector<SparseVec> vecs;
    std::vector<std::size_t> local_index;  // position inside its weight space
    auto push = [&](SparseVec v, const Weight& w, std::vector<int> word) {
        auto& sp = spaces[w];
        if (!sp.add(v)) return;
        local_index.push_back(sp.count - 1);
        vecs.push_back(std::move(v));
        rep->weights.push_back(w);
        rep->words.push_back(std::move(word));
        if (vecs.size() > dim_bound) throw Error("build_irrep: dimension bound exceeded");
    };
    push(hw, mu, {});
    for (std::size_t next = 0; next < vecs.size(); ++next) {
        for (int i = 0; i + 1 < n; ++i) {
            SparseVec v = act(factors, cols, g->index_of(i + 1, i), vecs[next]);
            if (v.empty()) continue;
            Weight w = sub(rep->weights[next], g->simple_roots[static_cast<std::size_t>(i)]);
            std::vector<int> word = rep->words[next];
            word.insert(word.begin(), i);
            push(std::move(v), w, std::move(word));
        }
    }
    rep->dim = vecs.size();
    if (Integer(static_cast<unsigned long>(rep->dim)) != expected)
        throw Error("build_irrep: lowering closure has dim " + std::to_string(rep->dim) + ", Weyl formula gives " + expected.get_str());

    // Global index of (weight, local position).
    std::map<Weight, std::vector<std::size_t>> global;
    for (std::size_t j = 0; j < rep->dim; ++j) {
        auto& lst = global[rep->weights[j]];
        if (lst.size() <= local_index[j]) lst.resize(local_index[j] + 1);
        lst[local_index[j]] = j;
        rep->weight_table[rep->weights[j]].push_back(j);
    }

    // Weight of each basis element of g under the standard torus.
    std::vector<Weight> basis_weight(N, Weight(static_cast<std::size_t>(n - 1), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                Weight w(static_cast<std::size_t>(n - 1), 0);
                for (int k = 0; k < n - 1; ++k) w[static_cast<std::size_t>(k)] = (i == k) - (i == k + 1) - (j == k) + (j == k + 1);
                basis_weight[g->index_of(i, j)] = w;
            }

    for (std::size_t a = 0; a < N; ++a) {
        QMatrix m(rep->dim, rep->dim);
        for (std::size_t j = 0; j < rep->dim; ++j) {
            SparseVec v = act(factors, cols, a, vecs[j]);
            if (v.empty()) continue;
            Weight w = add(rep->weights[j], basis_weight[a]);
            auto it = spaces.find(w);
            std::optional<QVector> coords;
            if (it != spaces.end()) coords = it->second.coordinates(v);
            if (!coords) throw Error("build_irrep: submodule is not closed under the action");
            const auto& glob = global.at(w);
            for (std::size_t k = 0; k < coords->size(); ++k)
                if ((*coords)[k] != 0) m(glob[k], j) = (*coords)[k];
        }
        rep->rho.push_back(std::move(m));
    }
    rep->log.push_back("lowering closure dim " + std::to_string(rep->dim) + " matches Weyl formula");
    return rep;
}

std::vector<WeightSpace> weight_spaces(const Representation& rep, const std::vector<QVector>& torus)
{
    if (torus.empty()) {
        std::vector<QVector> all;
        for (std::size_t i = 0; i < rep.dim; ++i) {
            QVector e(rep.dim);
            e[i] = 1;
            all.push_back(e);
        }
        return {{{}, all}};
    }
    std::vector<QMatrix> ms;
    for (const auto& t : torus) ms.push_back(rep.rho_of(t));
    std::vector<WeightSpace> out;
    for (auto& blk : joint_invariant_decomposition(ms)) {
        WeightSpace ws;
        for (std::size_t k = 0; k < ms.size(); ++k) {
            if (!blk.eigenvalues[k]) throw Error("weight_spaces: irrational spectrum");
            Rational ev = *blk.eigenvalues[k];
            for (const auto& v : blk.basis) {
                QVector mv = ms[k].apply(v);
                for (std::size_t i = 0; i < mv.size(); ++i)
                    if (mv[i] != ev * v[i]) throw Error("weight_spaces: torus element is not semisimple");
            }
            ws.label.push_back(ev);
        }
        ws.basis = std::move(blk.basis);
        out.push_back(std::move(ws));
    }
    return out;
}

bool check_bracket_fidelity(const Representation& rep)
{
    auto g = rep.algebra();
    for (std::size_t a = 0; a < g->dim; ++a)
        for (std::size_t b = a + 1; b < g->dim; ++b)
            if (!(commutator(rep.rho[a], rep.rho[b]) == rep.rho_of(g->bracket[a][b]))) return false;
    return true;
}

namespace {

nlohmann::json matrix_json(const QMatrix& m)
{
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        arr.push_back(row);
    }
    return arr;
}

QMatrix matrix_from_json(const nlohmann::json& j)
{
    std::vector<QVector> rows;
    for (const auto& r : j) {
        QVector row;
        for (const auto& x : r) row.push_back(parse_rational(x.get<std::string>()));
        rows.push_back(row);
    }
    return QMatrix::from_rows(rows);
}

}  // namespace

std::string rep_to_json(const Representation& rep)
{
    nlohmann::json j;
    j["version"] = kRepCacheVersion;
    j["n"] = rep.n;
    j["mu"] = rep.mu;
    j["dim"] = rep.dim;
    j["basis_words"] = rep.words;
    j["weights"] = rep.weights;
    auto rho = nlohmann::json::array();
    for (const auto& m : rep.rho) rho.push_back(matrix_json(m));
    j["rho"] = rho;
    return j.dump();
}

RepPtr rep_from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    if (j.value("version", 0) != kRepCacheVersion) throw Error("representation cache version mismatch");
    auto rep = std::make_shared<Representation>();
    rep->n = j.at("n").get<int>();
    rep->mu = j.at("mu").get<Weight>();
    rep->dim = j.at("dim").get<std::size_t>();
    rep->words = j.at("basis_words").get<std::vector<std::vector<int>>>();
    rep->weights = j.at("weights").get<std::vector<Weight>>();
    for (const auto& m : j.at("rho")) rep->rho.push_back(matrix_from_json(m));
    if (rep->weights.size() != rep->dim || rep->rho.size() != build_sl(rep->n)->dim)
        throw Error("representation cache is inconsistent");
    for (std::size_t i = 0; i < rep->dim; ++i) rep->weight_table[rep->weights[i]].push_back(i);
    rep->log.push_back("loaded from cache");
    return rep;
}

RepPtr build_irrep_cached(const Weight& mu, const std::string& cache_dir, std::size_t dim_bound)
{
    if (cache_dir.empty()) return build_irrep(mu, dim_bound);
    namespace fs = std::filesystem;
    int n = static_cast<int>(mu.size()) + 1;
    std::string key = "sl" + std::to_string(n) + "_mu";
    for (int x : mu) key += "_" + std::to_string(x);
    fs::path path = fs::path(cache_dir) / (key + ".json");
    if (fs::exists(path)) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            auto rep = rep_from_json(ss.str());
            if (rep->mu == mu) return rep;
        } catch (const std::exception&) {
            // Stale or corrupt cache entries are rebuilt below.
        }
    }
    auto rep = build_irrep(mu, dim_bound);
    fs::create_directories(cache_dir);
    std::ofstream out(path);
    out << rep_to_json(*rep);
    return rep;
}

}  // namespace bigalg
