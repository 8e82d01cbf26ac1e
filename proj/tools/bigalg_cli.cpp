#include "bigalg/acceptance.hpp"
#include "bigalg/big_algebra.hpp"
#include "bigalg/json_io.hpp"
#include "bigalg/multiplicity.hpp"
#include "bigalg/spectra.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

using namespace bigalg;

namespace {

struct RunConfig {
    int n = 0;
    std::string mu_text;
    std::string lambda_text;
    std::uint64_t seed = 0;
    std::string cache_dir;
    int max_degree = 0;
    std::string out;
    std::string verify;
    std::string grid;
    std::string torus = "standard";
    std::string recipe;
    bool list = false;
    bool at_principal = false;
    int criterion = 0;

    Weight mu;
    std::optional<Weight> lambda;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json config_json(const std::string& command, const RunConfig& c)
{
    Json j;
    j["command"] = command;
    if (c.n) j["n"] = c.n;
    if (!c.mu.empty()) j["mu"] = c.mu;
    if (c.lambda) j["lambda"] = *c.lambda;
    j["seed"] = c.seed;
    if (c.max_degree) j["max_degree"] = c.max_degree;
    if (!c.grid.empty()) j["grid"] = c.grid;
    if (command == "brylinski") j["torus"] = c.torus;
    return j;
}

void write_json(const Json& j, const std::string& path)
{
    if (path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    f << j.dump(2) << '\n';
}

void validate(const std::string& command, RunConfig& c, bool needs_rep, bool needs_lambda)
{
    if (needs_rep) {
        if (c.n < 2) throw UsageError(command + ": --n must be at least 2");
        if (c.mu_text.empty()) throw UsageError(command + ": --mu is required");
        try {
            c.mu = parse_weight(c.mu_text, c.n);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        if (!is_dominant(c.mu)) throw UsageError("--mu must be dominant");
    }
    if (needs_lambda) {
        if (c.lambda_text.empty()) throw UsageError(command + ": --lambda is required");
        try {
            c.lambda = parse_weight(c.lambda_text, c.n);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        if (!is_dominant(*c.lambda)) throw UsageError("--lambda must be dominant");
    }
    if (const char* env = std::getenv("BIGALG_CACHE")) c.cache_dir = env;
}

RepPtr load_rep(const RunConfig& c) { return build_irrep_cached(c.mu, c.cache_dir); }

Json weight_table_json(const Representation& rep)
{
    Json w = Json::array();
    for (const auto& [lambda, idx] : rep.weight_table) w.push_back({{"weight", lambda}, {"multiplicity", idx.size()}});
    return w;
}

Json calibration_json(const Calibration& cal)
{
    Json gens = Json::array();
    for (const auto& g : cal.generators)
        gens.push_back({{"label", g.section.label},
                        {"operator", "D^" + std::to_string(g.i) + "(c" + std::to_string(g.k) + ")"},
                        {"degree", g.section.degree},
                        {"scalar", to_string(g.scalar)}});
    Json checks = Json::array();
    for (const auto& c : cal.checks)
        checks.push_back({{"check", c.name},
                          {"expected", to_string(c.expected)},
                          {"actual", to_string(c.actual)},
                          {"status", c.passed ? "PASS" : "FAIL"}});
    return {{"generators", gens}, {"checks", checks}};
}

int cmd_rep(const RunConfig& c)
{
    auto rep = load_rep(c);
    Json j;
    j["config"] = config_json("rep", c);
    j["dim"] = rep->dim;
    j["weights"] = weight_table_json(*rep);
    j["basis_words"] = rep->words;
    j["bracket_fidelity"] = check_bracket_fidelity(*rep) ? "PASS" : "FAIL";
    write_json(j, c.out);
    return 0;
}

int cmd_ops(const RunConfig& c)
{
    auto rep = load_rep(c);
    auto cal = calibrate_generators(rep);
    Json j;
    j["config"] = config_json("ops", c);
    j["calibration"] = calibration_json(cal);
    Json ratios = Json::array();
    auto small = small_operator(rep);
    for (int k = 2; k <= rep->n; ++k) {
        auto d = wei_D(scalar_element(rep, invariant_ck(rep->n, k)));
        auto r = proportionality(d.matrix, medium_operator(rep, k).matrix);
        ratios.push_back({{"k", k}, {"D(c_k) / medium_k", r ? to_string(*r) : "not proportional"}});
    }
    j["medium_ratios"] = ratios;
    if (auto r = proportionality(medium_operator(rep, 2).matrix, small.matrix)) j["medium_2 / small"] = to_string(*r);
    if (!c.list) {
        Json sec = Json::object();
        for (const auto& g : cal.generators) sec[g.section.label] = polymatrix_to_json(g.section.matrix);
        j["section_operators"] = sec;
    }
    write_json(j, c.out);
    return 0;
}

int cmd_hilbert(const RunConfig& c)
{
    auto rep = load_rep(c);
    auto hs = hilbert_series(rep, calibrate_generators(rep).sections());
    Json j;
    j["config"] = config_json("hilbert", c);
    j["numerator"] = qpoly_to_json(hs.numerator);
    j["numerator_text"] = hs.numerator.to_string();
    j["formula"] = qpoly_to_json(hs.formula);
    j["denominator_exponents"] = hs.denominator_exponents;
    j["value_at_1"] = hs.numerator.at_one().get_si();
    j["dim"] = rep->dim;
    j["status"] = hs.agree ? "PASS" : "FAIL";
    write_json(j, c.out);
    return 0;
}

int cmd_relations(const RunConfig& c)
{
    auto rep = load_rep(c);
    auto cal = calibrate_generators(rep);
    auto gens = cal.sections();
    int maxd = c.max_degree > 0 ? c.max_degree : 2 * c.n;
    Json j;
    j["config"] = config_json("relations", c);
    Json g = Json::array();
    for (const auto& s : gens) g.push_back({{"name", s.label}, {"degree", s.degree}});
    j["generators"] = g;
    if (c.verify.empty()) {
        auto ring = presentation_ring(gens, c.n);
        Json rels = Json::array(), text = Json::array();
        for (const auto& r : derive_relations(ring, gens, rep->dim, maxd)) {
            rels.push_back(relation_to_json(r));
            text.push_back(r.to_string());
        }
        j["relations"] = rels;
        j["relations_text"] = text;
        j["max_checked_degree"] = maxd;
        write_json(j, c.out);
        return 0;
    }
    std::ifstream f(c.verify);
    if (!f) throw UsageError("cannot read " + c.verify);
    Json in = Json::parse(f);
    // Generators named in the file select the subalgebra; default is all calibrated generators.
    std::vector<SectionOperator> chosen;
    if (in.contains("generators")) {
        for (const auto& e : in["generators"]) {
            std::string name = e.is_string() ? e.get<std::string>() : e.at("name").get<std::string>();
            chosen.push_back(cal.get(name).section);
        }
    } else {
        chosen = gens;
    }
    auto ring = presentation_ring(chosen, c.n);
    std::vector<MultiPoly> rels;
    for (const auto& r : in.at("relations")) rels.push_back(relation_from_json(r, ring.vars));
    auto report = verify_presentation(ring, chosen, rep->dim, rels, maxd);
    Json checks = Json::array();
    for (const auto& r : report.relations) {
        Json e{{"relation", r.relation}, {"status", r.zero ? "PASS" : "FAIL"}};
        if (!r.zero) e["first_nonzero"] = r.first_nonzero;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["ideal_dims"] = report.ideal_dims;
    j["relation_space_dims"] = report.kernel_dims;
    j["graded_dims_match"] = report.graded_dims_match;
    j["status"] = report.passed() ? "PASS" : "FAIL";
    write_json(j, c.out);
    return 0;
}

int cmd_brylinski(const RunConfig& c)
{
    auto rep = load_rep(c);
    Torus t;
    try {
        t = parse_torus(c.torus);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (!rep->weight_table.count(*c.lambda)) throw UsageError("--lambda is not a weight of the representation");
    auto bf = brylinski_filtration(*rep, *c.lambda, t);
    auto m = lusztig_m(c.mu, *c.lambda);
    Json j;
    j["config"] = config_json("brylinski", c);
    j["F_dims"] = bf.dims;
    j["jump_series"] = qpoly_to_json(bf.jump_series);
    j["lusztig_m"] = qpoly_to_json(m);
    j["status"] = bf.jump_series == m ? "PASS" : "FAIL";
    write_json(j, c.out);
    return 0;
}

int cmd_qanalogue(const RunConfig& c)
{
    Json j;
    j["config"] = config_json("qanalogue", c);
    j["m"] = qpoly_to_json(lusztig_m(c.mu, *c.lambda));
    write_json(j, c.out);
    return 0;
}

int cmd_multalg(const RunConfig& c)
{
    auto rep = load_rep(c);
    if (!rep->weight_table.count(*c.lambda)) throw UsageError("--lambda is not a weight of the representation");
    auto gens = generators_at_e(calibrate_generators(rep));
    auto qa = multiplicity_algebra(*rep, gens, *c.lambda);
    auto qc = quotient_chain_check(*rep, gens, *c.lambda);
    Json j;
    j["config"] = config_json("multalg", c);
    j["dim"] = qa.limit_space.size();
    j["graded_dims"] = qa.graded_dims;
    j["hilbert"] = qpoly_to_json(qa.hilbert);
    j["lusztig_m"] = qpoly_to_json(lusztig_m(c.mu, *c.lambda));
    Json nil = Json::object();
    for (std::size_t i = 0; i < qa.labels.size(); ++i) nil[qa.labels[i]] = qa.nilpotency[i];
    j["nilpotency"] = nil;
    // Structure constants on the graded basis b_0, b_1, ...
    std::vector<QMatrix> basis;
    Json degrees = Json::array();
    for (std::size_t i = 0; i < qa.graded_basis.size(); ++i)
        for (const auto& b : qa.graded_basis[i]) {
            basis.push_back(b);
            degrees.push_back(i);
        }
    std::size_t d = qa.limit_space.size();
    EchelonBasis eb(d * d, true);
    for (const auto& b : basis) eb.add(b.data());
    Json table = Json::array();
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b) {
            auto coords = eb.coordinates((basis[a] * basis[b]).data());
            Json cs = Json::array();
            if (coords)
                for (const auto& x : *coords) cs.push_back(to_string(x));
            table.push_back({{"i", a}, {"j", b}, {"product", cs}});
        }
    j["basis_degrees"] = degrees;
    j["structure_constants"] = table;
    j["quotient_chain"] = qc.passed() ? "PASS" : "FAIL";
    j["status"] = qa.hilbert == lusztig_m(c.mu, *c.lambda) && qc.passed() ? "PASS" : "FAIL";
    write_json(j, c.out);
    return 0;
}

int cmd_spectrum(const RunConfig& c)
{
    if (c.at_principal == !c.grid.empty()) throw UsageError("spectrum: give exactly one of --at-principal and --grid");
    if (c.out.empty()) throw UsageError("spectrum: --out FILE.csv is required");
    auto rep = load_rep(c);
    auto cal = calibrate_generators(rep);
    std::vector<Rational> grid;
    if (!c.at_principal) {
        try {
            grid = parse_grid(c.grid);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
    std::ofstream f(c.out);
    if (!f) throw Error("cannot write " + c.out);
    Json j;
    j["config"] = config_json("spectrum", c);
    CsvReport r;
    if (c.at_principal) {
        r = emit_principal_points(cal, f);
        auto ps = principal_spectrum(cal);
        Json table = Json::array();
        for (const auto& [lambda, t] : ps.medium_eigen) {
            Json vals = Json::array();
            for (const auto& x : t) vals.push_back(to_string(x));
            table.push_back({{"weight", lambda}, {"medium", vals}});
        }
        j["medium_labels"] = ps.medium_labels;
        j["medium_eigenvalues"] = table;
        j["injective"] = ps.injective;
    } else {
        SkeletonRecipe recipe = default_recipe(c.n);
        if (c.recipe == "set_c3_zero") recipe = SkeletonRecipe::set_c3_zero;
        else if (c.recipe == "pullback_along_e_plus_tf") recipe = SkeletonRecipe::pullback_along_e_plus_tf;
        else if (c.recipe == "identity") recipe = SkeletonRecipe::identity;
        else if (!c.recipe.empty()) throw UsageError("unknown recipe " + c.recipe);
        auto sk = principal_restriction(cal, recipe);
        j["recipe"] = recipe_name(recipe);
        j["parameter"] = sk.parameter;
        r = emit_skeleton_points(sk, grid, f);
    }
    j["csv"] = c.out;
    j["rows"] = r.rows;
    j["residual_below_1e-9"] = r.passed;
    j["status"] = r.passed ? "PASS" : "FAIL";
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_twining(const RunConfig& c)
{
    auto rep = load_rep(c);
    Json j;
    j["config"] = config_json("twining", c);
    auto cal = calibrate_generators(rep);
    auto s = sigma_automorphism(rep);
    Json gens = Json::object();
    for (const auto& g : cal.generators) gens[g.section.label] = sigma_eigenvalue(s, g.element);
    j["sigma_fixes_principal_triple"] = s.fixes_triple;
    j["intertwiner_valid"] = s.intertwines;
    j["sigma_on_generators"] = gens;
    if (c.n == 3 && c.mu == Weight{1, 1}) {
        auto r = coinvariant_algebra(cal, c.max_degree > 0 ? c.max_degree : 6);
        j["sigma_on_invariants"] = r.sigma_on_invariants;
        j["coinvariant_dims"] = r.coinvariant_dims;
        j["folded_dims"] = r.target_dims;
        Json er = Json::array(), tr = Json::array(), tg = Json::array();
        for (const auto& p : r.even_relations) er.push_back(p.to_string());
        for (const auto& p : r.translated) tr.push_back(p.to_string());
        for (const auto& p : r.target_relations) tg.push_back(p.to_string());
        j["coinvariant_relations"] = er;
        j["dictionary"] = "c2 = 4*c2', M1 = 4*M1'";
        j["translated_relations"] = tr;
        j["folded_relations"] = tg;
        Json traces = Json::array();
        for (std::size_t i = 0; i < r.jantzen_traces.size(); ++i)
            traces.push_back({{"weight", r.jantzen_traces[i].first},
                              {"trace", to_string(r.jantzen_traces[i].second)},
                              {"folded_weight", r.target_weight_dims[i].first},
                              {"folded_multiplicity", r.target_weight_dims[i].second}});
        j["twining_traces"] = traces;
        j["hilbert_match"] = r.hilbert_match;
        j["relations_match"] = r.relations_match;
        j["fixed_scheme_single_parabola"] = r.fixed_scheme_single;
        j["status"] = r.passed() ? "PASS" : "FAIL";
    }
    write_json(j, c.out);
    return 0;
}

int cmd_verify_all(const RunConfig& c)
{
    AcceptanceOptions opts{c.seed, c.cache_dir};
    Json j;
    j["config"] = config_json("verify-all", c);
    Json crit = Json::array();
    bool all = true;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (c.criterion && id != c.criterion) continue;
        auto r = run_criterion(id, opts);
        all = all && r.passed;
        std::fprintf(stderr, "criterion %2d %s  %s (%.2fs)\n", id, r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
        crit.push_back({{"id", id}, {"title", r.title}, {"status", r.passed ? "PASS" : "FAIL"}, {"details", r.details}});
    }
    j["criteria"] = crit;
    j["status"] = all ? "PASS" : "FAIL";
    write_json(j, c.out);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kirillov, medium and big algebras of sl_n representations"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_rep = [&](CLI::App* s) {
        s->add_option("--n", cfg.n, "Rank plus one (sl_n)")->required();
        s->add_option("--mu", cfg.mu_text, "Highest weight, fundamental coordinates, e.g. 1,1")->required();
        s->add_option("--cache", cfg.cache_dir, "Representation cache directory (BIGALG_CACHE overrides)");
        s->add_option("--seed", cfg.seed, "Seed for random points");
        s->add_option("--out", cfg.out, "Output file (default stdout)");
    };
    auto add_lambda = [&](CLI::App* s) {
        s->add_option("--lambda", cfg.lambda_text, "Dominant weight, fundamental coordinates")->required();
    };

    auto* rep = app.add_subcommand("rep", "Build a representation and report its weights");
    add_rep(rep);
    auto* ops = app.add_subcommand("ops", "Calibrated big-algebra generators");
    add_rep(ops);
    ops->add_flag("--list", cfg.list, "Only degrees and calibration scalars");
    auto* hil = app.add_subcommand("hilbert", "Hilbert series numerator, two ways");
    add_rep(hil);
    auto* rel = app.add_subcommand("relations", "Derive or verify relations");
    add_rep(rel);
    rel->add_option("--max-degree", cfg.max_degree, "Degree cutoff (default 2n)");
    rel->add_option("--verify", cfg.verify, "Relation JSON file to verify");
    auto* bry = app.add_subcommand("brylinski", "Brylinski-Kostant filtration of a weight space");
    add_rep(bry);
    add_lambda(bry);
    bry->add_option("--torus", cfg.torus, "standard or h_plus_e");
    auto* qan = app.add_subcommand("qanalogue", "Lusztig q-analogue of weight multiplicity");
    add_rep(qan);
    add_lambda(qan);
    auto* mul = app.add_subcommand("multalg", "Multiplicity algebra of a weight");
    add_rep(mul);
    add_lambda(mul);
    auto* spe = app.add_subcommand("spectrum", "Skeleton or principal spectrum as CSV");
    add_rep(spe);
    spe->add_flag("--at-principal", cfg.at_principal, "Evaluate at the principal point");
    spe->add_option("--grid", cfg.grid, "Parameter grid a:b:steps");
    spe->add_option("--recipe", cfg.recipe, "identity, set_c3_zero or pullback_along_e_plus_tf");
    auto* twi = app.add_subcommand("twining", "Diagram automorphism and coinvariant algebra");
    add_rep(twi);
    twi->add_option("--max-degree", cfg.max_degree, "Degree cutoff for coinvariants (default 6)");
    auto* ver = app.add_subcommand("verify-all", "Run the acceptance suite");
    ver->add_option("--seed", cfg.seed, "Seed for random points");
    ver->add_option("--cache", cfg.cache_dir, "Representation cache directory (BIGALG_CACHE overrides)");
    ver->add_option("--out", cfg.out, "Summary JSON file (default stdout)");
    ver->add_option("--criterion", cfg.criterion, "Run one criterion")->check(CLI::Range(1, kCriterionCount));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rep->parsed()) return validate("rep", cfg, true, false), cmd_rep(cfg);
        if (ops->parsed()) return validate("ops", cfg, true, false), cmd_ops(cfg);
        if (hil->parsed()) return validate("hilbert", cfg, true, false), cmd_hilbert(cfg);
        if (rel->parsed()) return validate("relations", cfg, true, false), cmd_relations(cfg);
        if (bry->parsed()) return validate("brylinski", cfg, true, true), cmd_brylinski(cfg);
        if (qan->parsed()) return validate("qanalogue", cfg, true, true), cmd_qanalogue(cfg);
        if (mul->parsed()) return validate("multalg", cfg, true, true), cmd_multalg(cfg);
        if (spe->parsed()) return validate("spectrum", cfg, true, false), cmd_spectrum(cfg);
        if (twi->parsed()) return validate("twining", cfg, true, false), cmd_twining(cfg);
        if (ver->parsed()) return validate("verify-all", cfg, false, false), cmd_verify_all(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
