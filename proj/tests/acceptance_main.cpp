#include "bigalg/acceptance.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance suite"};
    int only = 0;
    bool verbose = false;
    bigalg::AcceptanceOptions opts;
    app.add_option("--criterion", only, "Run a single criterion (1-12)")->check(CLI::Range(1, bigalg::kCriterionCount));
    app.add_option("--seed", opts.seed, "Seed for random points");
    app.add_option("--cache", opts.cache_dir, "Representation cache directory");
    app.add_flag("-v,--verbose", verbose, "Print per-check details");
    CLI11_PARSE(app, argc, argv);
    if (const char* env = std::getenv("BIGALG_CACHE")) opts.cache_dir = env;

    bool all = true;
    for (int id = 1; id <= bigalg::kCriterionCount; ++id) {
        if (only != 0 && id != only) continue;
        auto r = bigalg::run_criterion(id, opts);
        all = all && r.passed;
        std::printf("criterion %2d %s  %s (%.2fs)\n", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
        for (const auto& d : r.details)
            if (verbose || !r.passed) std::printf("    %s\n", d.c_str());
    }
    return all ? 0 : 1;
}
