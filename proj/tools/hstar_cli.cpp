// Command-line front end: constants tables, symbol products, the property
// suite, and K-spectrum decomposition of symbol files.
//
// Exit codes: 0 success, 1 suite/tolerance failure, 2 usage or contract
// error, 3 mathematical pole.

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "hstar/symbol_io.hpp"
#include "hstar/verification.hpp"

namespace {

// Full-precision CSV cell: 17 significant digits round-trips a double.
std::string cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::FILE* f = std::fopen(out_path.c_str(), "w");
    if (!f) throw hstar::Error("cannot open output file: " + out_path);
    std::fputs(text.c_str(), f);
    std::fclose(f);
}

int run_constants(int n, double sigma, int l_max, const std::string& out) {
    const auto ctx = hstar::CalculusContext::build(n, sigma, l_max);
    std::string csv =
        "n,sigma,ell,re_e_ell,im_e_ell,abs_e_ell_sq,re_c,re_d,im_d,abs_d_e_ell\n";
    bool pass = true;
    for (int l = 0; l <= l_max; l += 2) {
        const hstar::Complex e = ctx.e(l);
        const double de = std::abs(ctx.d * e);
        csv += std::to_string(n) + "," + cell(sigma) + "," + std::to_string(l) + "," +
               cell(e.real()) + "," + cell(e.imag()) + "," + cell(std::norm(e)) + "," +
               cell(ctx.c.real()) + "," + cell(ctx.d.real()) + "," + cell(ctx.d.imag()) +
               "," + cell(de) + "\n";
        // Invariant columns: |e_l|^2 = c and |d e_l| = 1.
        pass = pass && std::abs(std::norm(e) - ctx.c.real()) <= 1e-9 &&
               std::abs(de - 1.0) <= 1e-9;
    }
    pass = pass && std::abs(std::norm(ctx.d) * ctx.c - 1.0) <= 1e-9;
    emit(csv, out);
    return pass ? 0 : 1;
}

int max_degree(const hstar::Symbol& f) {
    int m = 0;
    for (const auto& [k, b] : f.blocks) m = std::max({m, k.first, k.second});
    return m;
}

int run_product(const std::string& f_path, const std::string& g_path,
                const std::string& out) {
    const hstar::Symbol f = hstar::read_symbol(f_path);
    const hstar::Symbol g = hstar::read_symbol(g_path);
    hstar::require_same_context(f, g, "product");
    const auto ctx = hstar::CalculusContext::build(
        f.n, f.sigma, std::max(max_degree(f), max_degree(g)));
    const hstar::Symbol p = hstar::star_product(f, g, ctx);
    if (!out.empty()) hstar::write_symbol(p, out);
    const double nf = f.norm(), ng = g.norm(), np = p.norm();
    std::printf("||F|| = %.17g\n||G|| = %.17g\n||F#G|| = %.17g\n", nf, ng, np);
    std::printf("submultiplicativity margin ||F#G|| - ||F||||G|| = %.17g\n",
                np - nf * ng);
    return 0;
}

int run_verify(const hstar::VerifyConfig& cfg) {
    const hstar::VerifyReport rep = hstar::run_verification(cfg);
    std::fputs(hstar::format_report(rep).c_str(), stdout);
    return rep.all_pass ? 0 : 1;
}

int run_spectrum(const std::string& f_path, const std::string& out) {
    const hstar::Symbol f = hstar::read_symbol(f_path);
    const hstar::KInvariantSymbol k = hstar::k_project(f);
    std::string csv = "row_degree,col_degree,re_coeff,im_coeff,off_k_residual\n";
    for (const auto& [key, b] : f.blocks) {
        const auto [l, m] = key;
        hstar::Complex a{0.0, 0.0};
        double residual;
        if (l == m) {
            if (auto it = k.values.find(l); it != k.values.end()) a = it->second;
            residual =
                (b - a * Eigen::MatrixXcd::Identity(b.rows(), b.cols())).norm();
        } else {
            residual = b.norm();  // off-diagonal blocks carry no K-invariant part
        }
        csv += std::to_string(l) + "," + std::to_string(m) + "," + cell(a.real()) + "," +
               cell(a.imag()) + "," + cell(residual) + "\n";
    }
    emit(csv, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"covariant symbolic calculus toolkit"};
    app.require_subcommand(1);

    const auto nonzero_sigma = CLI::Validator(
        [](std::string& s) -> std::string {
            double v = 0.0;
            try {
                v = std::stod(s);
            } catch (...) {
                return "sigma: not a number";
            }
            if (v == 0.0 || !std::isfinite(v))
                return "the spectral parameter sigma must be a nonzero real "
                       "(the calculus is undefined at sigma = 0)";
            return {};
        },
        "NONZERO");
    const auto even_l = CLI::Validator(
        [](std::string& s) -> std::string {
            const int v = std::atoi(s.c_str());
            if (v < 0 || v % 2 != 0 || v > 20)
                return "l-max must be an even integer in [0, 20]";
            return {};
        },
        "EVEN");

    int n = 3, l_max = 8, grid_exactness = 24;
    double sigma = 1.3;
    std::uint64_t seed = 1;
    std::string out, f_path, g_path;

    auto* c_const = app.add_subcommand("constants", "tabulate e_l, c, d and their invariants");
    c_const->add_option("--n", n, "ambient dimension")->check(CLI::Range(3, 16));
    c_const->add_option("--sigma", sigma, "spectral parameter")
        ->required()
        ->check(nonzero_sigma);
    c_const->add_option("--l-max", l_max, "largest even degree")->check(even_l);
    c_const->add_option("--out", out, "CSV output path (default stdout)");

    auto* c_prod = app.add_subcommand("product", "star product of two symbol files");
    c_prod->add_option("f", f_path, "left symbol JSON")->required();
    c_prod->add_option("g", g_path, "right symbol JSON")->required();
    c_prod->add_option("--out", out, "output symbol JSON path");

    auto* c_verify = app.add_subcommand("verify", "run the full property suite");
    c_verify->add_option("--n", n, "ambient dimension (suite requires 3)");
    auto* sigma_opt = c_verify->add_option("--sigma", sigma, "restrict to one sigma")
                          ->check(nonzero_sigma);
    c_verify->add_option("--l-max", l_max, "largest even degree")->check(even_l);
    c_verify->add_option("--grid-exactness", grid_exactness, "sphere grid polynomial exactness")
        ->check(CLI::Range(4, 512));
    c_verify->add_option("--seed", seed, "seed for the random-symbol suites");

    auto* c_spec = app.add_subcommand("spectrum", "K-projection coefficients per degree pair");
    c_spec->add_option("f", f_path, "symbol JSON")->required();
    c_spec->add_option("--out", out, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_const->parsed()) return run_constants(n, sigma, l_max, out);
        if (c_prod->parsed()) return run_product(f_path, g_path, out);
        if (c_verify->parsed()) {
            hstar::VerifyConfig cfg;
            cfg.n = n;
            if (sigma_opt->count() > 0) cfg.sigmas = {sigma};
            cfg.l_max = l_max;
            cfg.grid_exactness = grid_exactness;
            cfg.seed = seed;
            return run_verify(cfg);
        }
        if (c_spec->parsed()) return run_spectrum(f_path, out);
    } catch (const hstar::PoleError& e) {
        std::fprintf(stderr, "pole: %s\n", e.what());
        return 3;
    } catch (const hstar::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
