#include "paradec/harness.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

using paradec::Json;
using paradec::Report;

int emit(const Report& rep, const std::string& out_path) {
    std::string dumped = rep.to_json().dump(2);
    dumped += "\n";
    if (out_path.empty()) {
        std::cout << dumped;
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        os << dumped;
        std::cout << rep.human();
    }
    return rep.exit_code();
}

Json load_json(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::invalid_argument("cannot read " + path);
    return Json::parse(is);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact paradoxical-decomposition toolkit for non-Archimedean valued fields"};
    app.set_config("--config", "", "plain key=value config file; flags win on conflict");
    app.require_subcommand(1);
    app.fallthrough();  // --out may follow the subcommand

    std::string out;
    app.add_option("--out", out, "write the JSON report here and print a human summary")
        ->configurable(true);

    int maxlen = 8;
    std::string pairs = "panel";
    auto* traces = app.add_subcommand("verify-traces", "trace-polynomial identity audit");
    traces->add_option("--maxlen", maxlen, "maximum reduced word length")->configurable(true);
    traces->add_option("--pairs", pairs, "magnus | panel")->configurable(true);

    int psi_maxlen = 8;
    std::string psi_setting = "both";
    auto* psi = app.add_subcommand("verify-psi", "valuation law for the substituted traces");
    psi->add_option("--maxlen", psi_maxlen, "maximum class length")->configurable(true);
    psi->add_option("--setting", psi_setting, "char0 | char2 | both")->configurable(true);

    int free_maxlen = 10;
    std::string free_pair = "magnus";
    auto* freeness = app.add_subcommand("freeness-audit", "nonparabolic trace scan");
    freeness->add_option("--maxlen", free_maxlen, "maximum word length")->configurable(true);
    freeness->add_option("--pair", free_pair, "magnus | f2s")->configurable(true);

    std::string iso_field = "q2";
    int iso_n = 2, iso_samples = 200, iso_vectors = 100;
    auto* iso = app.add_subcommand("isometry-check", "linear isometry characterization audit");
    iso->add_option("--field", iso_field, "field shorthand")->configurable(true);
    iso->add_option("--n", iso_n, "dimension")->configurable(true);
    iso->add_option("--samples", iso_samples, "number of matrices")->configurable(true);
    iso->add_option("--vectors", iso_vectors, "norm sample vectors per matrix")->configurable(true);

    std::string cov_field = "q2";
    int cov_n = 2, cov_i = 0, cov_j = 1;
    auto* cover = app.add_subcommand("cover-ball", "ball covering by smaller-ball translates");
    cover->add_option("--field", cov_field, "field shorthand")->configurable(true);
    cover->add_option("--n", cov_n, "dimension")->configurable(true);
    cover->add_option("--i", cov_i, "outer radius exponent")->configurable(true);
    cover->add_option("--j", cov_j, "inner radius exponent")->configurable(true);

    paradec::RunConfig build_cfg;
    std::string cert_out = "certificate.json";
    auto* build = app.add_subcommand("build-decomposition", "construct a decomposition certificate");
    build->add_option("--target", build_cfg.target,
                      "ball-no-0 | sphere-far | sphere0 | ball0 | sphere-with-0 | kn-minus-0 | "
                      "whole-space")
        ->configurable(true);
    build->add_option("--field", build_cfg.field, "field shorthand")->configurable(true);
    build->add_option("--n", build_cfg.n, "dimension")->configurable(true);
    build->add_option("--radius-exp", build_cfg.radius_exp, "radius = base^-exp")
        ->configurable(true);
    build->add_option("--eps-exp", build_cfg.eps_exp, "eps = base^-exp")->configurable(true);
    build->add_option("--center", build_cfg.center, "target center (field grammar)")
        ->configurable(true);
    build->add_option("--cert-out", cert_out, "certificate file to write")->configurable(true);

    std::string cert_in;
    int depth = 5;
    std::string seeds = "default";
    auto* verify = app.add_subcommand("verify-decomposition", "verify a certificate on orbit truncations");
    verify->add_option("--cert", cert_in, "certificate file")->required()->configurable(true);
    verify->add_option("--depth", depth, "orbit truncation depth")->configurable(true);
    verify->add_option("--seeds", seeds, "seed list or 'default'")->configurable(true);

    std::string report_in;
    auto* show = app.add_subcommand("report", "pretty-print a JSON report");
    show->add_option("--in", report_in, "report file")->required()->configurable(true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints usage/help text itself
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (traces->parsed()) return emit(paradec::run_verify_traces(maxlen, pairs), out);
        if (psi->parsed()) return emit(paradec::run_verify_psi(psi_maxlen, psi_setting), out);
        if (freeness->parsed())
            return emit(paradec::run_freeness_audit(free_maxlen, free_pair), out);
        if (iso->parsed())
            return emit(paradec::run_isometry_check(iso_field, iso_n, iso_samples, iso_vectors),
                        out);
        if (cover->parsed()) return emit(paradec::run_cover_ball(cov_field, cov_n, cov_i, cov_j), out);
        if (build->parsed()) {
            Json cert;
            Report rep = paradec::run_build_decomposition(build_cfg, &cert);
            std::ofstream os(cert_out, std::ios::binary);
            if (!os) {
                std::cerr << "cannot write " << cert_out << "\n";
                return 2;
            }
            os << cert.dump(2) << "\n";
            return emit(rep, out);
        }
        if (verify->parsed())
            return emit(paradec::run_verify_decomposition(load_json(cert_in), depth, seeds), out);
        if (show->parsed()) {
            Report rep = Report::from_json(load_json(report_in));
            std::cout << rep.human();
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand\n";
    return 2;
}
