#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "equispectra/io.hpp"

namespace io = equispectra::io;

int main(int argc, char** argv) {
    CLI::App app{"Spectral invariants of equivariant spherical operators"};
    io::JobSpec job;
    std::string mode = "exact";
    std::string alpha, out;
    app.add_option("command", job.command, "validate|spectrum|eta|euler|beta|lens-eta|verify")
        ->required()
        ->check(CLI::IsMember({"validate", "spectrum", "eta", "euler", "beta", "lens-eta", "verify"}));
    app.add_option("--in", job.in, "input file");
    app.add_option("--alpha", alpha, "restrict to one irreducible (by name)");
    app.add_option("--mmax", job.mmax, "largest polynomial degree for verify")->capture_default_str();
    app.add_option("--lmax", job.lmax, "largest |lambda| materialized")->capture_default_str();
    app.add_option("--tol", job.tol, "float tolerance")->capture_default_str();
    app.add_option("--out", out, "report path (default: stdout)");
    app.add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
    app.add_option("--p", job.p, "lens-eta: order of the cyclic group");
    app.add_option("--m", job.m, "lens-eta: first rotation weight");
    app.add_option("--n", job.n, "lens-eta: second rotation weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        io::Json rep = io::envelope(job.command, "");
        rep["error"] = io::error_object(equispectra::Error("validation", "cli_io", e.what()));
        std::cout << rep.dump(2) << "\n";
        return 1;
    }
    if (!alpha.empty()) job.alpha = alpha;
    if (!out.empty()) job.out = out;
    job.mode = mode == "float" ? io::Mode::float_ : io::Mode::exact;

    const auto result = io::run(job);
    const std::string text = result.report.dump(2) + "\n";
    if (job.out) {
        std::ofstream f(*job.out);
        if (!f) {
            std::cerr << "cannot write " << *job.out << "\n";
            return 1;
        }
        f << text;
    } else {
        std::cout << text;
    }
    if (result.status != 0 && result.report.contains("error")) std::cerr << result.report["error"].dump() << "\n";
    return result.status;
}
