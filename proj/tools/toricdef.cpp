// Command-line front end: graded deformation and obstruction pieces of
// affine toric varieties, with the polygon specialization and a built-in
// verification suite.

#include "toric/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

namespace {

int emit(const toric::Json& j, bool pretty)
{
    if (pretty)
        std::cout << j.dump(2) << std::endl;
    else
        std::cout << j.dump() << std::endl;
    return 0;
}

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact deformation/obstruction computations for affine toric varieties"};
    app.require_subcommand(1);

    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");
    bool json_mode = true;
    app.add_flag("--json", json_mode, "JSON output (default)");

    std::string cone_path, polygon_path, degree, degR, degS;
    long long bound = 2, kmax = 4;
    size_t phi_index = 0, psi_index = 0;
    bool verify_flag = false;

    auto* hilbert = app.add_subcommand("hilbert", "minimal generating set of the semigroup");
    hilbert->add_option("--cone", cone_path, "cone JSON file")->required();

    auto* t1 = app.add_subcommand("t1", "dimension and basis of the degree -R piece of T1");
    t1->add_option("--cone", cone_path)->required();
    t1->add_option("--degree", degree, "comma-separated degree R")->required();

    auto* t2 = app.add_subcommand("t2", "dimension and basis of the degree -R piece of T2");
    t2->add_option("--cone", cone_path)->required();
    t2->add_option("--degree", degree)->required();

    auto* scan = app.add_subcommand("scan", "all nonzero graded pieces in the default box");
    scan->add_option("--cone", cone_path)->required();
    scan->add_option("--bound", bound, "lower height bound of the scan box (default 2)");

    auto* cup = app.add_subcommand("cup", "cup product of two T1 basis elements");
    cup->add_option("--cone", cone_path)->required();
    cup->add_option("--degR", degR)->required();
    cup->add_option("--degS", degS)->required();
    cup->add_option("--phi-index", phi_index);
    cup->add_option("--psi-index", psi_index);

    auto* gor = app.add_subcommand("gorenstein", "polygon specialization report");
    gor->add_option("--polygon", polygon_path, "polygon JSON file")->required();
    gor->add_option("--kmax", kmax, "largest multiple of R* to report (default 4)");
    gor->add_flag("--verify", verify_flag, "cross-validate closed forms against the machinery");

    auto* verify_all = app.add_subcommand("verify-all", "run the verification suite");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const Stopwatch watch;
        if (*hilbert) {
            const toric::Cone c = toric::parse_cone_file(cone_path);
            const toric::HilbertBasis hb = toric::hilbert_basis(c);
            const toric::Json payload = toric::hilbert_report(c, hb);
            return emit(toric::run_report("hilbert", cone_path, payload, watch.ms()), pretty);
        }
        if (*t1) {
            const toric::Cone c = toric::parse_cone_file(cone_path);
            const toric::HilbertBasis hb = toric::hilbert_basis(c);
            const toric::Json payload = toric::t1_report(c, hb, toric::parse_degree(degree, c.rank));
            return emit(toric::run_report("t1", cone_path, payload, watch.ms()), pretty);
        }
        if (*t2) {
            const toric::Cone c = toric::parse_cone_file(cone_path);
            const toric::HilbertBasis hb = toric::hilbert_basis(c);
            const toric::Json payload = toric::t2_report(c, hb, toric::parse_degree(degree, c.rank));
            return emit(toric::run_report("t2", cone_path, payload, watch.ms()), pretty);
        }
        if (*scan) {
            const toric::Cone c = toric::parse_cone_file(cone_path);
            const toric::HilbertBasis hb = toric::hilbert_basis(c);
            const toric::Json payload = toric::scan_report(c, hb, toric::Int(bound));
            return emit(toric::run_report("scan", cone_path, payload, watch.ms()), pretty);
        }
        if (*cup) {
            const toric::Cone c = toric::parse_cone_file(cone_path);
            const toric::HilbertBasis hb = toric::hilbert_basis(c);
            const toric::Json payload =
                toric::cup_report(c, hb, toric::parse_degree(degR, c.rank),
                                  toric::parse_degree(degS, c.rank), phi_index, psi_index);
            return emit(toric::run_report("cup", cone_path, payload, watch.ms()), pretty);
        }
        if (*gor) {
            const toric::LatticePolygon q = toric::parse_polygon_file(polygon_path);
            const toric::Json payload = toric::gorenstein_report(q, toric::Int(kmax), verify_flag);
            emit(toric::run_report("gorenstein", polygon_path, payload, watch.ms()), pretty);
            if (verify_flag && payload.contains("verify") &&
                !payload["verify"]["all_match"].get<bool>())
                return 1;
            return 0;
        }
        if (*verify_all) {
            const toric::VerifyReport rep = toric::run_acceptance();
            emit(toric::run_report("verify-all", "", toric::verify_report_json(rep), watch.ms()),
                 pretty);
            return rep.all_pass ? 0 : 1;
        }
    } catch (const toric::Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
