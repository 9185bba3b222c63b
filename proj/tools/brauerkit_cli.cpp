// brauerkit: formal Brauer groups of K3 surfaces and Landweber exactness.
//
// Subcommands: stienstra-ci, stienstra-dp, artin, height, landweber take a job
// document (see README for the grammar); reproduce runs the table of known
// computations. Exit codes: 0 success, 1 pipeline error, 2 parse error.

#include <CLI11.hpp>

#include "brauerkit/report.hpp"
#include "brauerkit/reproduce.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw brauerkit::Error("cannot open job file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonOpts {
    std::string job_file;
    std::string format = "text";
    unsigned long prime = 0;
    int order = 0;
    int hmax = 0;
    bool prime_set = false, order_set = false, hmax_set = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_job) {
    if (with_job)
        cmd->add_option("job", o.job_file, "job document file")->required();
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));
    cmd->add_option("--prime", o.prime, "override the job's prime")
        ->each([&](const std::string&) { o.prime_set = true; });
    cmd->add_option("--order", o.order, "override the truncation order")
        ->each([&](const std::string&) { o.order_set = true; });
    cmd->add_option("--hmax", o.hmax, "override the height bound")
        ->each([&](const std::string&) { o.hmax_set = true; });
}

int run_surface_command(const CommonOpts& o, brauerkit::JobSpec::Kind expected_kind,
                        const std::vector<std::string>& forced_outputs) {
    brauerkit::JobSpec job = brauerkit::parse_job(slurp(o.job_file));
    if (job.kind != expected_kind)
        throw brauerkit::PreconditionError("job kind does not match the subcommand");
    if (o.prime_set) job.prime = o.prime;
    if (o.order_set) job.order = o.order;
    if (o.hmax_set) job.hmax = o.hmax;
    if (!forced_outputs.empty()) job.outputs = forced_outputs;
    if (job.outputs.empty()) job.outputs = {"log", "fgl", "p_series", "height"};
    brauerkit::JobResult res = brauerkit::run_job(job);
    std::cout << (o.format == "machine" ? res.machine : res.text);
    return 0;
}

int run_any_kind(const CommonOpts& o, const std::vector<std::string>& forced_outputs) {
    brauerkit::JobSpec job = brauerkit::parse_job(slurp(o.job_file));
    if (o.prime_set) job.prime = o.prime;
    if (o.order_set) job.order = o.order;
    if (o.hmax_set) job.hmax = o.hmax;
    job.outputs = forced_outputs;
    brauerkit::JobResult res = brauerkit::run_job(job);
    std::cout << (o.format == "machine" ? res.machine : res.text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"formal Brauer groups of K3 surfaces and Landweber exactness"};
    app.require_subcommand(1);

    CommonOpts ci_o, dp_o, artin_o, height_o, lw_o, repro_o;
    CLI::App* ci = app.add_subcommand("stienstra-ci", "complete-intersection pipeline");
    add_common(ci, ci_o, true);
    CLI::App* dp = app.add_subcommand("stienstra-dp", "double-plane pipeline");
    add_common(dp, dp_o, true);
    CLI::App* artin = app.add_subcommand("artin", "elliptic Weierstrass pipeline");
    add_common(artin, artin_o, true);
    CLI::App* height = app.add_subcommand("height", "height of the formal Brauer group");
    add_common(height, height_o, true);
    CLI::App* lw = app.add_subcommand("landweber", "Landweber exactness report");
    add_common(lw, lw_o, true);
    CLI::App* repro = app.add_subcommand("reproduce", "run the reproduction table of known computations");
    add_common(repro, repro_o, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (ci->parsed())
            return run_surface_command(ci_o, brauerkit::JobSpec::Kind::CompleteIntersection, {});
        if (dp->parsed())
            return run_surface_command(dp_o, brauerkit::JobSpec::Kind::DoublePlane, {});
        if (artin->parsed())
            return run_surface_command(artin_o, brauerkit::JobSpec::Kind::EllipticWeierstrass, {});
        if (height->parsed()) return run_any_kind(height_o, {"height"});
        if (lw->parsed()) return run_any_kind(lw_o, {"landweber"});
        if (repro->parsed()) {
            brauerkit::ReproResult r = brauerkit::reproduce_paper(repro_o.order);
            if (repro_o.format == "machine") {
                std::ostringstream os;
                os << "{\n  \"schema\": \"brauerkit/1\",\n  \"rows\": [\n";
                for (size_t i = 0; i < r.rows.size(); ++i) {
                    const auto& row = r.rows[i];
                    os << "    {\"name\": \"" << row.name << "\", \"status\": \""
                       << (row.skipped_by_order ? "skipped-by-order"
                                                : (row.pass ? "pass" : "fail"))
                       << "\"}" << (i + 1 < r.rows.size() ? "," : "") << "\n";
                }
                os << "  ]\n}\n";
                std::cout << os.str();
            } else {
                std::cout << brauerkit::render_table(r);
            }
            return r.all_pass() ? 0 : 1;
        }
    } catch (const brauerkit::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
