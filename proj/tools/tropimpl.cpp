#include "tropimpl/cli.hpp"
#include "tropimpl/errors.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace tropimpl;

int main(int argc, char** argv) {
    CLI::App app{"Tropical implicitization: cycles, Newton and Chow polytopes, implicit equations"};
    app.require_subcommand(1);

    JobSpec job;
    std::string field = "q";
    long delta = 1;
    long height = 0;

    for (const char* name : {"trop-cycle", "adisc", "newton", "implicitize", "chow", "mfp-search"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--in", job.input_path, "input JSON")->required();
        sub->add_option("--out", job.output_path, "output file")->required();
        sub->add_option("--field", field, "q | gf:P | crt:K");
        sub->add_option("--seed", job.seed, "master seed");
        sub->add_option("--height", height, "sampling height (coordinate height for mfp-search)");
        sub->add_option("--delta", delta, "degree of the parametrization map");
        sub->add_flag("--polytope-only", job.polytope_only, "skip the interpolation solve");
        sub->add_option("--threads", job.threads, "worker threads (0 = all cores)");
        sub->add_flag("--force", job.force, "enumerate lattice points beyond the cutoff");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << Json{{"error", error_name(ErrorCode::Parse)}, {"message", e.what()}}.dump() << '\n';
        return 2;
    }

    job.command = app.get_subcommands().front()->get_name();
    try {
        job.field = FieldSpec::parse(field);
        if (delta < 1) fail(ErrorCode::InvalidArgument, "--delta must be positive");
        job.delta = Int(delta);
        if (height != 0) {
            if (height < 1) fail(ErrorCode::InvalidArgument, "--height must be positive");
            job.height = height;
        }
    } catch (const Error& e) {
        std::cout << Json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() << '\n';
        return error_exit_code(e.code());
    }
    return run_job(job, std::cout);
}
