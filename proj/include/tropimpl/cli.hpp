#pragma once

#include "tropimpl/json_io.hpp"

#include <iosfwd>

namespace tropimpl {

struct JobSpec {
    std::string command;  // trop-cycle | adisc | newton | implicitize | chow | mfp-search
    std::string input_path;
    std::string output_path;
    FieldSpec field;
    std::uint64_t seed = 0;
    std::optional<long> height;
    Int delta = 1;
    bool polytope_only = false;
    bool force = false;
    std::size_t threads = 1;
};

// Runs one command on an already-parsed input document and returns the artifact.
// mfp-search is not handled here because it streams records; see run_mfp_search.
Json execute(const JobSpec& job, const Json& input);

// Polytope JSON extended with dim, f_vector and lattice_points (null when the
// enumeration cutoff applies and force is off).
Json polytope_report(const LatticePolytope& p, bool force);

struct MfpConfig {
    std::size_t n = 3;
    std::vector<std::size_t> vertex_counts;
    long height = 1000;
    std::size_t trials = 0;
    std::vector<std::vector<std::vector<IntVector>>> fixed;  // configurations as vertex lists
};

MfpConfig mfp_config_from_json(const Json& j);

// Appends leaderboard lines to out: every fixed trial, every random trial that beats
// the best vertex count so far, and every failed trial. Returns the summary line.
Json run_mfp_search(const MfpConfig& cfg, std::uint64_t seed, std::ostream& out);

// Full job: reads input, runs, writes the artifact atomically. Errors are reported
// as {"error", "message"} on err. Returns the process exit code.
int run_job(const JobSpec& job, std::ostream& err);

}  // namespace tropimpl
