#include "tropimpl/cli.hpp"

#include "tropimpl/errors.hpp"
#include "tropimpl/linalg.hpp"
#include "tropimpl/parallel.hpp"
#include "tropimpl/random.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tropimpl {

namespace {

long sampling_height(const JobSpec& job) { return job.height.value_or(SamplingOptions{}.height); }

SamplingOptions sampling_options(const JobSpec& job) {
    SamplingOptions s;
    s.height = sampling_height(job);
    return s;
}

OracleConfig oracle_config(const JobSpec& job) {
    OracleConfig cfg;
    cfg.rng_seed = job.seed;
    return cfg;
}

Parametrization require_parametrization(const Json& input) {
    if (input.is_object() && input.contains("parametrization")) return parametrization_from_json(input.at("parametrization"));
    return parametrization_from_json(input);
}

std::vector<LatticePolytope> newton_polytopes_from(const Json& input) {
    if (input.is_object() && input.contains("newton_polytopes")) {
        std::vector<LatticePolytope> out;
        for (const auto& p : input.at("newton_polytopes")) out.push_back(polytope_from_json(p));
        return out;
    }
    return require_parametrization(input).newton_polytopes();
}

Json cmd_trop_cycle(const JobSpec& job, const Json& input) {
    auto polys = newton_polytopes_from(input);
    return Json{{"graph_cycle", cycle_to_json(get_graph_cycle(polys))},
                {"cycle", cycle_to_json(get_tropical_cycle(polys, job.delta))}};
}

Json cmd_newton(const JobSpec& job, const Json& input) {
    TropicalCycle c;
    if (input.is_object() && input.contains("items"))
        c = cycle_from_json(input);
    else if (input.is_object() && input.contains("cycle"))
        c = cycle_from_json(input.at("cycle"));
    else
        c = get_tropical_cycle(newton_polytopes_from(input), job.delta);
    LatticePolytope p = reconstruct_polytope(c, oracle_config(job));
    return Json{{"cycle", cycle_to_json(c)}, {"polytope", polytope_report(p, job.force)}};
}

ImplicitPolynomial solve_on(const PointSource& source, const LatticePolytope& p, const JobSpec& job) {
    return interpolate_on_basis(source, monomial_basis(p, job.force), job.field, job.seed, sampling_options(job));
}

Json cmd_implicitize(const JobSpec& job, const Json& input) {
    Parametrization f = require_parametrization(input);
    TropicalCycle c = get_tropical_cycle(f.newton_polytopes(), job.delta);
    LatticePolytope p = reconstruct_polytope(c, oracle_config(job));
    Json out{{"cycle", cycle_to_json(c)}, {"polytope", polytope_report(p, job.force)}};
    if (!job.polytope_only) out["polynomial"] = polynomial_to_json(solve_on(ParametrizationSource(f), p, job));
    return out;
}

Json cmd_adisc(const JobSpec& job, const Json& input) {
    ZMat a = int_matrix_from_json(input.is_object() && input.contains("A") ? input.at("A") : input);
    TropicalCycle c = get_trop_a_disc(a);
    LatticePolytope p = reconstruct_polytope(c, oracle_config(job));
    Json out{{"cycle", cycle_to_json(c)}, {"polytope", polytope_report(p, job.force)}};
    if (!job.polytope_only) out["polynomial"] = polynomial_to_json(solve_on(HornSource(a, gale_dual(a)), p, job));
    return out;
}

// Input: {"parametrization": ..., "cycle": optional, "degree": optional}. The cycle may
// live in R^n (it is homogenized) or already in R^{n+1}.
Json cmd_chow(const JobSpec& job, const Json& input) {
    Parametrization f = require_parametrization(input);
    TropicalCycle c;
    if (input.contains("cycle"))
        c = cycle_from_json(input.at("cycle"));
    else
        c = get_tropical_cycle(f.newton_polytopes(), job.delta);
    if (c.ambient_dim == f.n) c = homogenize(c);
    ShiftSearchOptions options;
    if (input.contains("degree")) options.degree_hint = input.at("degree").get<std::size_t>();
    options.form.field = job.field;
    options.form.sampling.height = sampling_height(job);
    ChowPolytopeResult r = chow_polytope(c, f.d, f, oracle_config(job), job.seed, options);
    Json shifts = Json::array();
    for (const auto& s : r.successful_shifts) shifts.push_back(vector_to_json(s));
    Json out{{"chow_fan", cycle_to_json(chow_fan(c, f.d))},
             {"translated", polytope_report(r.translated, job.force)},
             {"shift", vector_to_json(r.shift)},
             {"successful_shifts", shifts},
             {"degree", r.degree},
             {"polytope", polytope_report(r.polytope, job.force)}};
    if (r.chow_form) out["chow_form"] = plucker_to_json(*r.chow_form);
    return out;
}

void write_atomically(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + tmp);
        out << text;
        if (!out.flush()) fail(ErrorCode::InvalidArgument, "cannot write " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) fail(ErrorCode::InvalidArgument, "cannot move output into place: " + ec.message());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::InvalidArgument, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// A random lattice polytope with exactly v vertices in [-h, h]^dim.
std::optional<LatticePolytope> random_polytope(Rng& rng, std::size_t dim, std::size_t v, long h) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<IntVector> pts(v, IntVector(dim));
        for (auto& p : pts)
            for (auto& x : p) x = Int(rng.uniform(-h, h));
        LatticePolytope q = convex_hull(pts);
        if (q.vertices().size() == v) return q;
    }
    return std::nullopt;
}

struct TrialOutcome {
    std::vector<LatticePolytope> polytopes;
    std::vector<std::size_t> f_vec;
    std::optional<Error> error;
};

TrialOutcome run_trial(const std::vector<LatticePolytope>& polys, std::uint64_t seed) {
    TrialOutcome t;
    t.polytopes = polys;
    try {
        OracleConfig cfg;
        cfg.rng_seed = seed;
        t.f_vec = f_vector(reconstruct_polytope(get_tropical_cycle(polys), cfg));
    } catch (const Error& e) {
        t.error = e;
    }
    return t;
}

}  // namespace

Json polytope_report(const LatticePolytope& p, bool force) {
    Json out = polytope_to_json(p);
    out["dim"] = p.dim();
    out["f_vector"] = f_vector(p);
    try {
        out["lattice_points"] = lattice_points(p, force).size();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::LatticeEnumerationTooLarge) throw;
        out["lattice_points"] = nullptr;
    }
    return out;
}

Json execute(const JobSpec& job, const Json& input) {
    if (job.command == "trop-cycle") return cmd_trop_cycle(job, input);
    if (job.command == "newton") return cmd_newton(job, input);
    if (job.command == "implicitize") return cmd_implicitize(job, input);
    if (job.command == "adisc") return cmd_adisc(job, input);
    if (job.command == "chow") return cmd_chow(job, input);
    fail(ErrorCode::InvalidArgument, "unknown command '" + job.command + "'");
}

MfpConfig mfp_config_from_json(const Json& j) {
    if (!j.is_object()) fail(ErrorCode::Parse, "mfp-search config must be an object");
    MfpConfig cfg;
    try {
        cfg.n = j.value("n", std::size_t{3});
        cfg.height = j.value("height", 1000L);
        cfg.trials = j.value("trials", std::size_t{0});
        cfg.vertex_counts = j.value("vertex_counts", std::vector<std::size_t>(cfg.n, 3));
        if (j.contains("fixed"))
            for (const auto& conf : j.at("fixed")) {
                std::vector<std::vector<IntVector>> polys;
                for (const auto& poly : conf) {
                    std::vector<IntVector> verts;
                    for (const auto& v : poly) verts.push_back(int_vector_from_json(v));
                    polys.push_back(std::move(verts));
                }
                cfg.fixed.push_back(std::move(polys));
            }
    } catch (const Json::exception& e) {
        fail(ErrorCode::Parse, e.what());
    }
    if (cfg.n < 2) fail(ErrorCode::InvalidArgument, "mfp-search needs n >= 2");
    if (cfg.vertex_counts.size() != cfg.n) fail(ErrorCode::DimensionMismatch, "need one vertex count per polytope");
    if (cfg.height < 1) fail(ErrorCode::InvalidArgument, "height must be positive");
    for (const auto& conf : cfg.fixed) {
        if (conf.size() != cfg.n) fail(ErrorCode::DimensionMismatch, "fixed configuration needs n polytopes");
        for (const auto& poly : conf)
            for (const auto& v : poly)
                if (v.size() != cfg.n - 1) fail(ErrorCode::DimensionMismatch, "fixed vertices must lie in Z^(n-1)");
    }
    return cfg;
}

Json run_mfp_search(const MfpConfig& cfg, std::uint64_t seed, std::ostream& out) {
    const std::size_t total = cfg.fixed.size() + cfg.trials;
    const std::size_t batch = std::max<std::size_t>(1, thread_count()) * 4;
    std::size_t best = 0, failures = 0;
    std::optional<std::size_t> best_trial;

    for (std::size_t start = 0; start < total; start += batch) {
        const std::size_t stop = std::min(total, start + batch);
        std::vector<TrialOutcome> outcomes(stop - start);
        std::vector<std::uint64_t> seeds(stop - start);
        parallel_for(stop - start, [&](std::size_t k) {
            const std::size_t trial = start + k;
            seeds[k] = derive_seed(seed, streams::search, trial);
            std::vector<LatticePolytope> polys;
            if (trial < cfg.fixed.size()) {
                for (const auto& verts : cfg.fixed[trial]) polys.push_back(convex_hull(verts));
            } else {
                for (std::size_t i = 0; i < cfg.n; ++i) {
                    Rng rng(derive_seed(seeds[k], streams::search, i + 1));
                    auto q = random_polytope(rng, cfg.n - 1, cfg.vertex_counts[i], cfg.height);
                    if (!q) {
                        outcomes[k].error = Error(ErrorCode::SamplingExhausted, "no polytope with the requested vertex count");
                        return;
                    }
                    polys.push_back(std::move(*q));
                }
            }
            outcomes[k] = run_trial(polys, seeds[k]);
        });

        for (std::size_t k = 0; k < outcomes.size(); ++k) {
            const std::size_t trial = start + k;
            const bool fixed = trial < cfg.fixed.size();
            const auto& t = outcomes[k];
            Json line{{"trial", trial}, {"seed", seeds[k]}, {"fixed", fixed}};
            Json polys = Json::array();
            for (const auto& p : t.polytopes) {
                Json verts = Json::array();
                for (const auto& v : p.vertices()) verts.push_back(vector_to_json(v));
                polys.push_back(verts);
            }
            line["polytopes"] = polys;
            if (t.error) {
                ++failures;
                line["error"] = error_name(t.error->code());
                line["message"] = t.error->what();
                out << line.dump() << '\n' << std::flush;
                continue;
            }
            const std::size_t verts = t.f_vec.empty() ? 0 : t.f_vec[0];
            const bool improved = verts > best;
            if (improved) {
                best = verts;
                best_trial = trial;
            }
            if (!fixed && !improved) continue;
            line["f_vector"] = t.f_vec;
            line["vertices"] = verts;
            line["best"] = improved;
            out << line.dump() << '\n' << std::flush;
        }
    }
    Json summary{{"trials", total}, {"failures", failures}, {"best_vertices", best}};
    summary["best_trial"] = best_trial ? Json(*best_trial) : Json(nullptr);
    return Json{{"summary", summary}};
}

int run_job(const JobSpec& job, std::ostream& err) {
    try {
        set_thread_count(job.threads);
        if (job.command == "mfp-search") {
            MfpConfig cfg = mfp_config_from_json(parse_json(read_file(job.input_path)));
            if (job.height) cfg.height = *job.height;
            std::ofstream out(job.output_path, std::ios::app);
            if (!out) fail(ErrorCode::InvalidArgument, "cannot open " + job.output_path);
            Json summary = run_mfp_search(cfg, job.seed, out);
            out << summary.dump() << '\n';
            return 0;
        }
        Json result = execute(job, parse_json(read_file(job.input_path)));
        write_atomically(job.output_path, result.dump(2) + "\n");
        return 0;
    } catch (const Error& e) {
        err << Json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() << '\n';
        return error_exit_code(e.code());
    } catch (const Json::exception& e) {
        err << Json{{"error", error_name(ErrorCode::Parse)}, {"message", e.what()}}.dump() << '\n';
        return 2;
    }
}

}  // namespace tropimpl
