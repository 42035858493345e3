#include "qtent/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>

#include "qtent/classical.hpp"
#include "qtent/common.hpp"
#include "qtent/io.hpp"
#include "qtent/rmt_theory.hpp"

namespace qtent {

namespace {

std::string tag(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void echo_common(CsvFile& csv, const ExperimentConfig& cfg)
{
    csv.header("rng", Rng::algorithm());
    csv.header("seed", cfg.seed);
    csv.header("K", cfg.K);
    csv.header("cells", static_cast<long long>(cfg.cells));
    csv.header("sigma", cfg.sigma);
}

void echo_trace_params(CsvFile& csv, const TraceParams& p)
{
    csv.header("n_q", static_cast<long long>(p.map.n_q));
    csv.header("K", p.map.K);
    csv.header("cells", static_cast<long long>(p.map.cells));
    csv.header("T", p.map.period());
    csv.header("channel", channel_name(p.channel));
    csv.header("epsilon", p.epsilon);
    csv.header("seed", p.seed);
    csv.header("rng", Rng::algorithm());
    csv.header("theta0", p.initial.theta0);
    csv.header("p0", p.initial.p0);
    csv.header("sigma", p.sigma);
    csv.header("f_stop", p.f_stop);
    csv.header("sampling", "every-iteration");
}

} // namespace

std::vector<std::filesystem::path> cmd_poincare(const ExperimentConfig& cfg)
{
    std::vector<std::filesystem::path> files;
    for (double k : cfg.k_values) {
        const ClassicalMapParams params{k, 1.0};
        const auto cloud = poincare_section(params, cfg.n_traj, cfg.n_steps, cfg.seed);
        CsvFile csv(cfg.out_dir / ("poincare_K" + tag(k) + ".csv"));
        csv.header("k", k);
        csv.header("T", 1.0);
        csv.header("K", k);
        csv.header("n_traj", static_cast<long long>(cfg.n_traj));
        csv.header("n_steps", static_cast<long long>(cfg.n_steps));
        csv.header("seed", cfg.seed);
        csv.header("rng", Rng::algorithm());
        csv.columns({"theta", "p"});
        for (const PhasePoint& pt : cloud) csv.row({pt.theta, pt.p});
        files.push_back(csv.path());
    }
    return files;
}

std::vector<std::filesystem::path> cmd_fidelity(const ExperimentConfig& cfg)
{
    if (cfg.eps_list.empty())
        throw std::invalid_argument("cmd_fidelity: epsilon list is empty");
    std::vector<std::filesystem::path> files;
    std::vector<FidelityTrace> traces;
    std::mutex mu;

    struct Job { int n_q; double eps; int realization; };
    std::vector<Job> jobs;
    for (int n_q : cfg.n_qs)
        for (double eps : cfg.eps_list)
            for (int r = 0; r < cfg.realizations; ++r) jobs.push_back({n_q, eps, r});

    std::vector<FidelityTrace> results(jobs.size());
    parallel_for_index(jobs.size(), [&](std::size_t i) {
        const Job& job = jobs[i];
        TraceParams p;
        p.map = TentMapParams{job.n_q, cfg.K, cfg.cells};
        p.channel = cfg.channel;
        p.epsilon = job.eps;
        p.seed = realization_seed(cfg.seed, job.realization);
        p.sigma = cfg.sigma;
        p.f_stop = cfg.f_stop;
        p.t_max_cap = cfg.t_max_cap;
        results[i] = run_fidelity(p);
    });

    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Job& job = jobs[i];
        const FidelityTrace& trace = results[i];
        char name[96];
        std::snprintf(name, sizeof name, "trace_%s_nq%d_eps%s_r%d.csv",
                      channel_name(cfg.channel), job.n_q, tag(job.eps).c_str(),
                      job.realization);
        CsvFile csv(cfg.out_dir / name);
        echo_trace_params(csv, trace.params);
        csv.columns({"t", "f"});
        for (std::size_t t = 0; t < trace.f.size(); ++t)
            csv.row({static_cast<double>(t), trace.f[t]});
        std::lock_guard<std::mutex> lock(mu);
        files.push_back(csv.path());
        traces.push_back(trace);
    }

    // collapse tables
    {
        CsvFile csv(cfg.out_dir / "collapse_theoretical.csv");
        echo_common(csv, cfg);
        csv.header("mode", "theoretical");
        csv.columns({"x", "y", "n_q", "epsilon"});
        for (const CollapsePoint& pt :
             scaling_collapse(std::span<const FidelityTrace>(traces),
                              CollapseMode::theoretical))
            csv.row({pt.x, pt.y, static_cast<double>(pt.n_q), pt.epsilon});
        files.push_back(csv.path());
    }
    if (cfg.channel != ChannelKind::noise) {
        CsvFile csv(cfg.out_dir / "collapse_fitted.csv");
        echo_common(csv, cfg);
        csv.header("mode", "fitted");
        csv.columns({"x", "y", "n_q", "epsilon"});
        for (const CollapsePoint& pt :
             scaling_collapse(std::span<const FidelityTrace>(traces), CollapseMode::fitted))
            csv.row({pt.x, pt.y, static_cast<double>(pt.n_q), pt.epsilon});
        files.push_back(csv.path());
    }
    // chi overlay in collapse variables: y = sigma * chi(x / sigma)
    {
        CsvFile csv(cfg.out_dir / "collapse_theory_curve.csv");
        echo_common(csv, cfg);
        csv.columns({"x", "y_beta1", "y_beta2"});
        const double x_max = 2.0;
        for (int i = 1; i <= cfg.samples; ++i) {
            const double x = x_max * i / cfg.samples;
            csv.row({x, cfg.sigma * chi(x / cfg.sigma, 1), cfg.sigma * chi(x / cfg.sigma, 2)});
        }
        files.push_back(csv.path());
    }
    return files;
}

std::vector<std::filesystem::path> cmd_timescales(const ExperimentConfig& cfg)
{
    if (cfg.eps_list.empty())
        throw std::invalid_argument("cmd_timescales: epsilon list is empty");
    CsvFile csv(cfg.out_dir / "timescales.csv");
    echo_common(csv, cfg);
    csv.header("channel", channel_name(cfg.channel));
    csv.header("realizations", static_cast<long long>(cfg.realizations));
    csv.header("note", "t_h_fit=0 and t_f_measured=-1 mark unresolved values");
    csv.columns({"n_q", "epsilon", "t_c_theory", "t_c_fit", "t_h_scaled_theory",
                 "t_h_fit", "t_f_measured", "t_f_theory", "t_f_simple", "a0_stderr",
                 "a1_stderr"});
    for (int n_q : cfg.n_qs) {
        for (double eps : cfg.eps_list) {
            if (eps <= 0.0) continue;
            TraceParams base;
            base.map = TentMapParams{n_q, cfg.K, cfg.cells};
            base.channel = cfg.channel;
            base.epsilon = eps;
            base.seed = cfg.seed;
            base.sigma = cfg.sigma;
            base.f_stop = cfg.f_stop;
            base.t_max_cap = cfg.t_max_cap;
            const EnsembleStats stats = ensemble_average(base, cfg.realizations);
            const Timescales ts = characteristic_timescales(eps, n_q, cfg.sigma);
            double tf_measured = 0.0;
            int tf_count = 0;
            for (const auto& tf : stats.t_f)
                if (tf) { tf_measured += *tf; ++tf_count; }
            tf_measured = tf_count ? tf_measured / tf_count : -1.0;
            csv.row({static_cast<double>(n_q), eps, ts.t_c, stats.t_c_agg,
                     0.5 * cfg.sigma * ts.t_heisenberg, stats.t_h_agg, tf_measured,
                     ts.t_f, ts.t_c * std::log(10.0 / 9.0), stats.a0_stderr,
                     stats.a1_stderr});
        }
    }
    return {csv.path()};
}

namespace {

void render_stage(const ExperimentConfig& cfg, const StateVector& state,
                  const std::string& stage, std::vector<std::filesystem::path>& files)
{
    for (const std::string& variant : cfg.variants) {
        HusimiGrid grid;
        if (variant == "gaussian") grid = husimi_gaussian(state);
        else if (variant == "modified-p" || variant == "modified_p")
            grid = husimi_modified_p(state);
        else if (variant == "modified-theta" || variant == "modified_theta")
            grid = husimi_modified_theta(state);
        else throw std::invalid_argument("unknown husimi variant '" + variant + "'");
        const std::string base = "husimi_" + stage + "_" + variant + "_nq" +
                                 std::to_string(state.n_qubits());
        write_husimi_csv(cfg.out_dir / (base + ".csv"), grid,
                         {{"stage", stage},
                          {"channel", channel_name(cfg.channel)},
                          {"seed", std::to_string(cfg.seed)}});
        write_ppm_heatmap(cfg.out_dir / (base + ".ppm"), grid);
        files.push_back(cfg.out_dir / (base + ".csv"));
        files.push_back(cfg.out_dir / (base + ".ppm"));
    }
}

} // namespace

std::vector<std::filesystem::path> cmd_husimi(const ExperimentConfig& cfg)
{
    std::vector<std::filesystem::path> files;
    for (int n_q : cfg.n_qs) {
        const TentMapParams map{n_q, cfg.K, cfg.cells};
        map.validate();
        const double eps = cfg.eps_list.empty() ? 0.0 : cfg.eps_list.front();

        StateVector state = cfg.state_kind == "coherent"
                                ? coherent_state(n_q, {cfg.theta0, cfg.p0})
                                : circle_state(n_q, 0.7, cfg.circle_points);
        render_stage(cfg, state, "initial", files);

        Channel channel{NoChannel{}};
        if (cfg.channel == ChannelKind::static_disorder && eps > 0.0)
            channel = StaticKick(sample_static_disorder(eps, n_q, cfg.seed));
        else if (cfg.channel == ChannelKind::noise && eps > 0.0)
            channel = NoiseChannel(NoiseConfig{eps, cfg.seed});

        if (cfg.t_forward > 0) {
            const GateSequence fwd = build_map_sequence(map, MapDirection::forward);
            for (long t = 0; t < cfg.t_forward; ++t) run_perturbed_map(state, fwd, channel);
            render_stage(cfg, state, "forward" + std::to_string(cfg.t_forward), files);
        }
        if (cfg.t_backward > 0) {
            const GateSequence inv = build_map_sequence(map, MapDirection::inverse);
            for (long t = 0; t < cfg.t_backward; ++t) run_perturbed_map(state, inv, channel);
            render_stage(cfg, state,
                         "forward" + std::to_string(cfg.t_forward) + "_backward" +
                             std::to_string(cfg.t_backward),
                         files);
        }
    }
    return files;
}

std::vector<std::filesystem::path> cmd_theory(const ExperimentConfig& cfg)
{
    std::vector<std::filesystem::path> files;
    {
        CsvFile csv(cfg.out_dir / "theory_form_factor.csv");
        csv.columns({"tau", "b2_beta1", "b2_beta2"});
        for (int i = 0; i <= cfg.samples; ++i) {
            const double tau = cfg.s_max * i / cfg.samples;
            csv.row({tau, b2_form_factor(tau, 1), b2_form_factor(tau, 2)});
        }
        files.push_back(csv.path());
    }
    {
        CsvFile csv(cfg.out_dir / "theory_chi.csv");
        csv.columns({"s", "chi_beta1", "chi_beta2", "delta_chi_beta1", "delta_chi_beta2"});
        for (int i = 0; i <= cfg.samples; ++i) {
            const double s = cfg.s_max * i / cfg.samples;
            csv.row({s, chi(s, 1), chi(s, 2), delta_chi(s, 1), delta_chi(s, 2)});
        }
        files.push_back(csv.path());
    }
    if (!cfg.eps_list.empty()) {
        CsvFile csv(cfg.out_dir / "theory_timescales.csv");
        csv.header("sigma", cfg.sigma);
        csv.columns({"n_q", "epsilon", "n_g", "t_c", "t_r", "t_heisenberg", "eps_chaos",
                     "t_f"});
        for (int n_q : cfg.n_qs) {
            for (double eps : cfg.eps_list) {
                if (eps <= 0.0) continue;
                const Timescales ts = characteristic_timescales(eps, n_q, cfg.sigma);
                csv.row({static_cast<double>(n_q), eps,
                         static_cast<double>(map_gate_count(n_q)), ts.t_c, ts.t_r,
                         ts.t_heisenberg, ts.eps_chaos, ts.t_f});
            }
        }
        files.push_back(csv.path());
    }
    return files;
}

} // namespace qtent
