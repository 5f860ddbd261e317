// relstate: command-line surface for the overlap-estimation toolkit.
// Results go to stdout, diagnostics to stderr. Exit codes: 0 on
// success/match, 1 on a verification mismatch, 2 on usage errors.

#include "relstate/antiparallel.hpp"
#include "relstate/asymptotic.hpp"
#include "relstate/parallel.hpp"
#include "relstate/qudit.hpp"
#include "relstate/report.hpp"
#include "relstate/simulator.hpp"
#include "relstate/trace_oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using relstate::BigRational;
using relstate::report::Json;
using relstate::report::ReportRow;
using relstate::report::Status;

enum class Format { human, json, csv };

struct GlobalOpts {
    Format format = Format::human;
    std::uint64_t seed = 0;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RELSTATE_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
        std::cerr << "warning: ignoring unparseable RELSTATE_SEED\n";
    }
    return 0;
}

void add_format_option(CLI::App* cmd, Format& fmt) {
    cmd->add_option("--format", fmt, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{
                {"human", Format::human}, {"json", Format::json}, {"csv", Format::csv}},
            CLI::ignore_case));
}

int emit_rows(const std::vector<ReportRow>& rows, Format fmt) {
    if (fmt == Format::json) {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(relstate::report::to_json(r));
        std::cout << relstate::report::dump_canonical(arr) << "\n";
    } else if (fmt == Format::csv) {
        std::cout << relstate::report::csv_header() << "\n";
        for (const auto& r : rows) std::cout << relstate::report::csv_line(r) << "\n";
    } else {
        for (const auto& r : rows) std::cout << relstate::report::human_line(r) << "\n";
    }
    for (const auto& r : rows) {
        if (r.status == Status::mismatch) return 1;
    }
    return 0;
}

// ---- table -------------------------------------------------------------

const struct TableCell {
    int N, M;
    double printed;
} kTableCells[] = {
    {1, 1, 7.41e-2}, {1, 2, 6.94e-2}, {1, 300, 5.57e-2}, {2, 2, 6.25e-2},
    {2, 3, 5.83e-2}, {7, 7, 3.29e-2}, {20, 20, 1.45e-2},
};
constexpr double kPrintedAsymptotic = 5.56e-2;

ReportRow variance_row(int N, int M, std::optional<double> printed) {
    const auto v = relstate::parallel::optimal_variance(N, M);
    ReportRow row = relstate::report::make_row(
        "variance(" + std::to_string(N) + "," + std::to_string(M) + ")", v.exact, printed);
    row.N = N;
    row.M = M;
    return row;
}

int cmd_table(Format fmt) {
    std::vector<ReportRow> rows;
    for (const auto& cell : kTableCells) rows.push_back(variance_row(cell.N, cell.M, cell.printed));
    const auto opt = relstate::asymptotic::optimum();
    ReportRow arow = relstate::report::make_row("variance(1,inf)", opt.value, kPrintedAsymptotic);
    arow.N = 1;
    rows.push_back(std::move(arow));
    return emit_rows(rows, fmt);
}

// ---- variance ----------------------------------------------------------

int cmd_variance(int N, int M, Format fmt) {
    std::optional<double> printed;
    for (const auto& cell : kTableCells) {
        if (cell.N == N && cell.M == M) printed = cell.printed;
    }
    return emit_rows({variance_row(N, M, printed)}, fmt);
}

// ---- qudit -------------------------------------------------------------

int cmd_qudit(int d, Format fmt) {
    const auto v = relstate::qudit::qudit_variance(d);
    std::vector<ReportRow> rows;

    ReportRow derived = relstate::report::make_row(
        "qudit-variance(d=" + std::to_string(d) + ")", v.derived,
        d == 2 ? std::optional<double>(7.41e-2) : std::nullopt);
    derived.d = d;
    rows.push_back(std::move(derived));

    ReportRow printed = relstate::report::make_row(
        "qudit-variance-printed-formula(d=" + std::to_string(d) + ")", v.paper_formula, std::nullopt);
    printed.d = d;
    if (v.paper_formula != v.derived) printed.status = Status::flagged;
    rows.push_back(std::move(printed));

    return emit_rows(rows, fmt);
}

// ---- asymptotic ----------------------------------------------------------

int cmd_asymptotic(Format fmt) {
    const auto opt = relstate::asymptotic::optimum();
    std::vector<ReportRow> rows;
    rows.push_back(relstate::report::make_row("asymptotic-variance", opt.value, kPrintedAsymptotic));
    rows.push_back(relstate::report::make_row("asymptotic-guess-x0", opt.x0, std::nullopt));
    rows.push_back(relstate::report::make_row("asymptotic-guess-x1", opt.x1, std::nullopt));
    return emit_rows(rows, fmt);
}

// ---- antiparallel --------------------------------------------------------

int cmd_antiparallel(int outcomes, std::uint64_t seed, double tol, Format fmt) {
    const auto res = relstate::antiparallel::optimize(outcomes, seed, tol);
    const double reference = relstate::parallel::optimal_variance(1, 2).value;

    Status status = Status::na;
    if (outcomes == 2) {
        status = std::abs(res.value - reference) <= 1e-6 ? Status::match : Status::mismatch;
    }

    if (fmt == Format::json) {
        Json j;
        j["case"] = "antiparallel-optimum";
        j["outcomes_requested"] = outcomes;
        j["value"] = res.value;
        j["parallel_1_2"] = reference;
        j["converged"] = res.converged;
        j["q33_guess"] = res.povm.q33_guess;
        Json outs = Json::array();
        for (const auto& o : res.povm.outcomes) {
            Json jo;
            jo["weight"] = o.weight;
            jo["guess"] = o.guess;
            jo["bloch"] = Json::array({o.bloch[0], o.bloch[1], o.bloch[2]});
            outs.push_back(std::move(jo));
        }
        j["povm"] = std::move(outs);
        j["status"] = relstate::report::to_string(status);
        std::cout << relstate::report::dump_canonical(j) << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "case,outcome,weight,guess,n1,n2,n3,value,status\n";
        for (std::size_t i = 0; i < res.povm.outcomes.size(); ++i) {
            const auto& o = res.povm.outcomes[i];
            std::cout << "antiparallel-optimum," << i << "," << o.weight << "," << o.guess << ","
                      << o.bloch[0] << "," << o.bloch[1] << "," << o.bloch[2] << "," << res.value
                      << "," << relstate::report::to_string(status) << "\n";
        }
    } else {
        std::cout << "antiparallel optimum over " << outcomes << " outcomes"
                  << (res.converged ? "" : "  (NOT CONVERGED; best candidate shown)") << "\n";
        for (const auto& o : res.povm.outcomes) {
            std::cout << "  weight=" << o.weight << "  guess=" << o.guess << "  bloch=("
                      << o.bloch[0] << ", " << o.bloch[1] << ", " << o.bloch[2] << ")\n";
        }
        std::cout << "  q33 guess = " << res.povm.q33_guess << "\n";
        std::cout << "  value = " << res.value << "   parallel(1,2) = " << reference << "  ["
                  << relstate::report::to_string(status) << "]\n";
    }
    if (!res.converged) {
        std::cerr << "antiparallel: optimizer did not converge within the restart budget\n";
        return 1;
    }
    return status == Status::mismatch ? 1 : 0;
}

// ---- simulate --------------------------------------------------------------

Json sim_result_json(const char* case_name, const relstate::sim::SimResult& r) {
    Json j;
    j["case"] = case_name;
    j["empirical_mse"] = r.empirical_mse;
    j["std_error"] = r.std_error;
    j["analytic_mse"] = r.analytic_mse;
    j["shots"] = r.shots_used;
    Json counts = Json::array();
    for (const auto& [label, count] : r.per_outcome_counts) {
        counts.push_back(Json::array({label, count}));
    }
    j["counts"] = std::move(counts);
    j["rng"] = r.rng_algorithm;
    return j;
}

int emit_sim_result(const char* case_name, const relstate::sim::SimResult& r, Format fmt) {
    const bool ok = std::abs(r.empirical_mse - r.analytic_mse) <= 4 * r.std_error;
    if (fmt == Format::json) {
        Json j = sim_result_json(case_name, r);
        j["status"] = ok ? "match" : "mismatch";
        std::cout << relstate::report::dump_canonical(j) << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "case,empirical,std_error,analytic,shots,status\n";
        std::cout << case_name << "," << r.empirical_mse << "," << r.std_error << ","
                  << r.analytic_mse << "," << r.shots_used << "," << (ok ? "match" : "mismatch")
                  << "\n";
    } else {
        std::cout << case_name << ": empirical=" << r.empirical_mse << " +- " << r.std_error
                  << "  analytic=" << r.analytic_mse << "  shots=" << r.shots_used << "  ["
                  << (ok ? "match" : "mismatch") << "]\n";
    }
    return ok ? 0 : 1;
}

int cmd_simulate(int N, int M, std::uint64_t shots, std::uint64_t seed, int threads, Format fmt) {
    relstate::sim::SimConfig cfg{N, M, shots, seed};
    const auto r = relstate::sim::run_simulation(cfg, threads);
    const std::string name = "simulate(" + std::to_string(N) + "," + std::to_string(M) + ")";
    return emit_sim_result(name.c_str(), r, fmt);
}

// ---- oracle ----------------------------------------------------------------

int cmd_oracle_trace(int N, int M, Format fmt) {
    const auto closed = relstate::parallel::moments(N, M);
    const auto dense = relstate::oracle::parallel_trace_moments(N, M);
    bool all_ok = true;
    if (fmt == Format::csv) std::cout << "case,k,alpha,oracle,closed_form,status\n";
    Json arr = Json::array();
    for (const auto& [k, t] : dense) {
        const auto& c = closed.at(k);
        const BigRational* oracle_vals[3] = {&t.i0, &t.i1, &t.i2};
        const BigRational* closed_vals[3] = {&c.i0, &c.i1, &c.i2};
        for (int a = 0; a < 3; ++a) {
            const bool ok = *oracle_vals[a] == *closed_vals[a];
            all_ok = all_ok && ok;
            const std::string oracle_s = relstate::to_fraction_string(*oracle_vals[a]);
            const std::string closed_s = relstate::to_fraction_string(*closed_vals[a]);
            if (fmt == Format::json) {
                Json j;
                j["case"] = "oracle-trace(" + std::to_string(N) + "," + std::to_string(M) + ")";
                j["k"] = k;
                j["alpha"] = a;
                j["oracle"] = oracle_s;
                j["closed_form"] = closed_s;
                j["status"] = ok ? "match" : "mismatch";
                arr.push_back(std::move(j));
            } else if (fmt == Format::csv) {
                std::cout << "oracle-trace(" << N << "," << M << ")," << k << "," << a << ","
                          << oracle_s << "," << closed_s << "," << (ok ? "match" : "mismatch")
                          << "\n";
            } else {
                std::cout << "trace(" << N << "," << M << ") k=" << k << " I^" << a << ": oracle="
                          << oracle_s << " closed=" << closed_s << " ["
                          << (ok ? "match" : "mismatch") << "]\n";
            }
        }
    }
    if (fmt == Format::json) std::cout << relstate::report::dump_canonical(arr) << "\n";
    return all_ok ? 0 : 1;
}

int cmd_oracle_qudit(int d, Format fmt) {
    const auto closed = relstate::qudit::qudit_moments(d);
    const auto dense = relstate::qudit::permutation_trace_oracle(d);
    bool all_ok = true;
    if (fmt == Format::csv) std::cout << "case,block,alpha,oracle,closed_form,status\n";
    Json arr = Json::array();
    const struct {
        const char* name;
        const relstate::parallel::MomentTriple* oracle;
        const relstate::parallel::MomentTriple* closed;
    } blocks[] = {
        {"antisym", &dense.antisym, &closed.antisym},
        {"sym", &dense.sym, &closed.sym},
    };
    for (const auto& b : blocks) {
        const BigRational* ov[3] = {&b.oracle->i0, &b.oracle->i1, &b.oracle->i2};
        const BigRational* cv[3] = {&b.closed->i0, &b.closed->i1, &b.closed->i2};
        for (int a = 0; a < 3; ++a) {
            const bool ok = *ov[a] == *cv[a];
            all_ok = all_ok && ok;
            if (fmt == Format::json) {
                Json j;
                j["case"] = "oracle-qudit(d=" + std::to_string(d) + ")";
                j["block"] = b.name;
                j["alpha"] = a;
                j["oracle"] = relstate::to_fraction_string(*ov[a]);
                j["closed_form"] = relstate::to_fraction_string(*cv[a]);
                j["status"] = ok ? "match" : "mismatch";
                arr.push_back(std::move(j));
            } else if (fmt == Format::csv) {
                std::cout << "oracle-qudit(d=" << d << ")," << b.name << "," << a << ","
                          << relstate::to_fraction_string(*ov[a]) << ","
                          << relstate::to_fraction_string(*cv[a]) << ","
                          << (ok ? "match" : "mismatch") << "\n";
            } else {
                std::cout << "qudit(d=" << d << ") " << b.name << " I^" << a << ": oracle="
                          << relstate::to_fraction_string(*ov[a]) << " closed="
                          << relstate::to_fraction_string(*cv[a]) << " ["
                          << (ok ? "match" : "mismatch") << "]\n";
            }
        }
    }
    if (fmt == Format::json) std::cout << relstate::report::dump_canonical(arr) << "\n";
    return all_ok ? 0 : 1;
}

int cmd_oracle_moment(int N, int M, int k, int alpha, std::uint64_t samples, std::uint64_t seed,
                      Format fmt) {
    const auto est = relstate::sim::moment_oracle(N, M, k, alpha, samples, seed);
    const auto mom = relstate::parallel::moments(N, M);
    const auto it = mom.find(k);
    if (it == mom.end()) throw std::invalid_argument("oracle moment: invalid block label");
    const BigRational* vals[3] = {&it->second.i0, &it->second.i1, &it->second.i2};
    const double exact = relstate::to_double(*vals[alpha]);
    const bool ok = std::abs(est.estimate - exact) <= 4 * est.std_error;
    if (fmt == Format::json) {
        Json j;
        j["case"] = "oracle-moment";
        j["N"] = N;
        j["M"] = M;
        j["k"] = k;
        j["alpha"] = alpha;
        j["estimate"] = est.estimate;
        j["std_error"] = est.std_error;
        j["exact"] = relstate::to_fraction_string(*vals[alpha]);
        j["exact_float"] = exact;
        j["status"] = ok ? "match" : "mismatch";
        std::cout << relstate::report::dump_canonical(j) << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "case,N,M,k,alpha,estimate,std_error,exact,status\n";
        std::cout << "oracle-moment," << N << "," << M << "," << k << "," << alpha << ","
                  << est.estimate << "," << est.std_error << ","
                  << relstate::to_fraction_string(*vals[alpha]) << ","
                  << (ok ? "match" : "mismatch") << "\n";
    } else {
        std::cout << "I_" << k << "^" << alpha << "(" << N << "," << M << "): estimate="
                  << est.estimate << " +- " << est.std_error << "  exact="
                  << relstate::to_fraction_string(*vals[alpha]) << " = " << exact << "  ["
                  << (ok ? "match" : "mismatch") << "]\n";
    }
    return ok ? 0 : 1;
}

int cmd_oracle_blocks(Format fmt) {
    const auto report = relstate::antiparallel::block_structure_check();
    if (fmt == Format::csv) std::cout << "case,block,moment,computed,printed,status\n";
    Json arr = Json::array();
    for (const auto& e : report.coefficients) {
        if (fmt == Format::json) {
            Json j;
            j["case"] = "oracle-blocks";
            j["block"] = e.block;
            j["moment"] = e.moment_index;
            j["computed"] = e.computed.to_string();
            j["printed"] = e.printed.to_string();
            j["status"] = e.match ? "match" : "mismatch";
            arr.push_back(std::move(j));
        } else if (fmt == Format::csv) {
            std::cout << "oracle-blocks," << e.block << "," << e.moment_index << ","
                      << relstate::report::csv_escape(e.computed.to_string()) << ","
                      << relstate::report::csv_escape(e.printed.to_string()) << ","
                      << (e.match ? "match" : "mismatch") << "\n";
        } else {
            std::cout << e.block << " in I" << e.moment_index << ": computed="
                      << e.computed.to_string() << " printed=" << e.printed.to_string() << " ["
                      << (e.match ? "match" : "mismatch") << "]\n";
        }
    }
    if (fmt == Format::json) {
        Json j;
        j["coefficients"] = std::move(arr);
        j["completeness"] = report.completeness_ok ? "match" : "mismatch";
        j["trace33"] = relstate::to_fraction_string(report.trace33);
        std::cout << relstate::report::dump_canonical(j) << "\n";
    } else {
        std::cout << "completeness (1_00 + 1_11 + 1_33 = identity): "
                  << (report.completeness_ok ? "match" : "mismatch") << "\n";
        std::cout << "trace(1_33) = " << relstate::to_fraction_string(report.trace33) << "\n";
    }
    return report.all_match() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relstate: optimal estimation of the overlap between two unknown pure states"};
    app.require_subcommand(1);

    GlobalOpts global;
    global.seed = default_seed();

    // table
    Format table_fmt = Format::human;
    CLI::App* table = app.add_subcommand("table", "Reproduce the minimal-variance table");
    add_format_option(table, table_fmt);

    // variance
    Format var_fmt = Format::human;
    int var_N = 1, var_M = 1;
    CLI::App* variance = app.add_subcommand("variance", "Minimal variance for N and M copies");
    variance->add_option("N", var_N, "Copies of the first state")->required();
    variance->add_option("M", var_M, "Copies of the second state")->required();
    add_format_option(variance, var_fmt);

    // qudit
    Format qudit_fmt = Format::human;
    int qudit_d = 2;
    CLI::App* qudit = app.add_subcommand("qudit", "Single-copy qudit variance (derived and printed forms)");
    qudit->add_option("d", qudit_d, "Local dimension")->required();
    add_format_option(qudit, qudit_fmt);

    // asymptotic
    Format asym_fmt = Format::human;
    CLI::App* asym = app.add_subcommand("asymptotic", "One qubit against a classical reference axis");
    add_format_option(asym, asym_fmt);

    // antiparallel
    Format anti_fmt = Format::human;
    int anti_outcomes = 2;
    double anti_tol = 1e-9;
    std::uint64_t anti_seed = 0;
    bool anti_seed_given = false;
    CLI::App* anti = app.add_subcommand("antiparallel", "Optimize the antiparallel-pair block POVM");
    anti->add_option("--outcomes", anti_outcomes, "Number of POVM outcomes in the doubled block");
    anti->add_option("--tol", anti_tol, "Convergence tolerance across restarts");
    anti->add_option("--seed", anti_seed, "Optimizer seed")->each([&](const std::string&) {
        anti_seed_given = true;
    });
    add_format_option(anti, anti_fmt);

    // simulate
    Format sim_fmt = Format::human;
    int sim_N = 1, sim_M = 1, sim_threads = 0;
    std::uint64_t sim_shots = 1000000, sim_seed = 0;
    bool sim_seed_given = false;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo run of the optimal measurement");
    simulate->add_option("N", sim_N, "Copies of the first state")->required();
    simulate->add_option("M", sim_M, "Copies of the second state")->required();
    simulate->add_option("--shots", sim_shots, "Number of simulated measurements");
    simulate->add_option("--seed", sim_seed, "Simulation seed")->each([&](const std::string&) {
        sim_seed_given = true;
    });
    simulate->add_option("--threads", sim_threads, "Worker threads (0 = hardware)");
    add_format_option(simulate, sim_fmt);

    // oracle
    CLI::App* oracle = app.add_subcommand("oracle", "Independent verification back-ends");
    oracle->require_subcommand(1);

    Format otrace_fmt = Format::human;
    int otrace_N = 1, otrace_M = 1;
    CLI::App* otrace = oracle->add_subcommand("trace", "Dense trace oracle vs closed-form moments");
    otrace->add_option("N", otrace_N)->required();
    otrace->add_option("M", otrace_M)->required();
    add_format_option(otrace, otrace_fmt);

    Format oqudit_fmt = Format::human;
    int oqudit_d = 2;
    CLI::App* oqudit = oracle->add_subcommand("qudit", "Permutation trace oracle vs closed forms");
    oqudit->add_option("d", oqudit_d)->required();
    add_format_option(oqudit, oqudit_fmt);

    Format omoment_fmt = Format::human;
    int om_N = 1, om_M = 1, om_k = 0, om_alpha = 0;
    std::uint64_t om_shots = 1000000, om_seed = 0;
    bool om_seed_given = false;
    CLI::App* omoment = oracle->add_subcommand("moment", "Monte Carlo moment estimate vs exact value");
    omoment->add_option("N", om_N)->required();
    omoment->add_option("M", om_M)->required();
    omoment->add_option("k", om_k)->required();
    omoment->add_option("alpha", om_alpha)->required();
    omoment->add_option("--shots", om_shots, "Number of samples");
    omoment->add_option("--seed", om_seed, "Sampling seed")->each([&](const std::string&) {
        om_seed_given = true;
    });
    add_format_option(omoment, omoment_fmt);

    Format oblocks_fmt = Format::human;
    CLI::App* oblocks = oracle->add_subcommand("blocks", "Exact check of the three-qubit block coefficients");
    add_format_option(oblocks, oblocks_fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        return 2;
    }

    try {
        if (*table) return cmd_table(table_fmt);
        if (*variance) return cmd_variance(var_N, var_M, var_fmt);
        if (*qudit) return cmd_qudit(qudit_d, qudit_fmt);
        if (*asym) return cmd_asymptotic(asym_fmt);
        if (*anti) {
            return cmd_antiparallel(anti_outcomes, anti_seed_given ? anti_seed : global.seed,
                                    anti_tol, anti_fmt);
        }
        if (*simulate) {
            return cmd_simulate(sim_N, sim_M, sim_shots, sim_seed_given ? sim_seed : global.seed,
                                sim_threads, sim_fmt);
        }
        if (*oracle) {
            if (*otrace) return cmd_oracle_trace(otrace_N, otrace_M, otrace_fmt);
            if (*oqudit) return cmd_oracle_qudit(oqudit_d, oqudit_fmt);
            if (*omoment) {
                return cmd_oracle_moment(om_N, om_M, om_k, om_alpha, om_shots,
                                         om_seed_given ? om_seed : global.seed, omoment_fmt);
            }
            if (*oblocks) return cmd_oracle_blocks(oblocks_fmt);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand selected\n";
    return 2;
}
