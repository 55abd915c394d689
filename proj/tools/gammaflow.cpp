/* gammaflow: exact heat-flow polynomials, cumulant sequences, and error
 * derivative recovery from the command line.
 *
 * Exit codes: 0 success, 1 operational or verification failure, 2 ambiguous
 * recovery, 3 inconsistent recovery, 4 irrational recovery, 64 usage. */

#include <CLI11.hpp>
#include <json.hpp>

#include <sys/utsname.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gammaflow/closed_forms.hpp"
#include "gammaflow/conditions.hpp"
#include "gammaflow/cumulants.hpp"
#include "gammaflow/mmse.hpp"
#include "gammaflow/poly_io.hpp"
#include "gammaflow/rn_table.hpp"
#include "gammaflow/seq_io.hpp"
#include "gammaflow/verify.hpp"

namespace gf = gammaflow;
namespace fs = std::filesystem;

namespace {

/* Bad invocation discovered after CLI11 parsing (value constraints, grammar
 * of composite flags). Mapped to exit code 64 like a parse error. */
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Per-command plumbing, mirrored across subcommands. */
struct Config {
    std::string cache_dir;
    int n_max = 20;
    std::string output = "pretty";
    std::string threads = "auto";
    std::string out;
};

void add_common(CLI::App* cmd, Config& cfg, bool with_cache = true) {
    cmd->add_option("--output", cfg.output, "output style: json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    cmd->add_option("--out", cfg.out, "also write the command's JSON artifact to this file");
    if (with_cache) {
        cmd->add_option("--cache-dir", cfg.cache_dir,
                        "persistent polynomial cache (GAMMAFLOW_CACHE overrides)");
        cmd->add_option("--threads", cfg.threads, "worker count, or auto");
    }
}

int resolve_threads(const std::string& spec) {
    if (spec == "auto") {
        unsigned hc = std::thread::hardware_concurrency();
        return hc == 0 ? 1 : static_cast<int>(hc);
    }
    try {
        std::size_t used = 0;
        int v = std::stoi(spec, &used);
        if (used == spec.size() && v >= 1 && v <= 4096) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("--threads wants a positive integer or \"auto\", got \"" + spec + "\"");
}

std::optional<fs::path> resolve_cache(const Config& cfg) {
    const char* env = std::getenv("GAMMAFLOW_CACHE");
    if (env != nullptr && *env != '\0') return fs::path(env);
    if (!cfg.cache_dir.empty()) return fs::path(cfg.cache_dir);
    return std::nullopt;
}

gf::RnTable make_table(const Config& cfg) {
    return gf::RnTable(resolve_cache(cfg), resolve_threads(cfg.threads));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content << '\n';
    if (!out) throw std::runtime_error("cannot write " + path);
}

void maybe_write_out(const Config& cfg, const std::string& content) {
    if (!cfg.out.empty()) write_file(cfg.out, content);
}

/* dist specs: uniform | rademacher | laplace:<b> | discrete:<file> |
 * from-file:<file>. Grammar errors are usage errors; file problems are
 * operational ones. */
gf::CumulantSeq make_cumulants(const std::string& spec, int orders) {
    if (spec == "uniform") return gf::cumulants_uniform(orders);
    if (spec == "rademacher") return gf::cumulants_rademacher(orders);
    if (spec.rfind("laplace:", 0) == 0) {
        gf::Rational scale;
        try {
            scale = gf::rational_from_string(spec.substr(8));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad laplace scale: ") + e.what());
        }
        if (sgn(scale) <= 0) throw UsageError("laplace scale must be > 0");
        return gf::cumulants_laplace(scale, orders);
    }
    if (spec.rfind("discrete:", 0) == 0) {
        auto points = gf::atoms_from_json(read_file(spec.substr(9)));
        return gf::cumulants_discrete_symmetric(points, orders);
    }
    if (spec.rfind("from-file:", 0) == 0) {
        gf::CumulantSeq k = gf::cumulants_from_json(read_file(spec.substr(10)));
        if (k.max_order() < orders) {
            throw std::runtime_error("cumulant file stops at order " +
                                     std::to_string(k.max_order()) + ", need " +
                                     std::to_string(orders));
        }
        if (k.max_order() == orders) return k;
        gf::CumulantSeq trunc(orders, k.provenance(), k.symmetric());
        for (int o = 2; o <= orders; ++o) trunc.set(o, k.at(o));
        return trunc;
    }
    throw UsageError("unknown --dist \"" + spec +
                     "\"; expected uniform, rademacher, laplace:<b>, discrete:<file> "
                     "or from-file:<file>");
}

int cmd_compute(const Config& cfg, int n) {
    gf::RnTable table = make_table(cfg);
    const gf::Poly& r = table.compute_Rn(n);
    maybe_write_out(cfg, gf::poly_to_json(r, n));
    if (cfg.output == "json") {
        nlohmann::ordered_json root;
        root["n"] = n;
        root["term_count"] = r.term_count();
        std::cout << root.dump() << '\n';
    } else {
        std::cout << "R" << n << ": " << r.term_count() << " terms\n";
    }
    return 0;
}

int cmd_show(const Config& cfg, int n) {
    gf::RnTable table = make_table(cfg);
    const gf::Poly& r = table.compute_Rn(n);
    maybe_write_out(cfg, gf::poly_to_json(r, n));
    if (cfg.output == "json") {
        std::cout << gf::poly_to_json(r, n) << '\n';
    } else {
        std::cout << gf::poly_to_text(r) << '\n';
    }
    return 0;
}

int cmd_coeff(const Config& cfg, int n, const std::string& partition_text) {
    gf::Partition key;
    try {
        key = gf::parse_partition(partition_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    gf::BigInt value = 0;
    if (key.weight() != 2 * n) {
        std::cerr << "warning: partition weight " << key.weight()
                  << " does not match 2n = " << 2 * n << "; coefficient is 0\n";
    } else {
        gf::RnTable table = make_table(cfg);
        value = table.compute_Rn(n).coeff_of(key);
    }
    if (cfg.output == "json") {
        nlohmann::ordered_json root;
        root["n"] = n;
        root["partition"] = key.parts();
        root["coeff"] = gf::bigint_to_string(value);
        std::string text = root.dump();
        maybe_write_out(cfg, text);
        std::cout << text << '\n';
    } else {
        std::cout << gf::bigint_to_string(value) << '\n';
    }
    return 0;
}

int cmd_verify(const Config& cfg, int max_n) {
    if (max_n < 4) throw UsageError("verify wants --max-n >= 4");
    gf::RnTable table = make_table(cfg);
    gf::VerifyReport report = gf::run_verification(max_n, table);
    maybe_write_out(cfg, report.to_json());
    if (!report.ok) {
        std::cout << report.to_json() << '\n';
        return 1;
    }
    if (cfg.output == "json") {
        std::cout << report.to_json() << '\n';
    } else {
        std::cout << report.summary() << '\n';
    }
    return 0;
}

int cmd_cumulants(const Config& cfg, const std::string& dist, int orders) {
    if (orders < 2) throw UsageError("cumulants wants --orders >= 2");
    gf::CumulantSeq k = make_cumulants(dist, orders);
    std::string text = gf::cumulants_to_json(k);
    maybe_write_out(cfg, text);
    if (cfg.output == "json") {
        std::cout << text << '\n';
    } else {
        for (int o = 2; o <= orders; ++o) {
            std::cout << "K" << o << " = " << gf::rational_to_string(k.at(o)) << '\n';
        }
    }
    return 0;
}

int cmd_mmse_derivs(const Config& cfg, const std::string& dist, int orders) {
    if (orders < 1) throw UsageError("mmse-derivs wants --orders >= 1");
    gf::CumulantSeq k = make_cumulants(dist, orders + 1);
    gf::RnTable table = make_table(cfg);
    gf::DerivSeq d = gf::evaluate_derivs(k, orders, table);
    std::string text = gf::derivs_to_json(d);
    maybe_write_out(cfg, text);
    if (cfg.output == "json") {
        std::cout << text << '\n';
    } else {
        for (int o = 1; o <= orders; ++o) {
            std::cout << "d" << o << " = " << gf::rational_to_string(d.at(o)) << '\n';
        }
    }
    return 0;
}

int cmd_recover(const Config& cfg, const std::string& input, const std::string& mode_text,
                std::optional<int> orders) {
    gf::RecoveryMode mode;
    try {
        mode = gf::recovery_mode_from_string(mode_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    gf::DerivSeq d = gf::derivs_from_json(read_file(input));
    int n_max = orders.value_or(d.max_order());
    if (n_max < 2) throw UsageError("recover wants --orders >= 2");
    if (n_max > d.max_order()) {
        throw UsageError("derivative file stops at order " + std::to_string(d.max_order()) +
                         ", cannot recover to " + std::to_string(n_max));
    }
    gf::RnTable table = make_table(cfg);
    gf::RecoveryResult result = gf::recover_cumulants(d, mode, n_max, table);
    std::string seq_text = gf::cumulants_to_json(result.cumulants);
    maybe_write_out(cfg, seq_text);
    if (cfg.output == "json") {
        nlohmann::ordered_json root;
        root["cumulants"] = nlohmann::ordered_json::parse(seq_text);
        root["trace"] = nlohmann::ordered_json::parse(gf::trace_to_json(result.trace));
        std::cout << root.dump() << '\n';
    } else {
        for (int o = 2; o <= n_max; ++o) {
            std::cout << "K" << o << " = "
                      << gf::rational_to_string(result.cumulants.at(o)) << '\n';
        }
        std::cout << "trace: " << gf::trace_to_json(result.trace) << '\n';
    }
    return 0;
}

int cmd_bench(const Config& cfg, int max_n, int reps) {
    if (max_n < 10) throw UsageError("bench wants --max-n >= 10");
    if (reps < 1) throw UsageError("bench wants --reps >= 1");
    int threads = resolve_threads(cfg.threads);

    std::vector<double> best(static_cast<std::size_t>(max_n + 1), 0.0);
    std::vector<int> counts(static_cast<std::size_t>(max_n + 1), 0);
    for (int rep = 0; rep < reps; ++rep) {
        gf::Poly prev;  /* cold start from R_2 = 0 every repetition */
        for (int n = 3; n <= max_n; ++n) {
            auto t0 = std::chrono::steady_clock::now();
            gf::Poly r = gf::rn_step(prev, n, threads);
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            std::size_t i = static_cast<std::size_t>(n);
            if (rep == 0 || dt.count() < best[i]) best[i] = dt.count();
            counts[i] = r.term_count();
            prev = std::move(r);
        }
    }
    for (int n = 4; n <= max_n; ++n) {
        if (counts[static_cast<std::size_t>(n)] < counts[static_cast<std::size_t>(n - 1)]) {
            std::cerr << "error: term count shrank from n=" << n - 1 << " to n=" << n << '\n';
            return 1;
        }
    }

    utsname uts{};
    uname(&uts);
    std::string os = std::string(uts.sysname) + " " + uts.release + " " + uts.machine;
    unsigned hc = std::thread::hardware_concurrency();

    nlohmann::ordered_json root;
    root["machine"] = {{"os", os},
                       {"cpu_threads", hc},
                       {"worker_threads", threads},
                       {"gmp", gmp_version},
                       {"compiler", __VERSION__}};
    root["repetitions"] = reps;
    root["orders"] = nlohmann::ordered_json::array();
    for (int n = 3; n <= max_n; ++n) {
        std::size_t i = static_cast<std::size_t>(n);
        root["orders"].push_back({{"n", n}, {"terms", counts[i]}, {"seconds", best[i]}});
    }
    maybe_write_out(cfg, root.dump());
    if (cfg.output == "json") {
        std::cout << root.dump() << '\n';
    } else {
        std::cout << "machine: " << os << ", " << hc << " hardware threads, "
                  << threads << " workers, gmp " << gmp_version << '\n';
        std::cout << "repetitions: " << reps << " (best time shown)\n";
        std::printf("%4s %9s %12s\n", "n", "terms", "seconds");
        for (int n = 3; n <= max_n; ++n) {
            std::size_t i = static_cast<std::size_t>(n);
            std::printf("%4d %9d %12.6f\n", n, counts[i], best[i]);
        }
    }
    return 0;
}

}

int main(int argc, char** argv) {
    CLI::App app{"exact heat-flow polynomial engine and cumulant recovery toolkit"};
    app.require_subcommand(1);

    Config c_compute, c_show, c_coeff, c_verify, c_cumulants, c_derivs, c_recover, c_bench;
    int arg_n = 0;
    int arg_max_n = 20;
    int arg_bench_n = 12;
    int arg_reps = 1;
    int arg_orders_cumulants = 20;
    int arg_orders_derivs = 20;
    std::string arg_partition, arg_dist_cumulants, arg_dist_derivs;
    std::string arg_input, arg_mode;
    std::optional<int> arg_orders_recover;

    CLI::App* compute = app.add_subcommand("compute", "compute R_n, updating the cache");
    compute->add_option("--n", arg_n, "order")->required()->check(CLI::Range(2, 1000));
    add_common(compute, c_compute);

    CLI::App* show = app.add_subcommand("show", "print R_n");
    show->add_option("--n", arg_n, "order")->required()->check(CLI::Range(2, 1000));
    add_common(show, c_show);

    CLI::App* coeff = app.add_subcommand("coeff", "print one coefficient of R_n");
    coeff->add_option("--n", arg_n, "order")->required()->check(CLI::Range(2, 1000));
    coeff->add_option("--partition", arg_partition, "comma separated parts, e.g. 8,8,2")
        ->required();
    add_common(coeff, c_coeff);

    CLI::App* verify = app.add_subcommand("verify", "run the self-check battery");
    verify->add_option("--max-n", arg_max_n, "highest order checked (>= 4)");
    add_common(verify, c_verify);

    CLI::App* cumulants = app.add_subcommand("cumulants", "emit a cumulant sequence");
    cumulants->add_option("--dist", arg_dist_cumulants, "source law")->required();
    cumulants->add_option("--orders", arg_orders_cumulants, "highest order (>= 2)");
    add_common(cumulants, c_cumulants, false);

    CLI::App* derivs = app.add_subcommand("mmse-derivs",
                                          "evaluate error derivatives at zero signal");
    derivs->add_option("--dist", arg_dist_derivs, "source law")->required();
    derivs->add_option("--orders", arg_orders_derivs, "highest derivative order (>= 1)");
    add_common(derivs, c_derivs);

    CLI::App* recover = app.add_subcommand("recover",
                                           "rebuild cumulants from derivative data");
    recover->add_option("input", arg_input, "mmse-derivs JSON file")->required();
    recover->add_option("--mode", arg_mode,
                        "sign rule: symmetric-star, positive or alternating")->required();
    recover->add_option("--orders", arg_orders_recover,
                        "highest order to recover (default: all in the file)");
    add_common(recover, c_recover);

    CLI::App* bench = app.add_subcommand("bench", "time the recursion, cold cache");
    bench->add_option("--max-n", arg_bench_n, "highest order timed (>= 10)");
    bench->add_option("--reps", arg_reps, "repetitions, best time kept");
    add_common(bench, c_bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (compute->parsed()) return cmd_compute(c_compute, arg_n);
        if (show->parsed()) return cmd_show(c_show, arg_n);
        if (coeff->parsed()) return cmd_coeff(c_coeff, arg_n, arg_partition);
        if (verify->parsed()) return cmd_verify(c_verify, arg_max_n);
        if (cumulants->parsed()) return cmd_cumulants(c_cumulants, arg_dist_cumulants,
                                                      arg_orders_cumulants);
        if (derivs->parsed()) return cmd_mmse_derivs(c_derivs, arg_dist_derivs,
                                                     arg_orders_derivs);
        if (recover->parsed()) return cmd_recover(c_recover, arg_input, arg_mode,
                                                  arg_orders_recover);
        if (bench->parsed()) return cmd_bench(c_bench, arg_bench_n, arg_reps);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 64;
    } catch (const gf::RecoveryError& e) {
        std::cerr << "recovery failed at order " << e.order << ": " << e.what() << '\n';
        std::cerr << "trace: " << gf::trace_to_json(e.trace) << '\n';
        switch (e.kind) {
            case gf::RecoveryFailure::Ambiguous: return 2;
            case gf::RecoveryFailure::Inconsistent: return 3;
            case gf::RecoveryFailure::Irrational: return 4;
        }
        return 1;
    } catch (const gf::CacheError& e) {
        std::cerr << "cache error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
