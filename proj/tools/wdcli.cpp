// wdcli: weight distributions of irreducible cyclic codes.
//
// Subcommands:
//   dist      closed-form / direct weight distribution of C(r, N)
//   factor    roots of the reduced period polynomial of order N2
//   classify  OneWeight / MaxWeights / TwoWeightSemiPrimitive / Other
//   verify    closed form against the brute-force oracle for one code
//   sweep     closed-vs-oracle comparison over a parameter grid
//
// Exit codes: 0 success, 2 parameter error, 3 unsupported order,
// 4 dimension mismatch (ord_n(q) != m).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wd/oracle.hpp"
#include "wd/period_poly.hpp"
#include "wd/render.hpp"
#include "wd/weights.hpp"

namespace {

constexpr int kExitParam = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitDimension = 4;

struct CodeFlags {
    std::uint64_t p = 0;
    unsigned s = 1;
    unsigned m = 1;
    std::uint64_t N = 1;
};

void add_code_flags(CLI::App* cmd, CodeFlags& flags, bool with_n = true) {
    cmd->add_option("-p", flags.p, "characteristic (prime)")->required();
    cmd->add_option("-s", flags.s, "q = p^s")->default_val(1);
    cmd->add_option("-m", flags.m, "r = q^m")->default_val(1);
    if (with_n) cmd->add_option("-N", flags.N, "order of the code, N | r-1")->required();
}

wd::Method parse_method(const std::string& name) {
    if (name == "closed") return wd::Method::Closed;
    if (name == "direct") return wd::Method::Direct;
    if (name == "auto") return wd::Method::Auto;
    throw CLI::ValidationError("--method", "must be closed, direct, or auto");
}

std::filesystem::path cache_path(const std::string& dir, const CodeFlags& f,
                                 const std::string& method) {
    std::ostringstream name;
    name << f.p << "_" << f.s << "_" << f.m << "_" << f.N << "_" << method << ".json";
    return std::filesystem::path(dir) / name.str();
}

int run_dist(const CodeFlags& f, const std::string& method_name,
             const std::string& format, bool no_cache, const std::string& cache_dir) {
    wd::Method method = parse_method(method_name);

    wd::WeightDistribution dist;
    bool from_cache = false;
    std::filesystem::path cached = cache_path(cache_dir, f, method_name);
    if (!no_cache && std::filesystem::exists(cached)) {
        std::ifstream in(cached);
        std::stringstream buf;
        buf << in.rdbuf();
        dist = wd::from_json(buf.str());
        from_cache = true;
    } else {
        dist = wd::weight_distribution(f.p, f.s, f.m, f.N, method);
    }

    wd::Classification cls = wd::classify(dist.spec);
    if (format == "json") {
        std::cout << wd::to_json(dist, cls) << "\n";
    } else if (format == "text") {
        std::cout << wd::to_polynomial_text(dist) << "\n";
    } else {
        throw CLI::ValidationError("--format", "must be text or json");
    }

    if (!no_cache && !from_cache) {
        std::filesystem::create_directories(cache_dir);
        std::ofstream out(cached);
        out << wd::to_json(dist, cls) << "\n";
    }
    return 0;
}

int run_factor(std::uint64_t p, unsigned s, unsigned m, unsigned n2) {
    wd::PeriodFactorization fact = wd::factorize_reduced_period(p, s, m, n2);
    std::cout << "[";
    bool first = true;
    for (const auto& [xi, e] : fact.roots) {
        for (unsigned i = 0; i < e; ++i) {
            if (!first) std::cout << ", ";
            std::cout << xi;
            first = false;
        }
    }
    std::cout << "]\n";
    return 0;
}

int run_classify(const CodeFlags& f) {
    wd::CodeSpec spec = wd::code_params(f.p, f.s, f.m, f.N);
    wd::Classification cls = wd::classify(spec);
    std::cout << wd::to_string(cls) << " (N2=" << spec.n2;
    if (cls == wd::Classification::MaxWeights)
        std::cout << ", p≡1 mod " << spec.n2;
    std::cout << ")\n";
    return 0;
}

int run_verify(const CodeFlags& f) {
    wd::VerificationReport report = wd::verify(f.p, f.s, f.m, f.N);
    std::cout << (report.match ? "PASS" : "FAIL") << " p=" << f.p << " s=" << f.s
              << " m=" << f.m << " N=" << f.N << "\n"
              << "closed (" << report.closed_seconds << "s): "
              << wd::to_polynomial_text(report.closed) << "\n"
              << "oracle (" << report.oracle_seconds << "s): "
              << wd::to_polynomial_text(report.oracle) << "\n";
    if (!report.match) std::cout << "diff: " << report.detail << "\n";
    return 0;
}

int run_sweep(std::uint64_t p_max, std::uint64_t max_r, unsigned m_max,
              const std::vector<std::uint64_t>& n_list, const std::string& out_path,
              unsigned jobs) {
    wd::SweepGrid grid;
    for (std::uint64_t p = 2; p <= p_max; ++p)
        if (wd::is_prime(p)) grid.primes.push_back(p);
    grid.s_values = {1, 2};
    grid.m_max = m_max;
    grid.r_max = max_r;
    grid.n_list = n_list;

    wd::SweepResult result = wd::sweep(grid, wd::kEnumerationCap, jobs);

    nlohmann::json doc = nlohmann::json::array();
    for (const auto& rec : result.records) {
        const char* status = rec.status == wd::SweepStatus::Pass   ? "PASS"
                             : rec.status == wd::SweepStatus::Fail ? "FAIL"
                                                                   : "SKIP";
        if (rec.status != wd::SweepStatus::Pass)
            std::cout << status << " p=" << rec.p << " s=" << rec.s << " m=" << rec.m
                      << " N=" << rec.N
                      << (rec.reason.empty() ? "" : " (" + rec.reason + ")") << "\n";
        doc.push_back({{"p", rec.p},
                       {"s", rec.s},
                       {"m", rec.m},
                       {"N", rec.N},
                       {"status", status},
                       {"reason", rec.reason}});
    }
    std::cout << "PASS=" << result.passed << ", FAIL=" << result.failed
              << ", SKIP=" << result.skipped << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << doc.dump(2) << "\n";
    }
    return result.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weight distributions of irreducible cyclic codes"};
    app.require_subcommand(1);

    CodeFlags dist_flags;
    std::string method = "auto", format = "text", cache_dir = "cache";
    bool no_cache = false;
    CLI::App* dist = app.add_subcommand("dist", "weight distribution of C(r, N)");
    add_code_flags(dist, dist_flags);
    dist->add_option("--method", method, "closed | direct | auto")->default_val("auto");
    dist->add_option("--format", format, "text | json")->default_val("text");
    dist->add_flag("--no-cache", no_cache, "bypass the result cache");
    dist->add_option("--cache-dir", cache_dir, "cache directory")->default_val("cache");

    CodeFlags factor_flags;
    unsigned factor_n2 = 0;
    CLI::App* factor = app.add_subcommand("factor", "reduced period polynomial roots");
    add_code_flags(factor, factor_flags, false);
    factor->add_option("--N2", factor_n2, "order of the period polynomial")->required();

    CodeFlags classify_flags;
    CLI::App* classify = app.add_subcommand("classify", "weight-count classification");
    add_code_flags(classify, classify_flags);

    CodeFlags verify_flags;
    CLI::App* verify = app.add_subcommand("verify", "closed form vs brute-force oracle");
    add_code_flags(verify, verify_flags);

    std::uint64_t p_max = 23, max_r = 1000000;
    unsigned m_max = 8, jobs = 1;
    std::vector<std::uint64_t> n_list;
    std::string out_path;
    CLI::App* sweep = app.add_subcommand("sweep", "closed-vs-oracle grid comparison");
    sweep->add_option("--p-max", p_max, "largest characteristic")->default_val(23);
    sweep->add_option("--max-r", max_r, "largest field size")->default_val(1000000);
    sweep->add_option("--m-max", m_max, "largest extension degree")->default_val(8);
    sweep->add_option("--N-list", n_list, "comma-separated N values")->delimiter(',');
    sweep->add_option("--out", out_path, "write JSON records to this path");
    sweep->add_option("--jobs", jobs, "worker threads")->default_val(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParam;
    }

    try {
        if (*dist)
            return run_dist(dist_flags, method, format, no_cache, cache_dir);
        if (*factor)
            return run_factor(factor_flags.p, factor_flags.s, factor_flags.m, factor_n2);
        if (*classify) return run_classify(classify_flags);
        if (*verify) return run_verify(verify_flags);
        if (*sweep) return run_sweep(p_max, max_r, m_max, n_list, out_path, jobs);
    } catch (const wd::UnsupportedOrder& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const wd::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return kExitParam;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParam;
    }
    return kExitParam;
}
