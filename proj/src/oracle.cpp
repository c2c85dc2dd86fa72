#include "wd/oracle.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "wd/errors.hpp"
#include "wd/period_poly.hpp"

namespace wd {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool n2_supported(std::uint64_t n2) {
    switch (n2) {
        case 1: case 2: case 3: case 4: case 5: case 6: case 8: case 12: return true;
        default: return false;
    }
}

std::string diff_entries(const WeightDistribution& a, const WeightDistribution& b) {
    std::map<Int, std::pair<Int, Int>> rows;
    for (const auto& [w, f] : a.entries) rows[w].first = f;
    for (const auto& [w, f] : b.entries) rows[w].second = f;
    std::ostringstream out;
    for (const auto& [w, fs] : rows) {
        if (fs.first != fs.second)
            out << "w=" << w << ": closed=" << fs.first << " oracle=" << fs.second << "; ";
    }
    return out.str();
}

}  // namespace

std::vector<std::uint64_t> trace_zero_profile(const FieldContext& ctx, unsigned s,
                                              std::uint64_t L) {
    const std::uint64_t r = ctx.order_u64();
    const std::uint64_t p = ctx.p();
    const unsigned k = ctx.k();
    const auto mat = ctx.trace_matrix(s);

    std::vector<std::uint64_t> zeros(L, 0);
    Elt x = ctx.one();
    const Elt& alpha = ctx.alpha();
    for (std::uint64_t j = 0; j < r - 1; ++j) {
        bool zero = true;
        for (unsigned row = 0; row < k && zero; ++row) {
            std::uint64_t acc = 0;
            for (unsigned c = 0; c < k; ++c) acc += std::uint64_t(mat[row][c]) * x[c];
            if (acc % p != 0) zero = false;
        }
        if (zero) ++zeros[j % L];
        x = ctx.mul(x, alpha);
    }
    return zeros;
}

WeightDistribution oracle_from_profile(const CodeSpec& spec,
                                       const std::vector<std::uint64_t>& zeros) {
    const std::uint64_t L = zeros.size();
    if (L % spec.N != 0) throw Error("profile modulus is not a multiple of N");

    // Codeword coordinates of beta = alpha^i are Tr(alpha^{i+Nt}); its weight
    // is n minus the trace-zero count of the residue class i mod N, and all
    // (r-1)/N values of beta in a class share that weight.
    const Int class_freq = (spec.r - 1) / spec.N;
    std::map<Int, Int> merged;
    for (std::uint64_t i = 0; i < spec.N; ++i) {
        std::uint64_t z = 0;
        for (std::uint64_t l = i; l < L; l += spec.N) z += zeros[l];
        merged[spec.n - z] += class_freq;
    }

    WeightDistribution dist;
    dist.spec = spec;
    dist.method = "oracle";
    dist.entries.assign(merged.begin(), merged.end());
    dist.validate();
    return dist;
}

WeightDistribution oracle_weight_distribution(std::uint64_t p, unsigned s, unsigned m,
                                              std::uint64_t N, std::uint64_t cap) {
    CodeSpec spec = code_params(p, s, m, N);
    if (spec.r > cap)
        throw CapExceeded("oracle sweep over r = " + spec.r.str() + " exceeds cap " +
                          std::to_string(cap));
    FieldContext ctx = build_field(p, spec.k);
    return oracle_from_profile(spec, trace_zero_profile(ctx, s, N));
}

VerificationReport verify(std::uint64_t p, unsigned s, unsigned m, std::uint64_t N,
                          std::uint64_t cap) {
    VerificationReport report;
    report.spec = code_params(p, s, m, N);

    auto t0 = std::chrono::steady_clock::now();
    report.closed = weight_distribution(p, s, m, N, Method::Closed);
    report.closed_seconds = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    report.oracle = oracle_weight_distribution(p, s, m, N, cap);
    report.oracle_seconds = seconds_since(t0);

    report.match = report.closed.same_entries(report.oracle);
    if (!report.match) report.detail = diff_entries(report.closed, report.oracle);
    return report;
}

SweepResult sweep(const SweepGrid& grid, std::uint64_t cap, unsigned jobs) {
    struct FieldTask {
        std::uint64_t p;
        unsigned s, m;
        std::uint64_t r;
    };
    std::vector<FieldTask> tasks;
    for (std::uint64_t p : grid.primes) {
        for (unsigned s : grid.s_values) {
            for (unsigned m = 1; m <= grid.m_max; ++m) {
                Int r = ipow(Int(p), s * m);
                if (r > grid.r_max || r > cap) break;
                tasks.push_back({p, s, m, std::uint64_t(r)});
            }
        }
    }

    std::vector<std::vector<SweepRecord>> per_field(tasks.size());
    auto run_field = [&](std::size_t idx) {
        const FieldTask& t = tasks[idx];
        std::vector<SweepRecord>& out = per_field[idx];

        // Admissible N values share one trace-zero profile mod their lcm.
        std::vector<std::uint64_t> candidates = grid.n_list;
        if (candidates.empty())
            for (std::uint64_t N = 1; N <= grid.n_max; ++N) candidates.push_back(N);
        std::vector<std::uint64_t> admissible;
        std::uint64_t L = 1;
        for (std::uint64_t N : candidates) {
            if (N >= 1 && (t.r - 1) % N == 0) {
                admissible.push_back(N);
                L = std::lcm(L, N);
            }
        }
        std::vector<std::uint64_t> profile;
        for (std::uint64_t N : admissible) {
            SweepRecord rec{t.p, t.s, t.m, N, SweepStatus::Skip, ""};
            try {
                CodeSpec spec = code_params(t.p, t.s, t.m, N);
                if (!n2_supported(spec.n2)) {
                    rec.reason = "N2 = " + std::to_string(spec.n2) + " unsupported";
                } else {
                    if (profile.empty()) {
                        FieldContext ctx = build_field(t.p, t.s * t.m);
                        profile = trace_zero_profile(ctx, t.s, L);
                    }
                    WeightDistribution closed =
                        weight_distribution(t.p, t.s, t.m, N, Method::Closed);
                    WeightDistribution oracle = oracle_from_profile(spec, profile);
                    if (closed.same_entries(oracle)) {
                        rec.status = SweepStatus::Pass;
                    } else {
                        rec.status = SweepStatus::Fail;
                        rec.reason = diff_entries(closed, oracle);
                    }
                }
            } catch (const DimensionMismatch& e) {
                rec.reason = e.what();
            } catch (const Error& e) {
                rec.status = SweepStatus::Fail;
                rec.reason = e.what();
            }
            out.push_back(std::move(rec));
        }
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_field(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size();
                 i = next.fetch_add(1))
                run_field(i);
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepResult result;
    for (auto& field : per_field) {
        for (auto& rec : field) {
            switch (rec.status) {
                case SweepStatus::Pass: ++result.passed; break;
                case SweepStatus::Fail: ++result.failed; break;
                case SweepStatus::Skip: ++result.skipped; break;
            }
            result.records.push_back(std::move(rec));
        }
    }
    return result;
}

}  // namespace wd
