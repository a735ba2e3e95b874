#include "polygauss/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "polygauss/errors.hpp"

namespace polygauss {

namespace {

struct Instance {
    Poly f;
    std::optional<HalfSystem> s;
    Theorem theorem;
};

std::vector<HalfSystem> half_systems_for(const SweepConfig& config) {
    if (config.all_half_systems) return enumerate_half_systems(*config.ctx);
    std::vector<HalfSystem> out;
    out.reserve(config.explicit_half_systems.size());
    for (const auto& members : config.explicit_half_systems)
        out.push_back(HalfSystem::make(*config.ctx, members));
    return out;
}

// Rough multiplication count of one instance; brute products dominate.
BigInt instance_cost(const FieldCtx& ctx, int deg, Theorem t) {
    const BigInt q = ctx.q();
    BigInt base = boost::multiprecision::pow(q, static_cast<unsigned>(deg));
    if (t == Theorem::con3) base *= q * q * q;
    return base;
}

}  // namespace

BigInt estimate_sweep_cost(const SweepConfig& config) {
    const FieldCtx& ctx = *config.ctx;
    size_t n_systems = 1;
    if (config.all_half_systems)
        n_systems = size_t(1) << ((ctx.q() - 1) / 2 > 24 ? 24 : (ctx.q() - 1) / 2);
    else if (!config.explicit_half_systems.empty())
        n_systems = config.explicit_half_systems.size();
    BigInt total = 0;
    for (Theorem t : config.theorems) {
        const BigInt per_f_systems = theorem_needs_half_system(t) ? n_systems : 1;
        for (int d = 1; d <= config.max_degree; ++d) {
            const BigInt monic_count = boost::multiprecision::pow(BigInt(ctx.q()),
                                                                  static_cast<unsigned>(d));
            total += monic_count * per_f_systems * instance_cost(ctx, d, t);
        }
    }
    return total;
}

SweepOutcome run_sweep(const SweepConfig& config) {
    const FieldCtx& ctx = *config.ctx;
    if (config.max_degree < 1) throw Error(errc::bad_range, "max_degree must be >= 1");
    if (config.theorems.empty()) throw Error(errc::bad_range, "no theorem requested");
    if (config.jobs < 1) throw Error(errc::bad_range, "jobs must be >= 1");
    for (Theorem t : config.theorems) check_theorem_field(t, ctx);

    const BigInt cost = estimate_sweep_cost(config);
    if (cost > config.budget)
        throw Error(errc::too_large, "estimated " + cost.str() +
                                         " multiplications exceeds the budget of " +
                                         std::to_string(config.budget) +
                                         "; shrink max-degree or raise --budget");

    bool any_needs_s = false;
    for (Theorem t : config.theorems) any_needs_s |= theorem_needs_half_system(t);
    std::vector<HalfSystem> systems;
    if (any_needs_s) {
        systems = half_systems_for(config);
        if (systems.empty())
            throw Error(errc::bad_range, "this theorem needs --S all or an explicit half-system");
    }

    std::vector<Instance> instances;
    for (Theorem t : config.theorems) {
        for (int d = 1; d <= config.max_degree; ++d) {
            for (const Poly& f : enumerate_polys(ctx, d, /*monic_only=*/true)) {
                if (!theorem_applies_to(t, factor(f))) continue;
                if (theorem_needs_half_system(t)) {
                    for (const HalfSystem& s : systems) instances.push_back({f, s, t});
                } else {
                    instances.push_back({f, std::nullopt, t});
                }
            }
        }
    }

    std::vector<VerdictRecord> rows(instances.size());
    const int jobs = std::min<int>(config.jobs, static_cast<int>(instances.size() ? instances.size() : 1));
    if (jobs <= 1) {
        for (size_t i = 0; i < instances.size(); ++i)
            rows[i] = verify_instance(instances[i].f, instances[i].s, instances[i].theorem);
    } else {
        std::atomic<size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const size_t i = next.fetch_add(1);
                    if (i >= instances.size() || failed.load()) return;
                    try {
                        rows[i] =
                            verify_instance(instances[i].f, instances[i].s, instances[i].theorem);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!error) error = std::current_exception();
                        failed.store(true);
                        return;
                    }
                }
            });
        }
        for (auto& worker : workers) worker.join();
        if (error) std::rethrow_exception(error);
    }

    std::sort(rows.begin(), rows.end(), [](const VerdictRecord& a, const VerdictRecord& b) {
        if (a.f_encoding != b.f_encoding) return a.f_encoding < b.f_encoding;
        if (a.s_members != b.s_members) return a.s_members < b.s_members;
        return a.theorem < b.theorem;
    });

    SweepOutcome outcome;
    outcome.rows = std::move(rows);
    for (const VerdictRecord& row : outcome.rows)
        if (!row.matches) ++outcome.mismatches;
    return outcome;
}

std::string csv_header() { return "field,q,f,S,theorem,brute,predicted,matches,order,clause"; }

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string to_csv_row(const VerdictRecord& row) {
    std::ostringstream os;
    os << csv_field(row.field_spec) << ',' << row.q << ',' << csv_field(row.f_text) << ','
       << csv_field(row.s_text) << ',' << row.theorem << ',' << csv_field(row.brute) << ','
       << csv_field(row.predicted) << ',' << (row.matches ? "true" : "false") << ',';
    if (row.order) os << *row.order;
    os << ',';
    if (row.clause) os << *row.clause;
    return os.str();
}

std::string to_json_row(const VerdictRecord& row) {
    nlohmann::ordered_json j;
    j["field"] = row.field_spec;
    j["q"] = row.q;
    j["f"] = row.f_text;
    if (!row.s_text.empty()) j["S"] = row.s_text;
    j["theorem"] = row.theorem;
    j["brute"] = row.brute;
    j["predicted"] = row.predicted;
    j["matches"] = row.matches;
    if (row.order) j["order"] = *row.order;
    if (row.clause) j["clause"] = *row.clause;
    return j.dump();
}

void write_report(const std::vector<VerdictRecord>& rows, ReportFormat format, std::ostream& os) {
    if (format == ReportFormat::csv) {
        os << csv_header() << '\n';
        for (const VerdictRecord& row : rows) os << to_csv_row(row) << '\n';
    } else {
        for (const VerdictRecord& row : rows) os << to_json_row(row) << '\n';
    }
}

}  // namespace polygauss
