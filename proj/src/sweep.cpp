#include "chneg/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "chneg/choi.hpp"
#include "chneg/negativity.hpp"

namespace chneg {

namespace {

struct FamilyInfo {
    std::vector<std::string> required;
    std::vector<std::string> optional;
};

const std::map<std::string, FamilyInfo>& families() {
    static const std::map<std::string, FamilyInfo> table = {
        {"rabi", {{"kz", "t"}, {"phi", "nu", "omega"}}},
        {"utheta", {{"theta"}, {}}},
        {"alpha", {{"alpha"}, {}}},
        {"theta_alpha", {{"theta", "alpha"}, {}}},
        {"czprime", {{"delta"}, {}}},
        {"czdoubleprime", {{"delta", "xi"}, {}}},
    };
    return table;
}

double param(const std::map<std::string, double>& params, const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end())
        throw ValidationError("sweep: missing parameter '" + name + "'");
    return it->second;
}

double param_or(const std::map<std::string, double>& params, const std::string& name,
                double fallback) {
    const auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

} // namespace

std::vector<double> axis_values(const SweepAxis& axis) {
    std::vector<double> values(axis.count);
    const double step = (axis.stop - axis.start) / static_cast<double>(axis.count - 1);
    for (std::size_t i = 0; i < axis.count; ++i)
        values[i] = axis.start + static_cast<double>(i) * step;
    return values;
}

std::pair<CouplingSpec, AssignmentMap> family_channel(const std::string& family,
                                                      const std::map<std::string, double>& params) {
    if (family == "rabi") {
        RabiCoupling coupling{param_or(params, "nu", 0.0), param_or(params, "omega", 1.0),
                              param(params, "kz"), param(params, "t")};
        // The bath rotation defaults to the fixed Hadamard; an assigned phi
        // switches to the R(phi) family.
        if (params.count("phi"))
            return {coupling, RotationSharp{params.at("phi")}};
        return {coupling, HadamardSharp{}};
    }
    if (family == "utheta")
        return {RotationThetaCoupling{param(params, "theta")}, HadamardSharp{}};
    if (family == "alpha")
        return {CzCoupling{}, AlphaSharp{param(params, "alpha")}};
    if (family == "theta_alpha")
        return {RotationThetaCoupling{param(params, "theta")}, AlphaSharp{param(params, "alpha")}};
    if (family == "czprime")
        return {CzPrimeCoupling{param(params, "delta")}, HadamardSharp{}};
    if (family == "czdoubleprime")
        return {CzDoublePrimeCoupling{param(params, "delta"), param(params, "xi")}, HadamardSharp{}};
    throw ValidationError("sweep: unknown family '" + family + "'");
}

namespace {

void validate_grid(const SweepGrid& grid) {
    const auto fam = families().find(grid.family);
    if (fam == families().end())
        throw ValidationError("sweep: unknown family '" + grid.family + "'");
    if (grid.axes.empty()) throw ValidationError("sweep: grid needs at least one axis");

    std::set<std::string> known(fam->second.required.begin(), fam->second.required.end());
    known.insert(fam->second.optional.begin(), fam->second.optional.end());

    std::set<std::string> assigned;
    for (const SweepAxis& axis : grid.axes) {
        if (!known.count(axis.name))
            throw ValidationError("sweep: family '" + grid.family + "' has no parameter '" +
                                  axis.name + "'");
        if (!assigned.insert(axis.name).second)
            throw ValidationError("sweep: parameter '" + axis.name + "' assigned twice");
        if (axis.count < 2)
            throw ValidationError("sweep: axis '" + axis.name + "' needs at least 2 points");
        if (!(axis.start < axis.stop))
            throw ValidationError("sweep: axis '" + axis.name + "' needs start < stop");
    }
    for (const auto& [name, value] : grid.fixed) {
        (void)value;
        if (!known.count(name))
            throw ValidationError("sweep: family '" + grid.family + "' has no parameter '" + name +
                                  "'");
        if (!assigned.insert(name).second)
            throw ValidationError("sweep: parameter '" + name + "' assigned twice");
    }
    for (const std::string& name : fam->second.required)
        if (!assigned.count(name))
            throw ValidationError("sweep: family '" + grid.family + "' requires parameter '" +
                                  name + "'");
}

std::size_t thread_count(std::size_t jobs) {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("NEGATIVITY_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end && *end == '\0' && cap > 0) n = std::min<std::size_t>(n, cap);
    }
    return std::min(n, std::max<std::size_t>(jobs, 1));
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

SweepResult run_sweep(const SweepGrid& grid) {
    validate_grid(grid);

    std::vector<std::vector<double>> values;
    values.reserve(grid.axes.size());
    std::size_t total = 1;
    for (const SweepAxis& axis : grid.axes) {
        values.push_back(axis_values(axis));
        total *= axis.count;
    }

    SweepResult result;
    result.family = grid.family;
    result.grid = grid;
    for (const SweepAxis& axis : grid.axes) result.axis_names.push_back(axis.name);
    result.rows.resize(total);
    result.timestamp = utc_timestamp();

    const auto evaluate = [&](std::size_t row) {
        std::map<std::string, double> params = grid.fixed;
        std::vector<double> point(grid.axes.size());
        std::size_t rem = row;
        for (std::size_t a = grid.axes.size(); a-- > 0;) {
            const std::size_t idx = rem % grid.axes[a].count;
            rem /= grid.axes[a].count;
            point[a] = values[a][idx];
            params[grid.axes[a].name] = point[a];
        }
        const auto [spec, map] = family_channel(grid.family, params);
        result.rows[row] = SweepRow{std::move(point), negativity(assemble_choi(spec, map)).eta};
    };

    const std::size_t workers = thread_count(total);
    if (workers <= 1) {
        for (std::size_t row = 0; row < total; ++row) evaluate(row);
    } else {
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t row = w; row < total; row += workers) evaluate(row);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (std::thread& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }
    return result;
}

SweepResult cp_map(const SweepGrid& grid, double eta_tol) {
    if (!(eta_tol > 0.0)) throw ValidationError("cp_map: eta tolerance must be positive");
    SweepResult result = run_sweep(grid);
    std::vector<SweepRow> kept;
    kept.reserve(result.rows.size());
    for (SweepRow& row : result.rows)
        if (row.eta < eta_tol) kept.push_back(std::move(row));
    result.rows = std::move(kept);
    return result;
}

std::array<double, 4> xform_spectrum(Complex x, Complex y) {
    const double ax = std::abs(x), ay = std::abs(y);
    return {1.0 - ax, 1.0 + ax, -ay, ay};
}

Matrix xform_choi(Complex x, Complex y) {
    Matrix c(4);
    c(0, 0) = 1.0;
    c(3, 3) = 1.0;
    c(0, 3) = x;
    c(3, 0) = std::conj(x);
    c(1, 2) = y;
    c(2, 1) = std::conj(y);
    return c;
}

void write_csv(std::ostream& os, const SweepResult& result) {
    for (std::size_t a = 0; a < result.axis_names.size(); ++a) {
        if (a) os << ',';
        os << result.axis_names[a];
    }
    os << ",eta\n";
    char buf[32];
    for (const SweepRow& row : result.rows) {
        for (double p : row.params) {
            std::snprintf(buf, sizeof buf, "%.17g", p);
            os << buf << ',';
        }
        std::snprintf(buf, sizeof buf, "%.17g", row.eta);
        os << buf << '\n';
    }
}

} // namespace chneg
