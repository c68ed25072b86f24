// Command-line front end: cells, betti, predict, compare, table, verify.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unistd.h>
#include <vector>

#include "confhom/filtration.hpp"
#include "confhom/homology.hpp"
#include "confhom/predict.hpp"
#include "confhom/serialize.hpp"
#include "confhom/symchains.hpp"

namespace fs = std::filesystem;
using namespace confhom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    Range r;
    std::size_t used = 0;
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(text, &used);
        if (used != text.size())
            throw std::invalid_argument("bad range: " + text);
    } else {
        r.lo = std::stoi(text.substr(0, dots), &used);
        if (used != dots)
            throw std::invalid_argument("bad range: " + text);
        const std::string tail = text.substr(dots + 2);
        r.hi = std::stoi(tail, &used);
        if (used != tail.size())
            throw std::invalid_argument("bad range: " + text);
    }
    if (r.lo < 0 || r.hi < r.lo)
        throw std::invalid_argument("empty or negative range: " + text);
    return r;
}

struct Instance {
    int g = 0;
    int n = 1;
    int m = 0;
};

struct JobConfig {
    Range genus;
    int boundaries = 1;
    Range points;
    std::string format = "text";
    std::string out_path;
    std::uint64_t cap = kDefaultCellCap;
    int jobs = 1;
    std::set<std::string> checks;
};

std::vector<Instance> instances_of(const JobConfig& config) {
    std::vector<Instance> list;
    for (int g = config.genus.lo; g <= config.genus.hi; ++g)
        for (int m = config.points.lo; m <= config.points.hi; ++m)
            list.push_back(Instance{g, config.boundaries, m});
    return list;
}

// Plain-file cache of Betti tables, keyed by instance and code version.
// CFG_HOMOLOGY_CACHE_DIR overrides the location; without it the cache lives
// under $HOME/.cache/confhom, and with neither set caching is skipped.
class BettiCache {
public:
    BettiCache() {
        const char* override_dir = std::getenv("CFG_HOMOLOGY_CACHE_DIR");
        if (override_dir && *override_dir) {
            dir_ = override_dir;
        } else if (const char* home = std::getenv("HOME"); home && *home) {
            dir_ = fs::path(home) / ".cache" / "confhom";
        } else {
            return;
        }
        std::error_code ec;
        fs::create_directories(dir_, ec);
        enabled_ = fs::is_directory(dir_, ec) && !ec;
    }

    std::optional<BettiTable> load(const Instance& inst) const {
        if (!enabled_)
            return std::nullopt;
        std::ifstream in(key_path(inst));
        if (!in)
            return std::nullopt;
        try {
            ordered_json record;
            in >> record;
            return betti_table_from_record(record);
        } catch (const std::exception&) {
            return std::nullopt; // corrupt entry: recompute
        }
    }

    void store(const BettiTable& table) const {
        if (!enabled_)
            return;
        static std::atomic<unsigned> counter{0};
        const fs::path final_path =
            key_path(Instance{table.surface.genus, table.surface.boundaries, table.weight});
        const fs::path tmp_path =
            final_path.string() + ".tmp." + std::to_string(::getpid()) + "." +
            std::to_string(counter.fetch_add(1));
        {
            std::ofstream out(tmp_path);
            if (!out)
                return;
            out << betti_record(table).dump() << '\n';
        }
        std::error_code ec;
        fs::rename(tmp_path, final_path, ec);
        if (ec)
            fs::remove(tmp_path, ec);
    }

private:
    fs::path key_path(const Instance& inst) const {
        return dir_ / ("g" + std::to_string(inst.g) + "_n" + std::to_string(inst.n) + "_m" +
                       std::to_string(inst.m) + "_" + kCodeVersion + ".json");
    }

    fs::path dir_;
    bool enabled_ = false;
};

BettiTable betti_cached(const BettiCache& cache, const Instance& inst, std::uint64_t cap) {
    if (auto hit = cache.load(inst))
        return *hit;
    const BettiTable table = betti(make_surface(inst.g, inst.n), inst.m, cap);
    cache.store(table);
    return table;
}

// Per-instance work product, assembled by a worker and emitted in order.
struct InstanceResult {
    std::string body;
    bool pass = true;
    std::string first_fail;
    std::optional<std::string> resource_error;
};

template <class Fn>
void run_pool(std::size_t count, int jobs, Fn&& fn) {
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

std::string instance_tag(const Instance& inst) {
    return "g=" + std::to_string(inst.g) + " n=" + std::to_string(inst.n) +
           " m=" + std::to_string(inst.m);
}

void render_report(const Instance& inst, const Report& report, InstanceResult& result) {
    result.body += "# " + instance_tag(inst) + "\n";
    for (const Check& check : report.checks) {
        if (check.pass) {
            result.body += "PASS " + check.label + "\n";
        } else {
            result.body += "FAIL " + instance_tag(inst) + " " + check.label;
            if (!check.detail.empty())
                result.body += " (" + check.detail + ")";
            result.body += "\n";
            if (result.pass) {
                result.pass = false;
                result.first_fail = instance_tag(inst) + " " + check.label;
            }
        }
    }
}

ordered_json report_json(const Instance& inst, const Report& report) {
    ordered_json record = ordered_json::object();
    record["genus"] = inst.g;
    record["boundaries"] = inst.n;
    record["points"] = inst.m;
    ordered_json checks = ordered_json::array();
    for (const Check& check : report.checks) {
        ordered_json c = ordered_json::object();
        c["label"] = check.label;
        c["pass"] = check.pass;
        if (!check.detail.empty())
            c["detail"] = check.detail;
        checks.push_back(std::move(c));
    }
    record["checks"] = std::move(checks);
    return record;
}

// json arrays carry one record per line
std::string join_json(const std::vector<std::string>& records) {
    if (records.size() == 1)
        return records[0] + "\n";
    std::string out = "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        out += records[i];
        out += i + 1 < records.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

int emit(const JobConfig& config, const std::string& payload) {
    if (config.out_path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << config.out_path << "\n";
        return kExitUsage;
    }
    out << payload;
    return kExitOk;
}

// run `work` per instance on the pool; a resource overrun anywhere aborts
int run_instances(const JobConfig& config, std::vector<InstanceResult>& results,
                  const std::function<void(const Instance&, InstanceResult&)>& work) {
    const std::vector<Instance> list = instances_of(config);
    results.assign(list.size(), {});
    run_pool(list.size(), config.jobs, [&](std::size_t i) {
        try {
            work(list[i], results[i]);
        } catch (const ResourceLimitError& e) {
            results[i].resource_error = e.what();
        }
    });
    for (const InstanceResult& r : results)
        if (r.resource_error) {
            std::cerr << *r.resource_error << "\n";
            return kExitResource;
        }
    return kExitOk;
}

int finish(const JobConfig& config, const std::vector<InstanceResult>& results, bool json,
           bool gate) {
    std::string payload;
    if (json) {
        std::vector<std::string> records;
        records.reserve(results.size());
        for (const InstanceResult& r : results) records.push_back(r.body);
        payload = join_json(records);
    } else {
        for (const InstanceResult& r : results) payload += r.body;
    }
    const int emitted = emit(config, payload);
    if (emitted != kExitOk)
        return emitted;
    if (gate)
        for (const InstanceResult& r : results)
            if (!r.pass) {
                std::cerr << "first failing check: " << r.first_fail << "\n";
                return kExitVerifyFail;
            }
    return kExitOk;
}

int cmd_cells(const JobConfig& config) {
    std::vector<InstanceResult> results;
    const bool json = config.format == "json";
    const bool multi = instances_of(config).size() > 1;
    const int status =
        run_instances(config, results, [&](const Instance& inst, InstanceResult& out) {
            const CellIndex index =
                enumerate_cells(make_surface(inst.g, inst.n), inst.m, config.cap);
            if (json) {
                if (multi) {
                    ordered_json record = ordered_json::object();
                    record["genus"] = inst.g;
                    record["boundaries"] = inst.n;
                    record["points"] = inst.m;
                    record["cells"] = cells_record(index);
                    out.body = record.dump();
                } else {
                    out.body = cells_record(index).dump();
                }
            } else {
                out.body = "# " + instance_tag(inst) + "\n";
                for (int d = index.min_dim(); d <= index.max_dim(); ++d)
                    for (const CellTuple& t : index.cells(d)) out.body += t.to_string() + "\n";
            }
        });
    if (status != kExitOk)
        return status;
    return finish(config, results, json, false);
}

int cmd_betti(const JobConfig& config) {
    const BettiCache cache;
    std::vector<InstanceResult> results;
    const bool json = config.format == "json";
    const bool csv = config.format == "csv";
    const int status =
        run_instances(config, results, [&](const Instance& inst, InstanceResult& out) {
            const BettiTable table = betti_cached(cache, inst, config.cap);
            if (json)
                out.body = betti_record(table).dump();
            else if (csv)
                append_betti_csv(out.body, table);
            else
                out.body = betti_text(table);
        });
    if (status != kExitOk)
        return status;
    if (csv) {
        std::string payload = std::string(kBettiCsvHeader) + "\n";
        for (const InstanceResult& r : results) payload += r.body;
        return emit(config, payload);
    }
    return finish(config, results, json, false);
}

int cmd_predict(const JobConfig& config) {
    std::vector<InstanceResult> results;
    const bool json = config.format == "json";
    const bool csv = config.format == "csv";
    const int status =
        run_instances(config, results, [&](const Instance& inst, InstanceResult& out) {
            const SurfaceSpec surface = make_surface(inst.g, inst.n);
            const auto open = predicted_open(surface, inst.m);
            if (json)
                out.body = predicted_record(surface, inst.m, open).dump();
            else if (csv)
                append_predicted_csv(out.body, surface, inst.m, open);
            else
                out.body = predicted_text(surface, inst.m, open);
        });
    if (status != kExitOk)
        return status;
    if (csv) {
        std::string payload = std::string(kBettiCsvHeader) + "\n";
        for (const InstanceResult& r : results) payload += r.body;
        return emit(config, payload);
    }
    return finish(config, results, json, false);
}

int cmd_compare(const JobConfig& config) {
    const BettiCache cache;
    std::vector<InstanceResult> results;
    const bool json = config.format == "json";
    const bool csv = config.format == "csv";
    const int status =
        run_instances(config, results, [&](const Instance& inst, InstanceResult& out) {
            const BettiTable table = betti_cached(cache, inst, config.cap);
            const auto predicted = predicted_open(table.surface, inst.m);
            if (json) {
                out.body = compare_record(table, predicted).dump();
                out.pass = table.open == predicted;
                if (!out.pass)
                    out.first_fail = instance_tag(inst) + " compare";
            } else if (csv) {
                append_table_csv(out.body, table, predicted);
                out.pass = table.open == predicted;
                if (!out.pass)
                    out.first_fail = instance_tag(inst) + " compare";
            } else {
                Report report;
                for (int q = 0; q <= inst.m; ++q) {
                    const std::size_t b = table.open_at(q);
                    const std::size_t p = predicted[static_cast<std::size_t>(q)];
                    report.add("compare q=" + std::to_string(q) + " betti=" +
                                   std::to_string(b) + " predicted=" + std::to_string(p),
                               b == p);
                }
                render_report(inst, report, out);
            }
        });
    if (status != kExitOk)
        return status;
    if (csv) {
        std::string payload = std::string(kTableCsvHeader) + "\n";
        for (const InstanceResult& r : results) payload += r.body;
        const int emitted = emit(config, payload);
        if (emitted != kExitOk)
            return emitted;
        for (const InstanceResult& r : results)
            if (!r.pass) {
                std::cerr << "first failing check: " << r.first_fail << "\n";
                return kExitVerifyFail;
            }
        return kExitOk;
    }
    return finish(config, results, json, true);
}

int cmd_table(const JobConfig& config) {
    const BettiCache cache;
    std::vector<InstanceResult> results;
    const bool json = config.format == "json";
    const bool csv = config.format == "csv";
    const int status =
        run_instances(config, results, [&](const Instance& inst, InstanceResult& out) {
            const BettiTable table = betti_cached(cache, inst, config.cap);
            const auto predicted = predicted_open(table.surface, inst.m);
            if (json) {
                ordered_json record = betti_record(table);
                record["predicted_open"] = predicted;
                record["match"] = table.open == predicted;
                out.body = record.dump();
            } else if (csv) {
                append_table_csv(out.body, table, predicted);
            } else {
                for (int q = 0; q <= inst.m; ++q) {
                    const std::size_t b = table.open_at(q);
                    const std::size_t p = predicted[static_cast<std::size_t>(q)];
                    out.body += std::to_string(inst.g) + " " + std::to_string(inst.n) + " " +
                                std::to_string(inst.m) + " " + std::to_string(q) + " " +
                                std::to_string(b) + " " + std::to_string(p) + " " +
                                (b == p ? "true" : "false") + "\n";
                }
            }
        });
    if (status != kExitOk)
        return status;
    if (json) {
        std::vector<std::string> records;
        for (const InstanceResult& r : results) records.push_back(r.body);
        return emit(config, join_json(records));
    }
    std::string payload =
        csv ? std::string(kTableCsvHeader) + "\n" : std::string("g n m q betti predicted match\n");
    for (const InstanceResult& r : results) payload += r.body;
    return emit(config, payload);
}

const std::set<std::string> kAllChecks = {"d-squared", "cycles",  "basis",      "stratum",
                                          "collapse",  "compare", "pushforward"};

int cmd_verify(const JobConfig& config) {
    std::vector<InstanceResult> results;
    const bool json = config.format == "json";
    const std::set<std::string>& checks = config.checks;
    const int status =
        run_instances(config, results, [&](const Instance& inst, InstanceResult& out) {
            const SurfaceSpec surface = make_surface(inst.g, inst.n);
            Report report;
            if (checks.count("d-squared"))
                report.append(verify_d_squared(build_complex(surface, inst.m, config.cap)));
            if (checks.count("basis"))
                report.append(verify_basis(surface, inst.m, config.cap));
            else if (checks.count("cycles"))
                report.append(verify_cycles(surface, inst.m));
            if (checks.count("stratum"))
                for (int p = 0; p <= inst.m; ++p)
                    report.append(verify_stratum_isomorphism(surface, inst.m, p));
            if (checks.count("collapse"))
                report.append(verify_e1_collapse(surface, inst.m, config.cap));
            if (checks.count("compare"))
                report.append(compare(surface, inst.m, config.cap));
            if (checks.count("pushforward"))
                report.append(verify_pushforward(surface, inst.m));
            if (json) {
                out.body = report_json(inst, report).dump();
                out.pass = report.all_pass();
                if (!out.pass)
                    for (const Check& c : report.checks)
                        if (!c.pass) {
                            out.first_fail = instance_tag(inst) + " " + c.label;
                            break;
                        }
            } else {
                render_report(inst, report, out);
            }
        });
    if (status != kExitOk)
        return status;
    return finish(config, results, json, true);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cellular homology of configuration spaces of surfaces with boundary"};
    app.require_subcommand(1);

    JobConfig config;
    std::string genus_text;
    std::string points_text;
    std::string checks_text;
    bool filtration_only = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-g,--genus", genus_text, "genus, a value or a range a..b")->required();
        cmd->add_option("-n,--boundaries", config.boundaries, "number of boundary curves")
            ->default_val(1);
        cmd->add_option("-m,--points", points_text, "number of points, a value or a range a..b")
            ->required();
        cmd->add_option("--format", config.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->default_val("text");
        cmd->add_option("-o,--out", config.out_path, "write output to a file");
        cmd->add_option("--cap", config.cap, "cell count guard")->default_val(kDefaultCellCap);
        cmd->add_option("--jobs", config.jobs, "worker threads for sweeps")->default_val(1);
        return cmd;
    };

    CLI::App* cells_cmd = add_common(app.add_subcommand("cells", "list cells of the complex"));
    CLI::App* betti_cmd = add_common(app.add_subcommand("betti", "computed Betti tables"));
    CLI::App* predict_cmd =
        add_common(app.add_subcommand("predict", "Betti tables from the monomial count"));
    CLI::App* compare_cmd =
        add_common(app.add_subcommand("compare", "computed against predicted tables"));
    CLI::App* table_cmd =
        add_common(app.add_subcommand("table", "sweep with computed and predicted columns"));
    CLI::App* verify_cmd =
        add_common(app.add_subcommand("verify", "run structural verification suites"));
    verify_cmd->add_option("--checks", checks_text,
                           "comma-separated subset of d-squared,cycles,basis,stratum,"
                           "collapse,compare,pushforward");
    verify_cmd->add_flag("--filtration", filtration_only,
                         "shorthand for --checks stratum,collapse");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        config.genus = parse_range(genus_text);
        config.points = parse_range(points_text);
        if (config.boundaries < 1)
            throw std::invalid_argument("need at least one boundary curve");
        if (config.cap < 1)
            throw std::invalid_argument("cap must be at least 1");
        if (config.jobs < 1)
            throw std::invalid_argument("jobs must be at least 1");

        config.checks = kAllChecks;
        if (filtration_only)
            config.checks = {"stratum", "collapse"};
        if (!checks_text.empty()) {
            std::set<std::string> chosen;
            std::stringstream ss(checks_text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!kAllChecks.count(item))
                    throw std::invalid_argument("unknown check: " + item);
                chosen.insert(item);
            }
            if (filtration_only) {
                chosen.insert("stratum");
                chosen.insert("collapse");
            }
            config.checks = std::move(chosen);
        }
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cells_cmd->parsed())
            return cmd_cells(config);
        if (betti_cmd->parsed())
            return cmd_betti(config);
        if (predict_cmd->parsed())
            return cmd_predict(config);
        if (compare_cmd->parsed())
            return cmd_compare(config);
        if (table_cmd->parsed())
            return cmd_table(config);
        if (verify_cmd->parsed())
            return cmd_verify(config);
    } catch (const ResourceLimitError& e) {
        std::cerr << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
