#include "confhom/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace confhom {

namespace {

ordered_json dim_map(int weight, const std::vector<std::size_t>& values) {
    ordered_json map = ordered_json::object();
    for (int d = weight; d <= 2 * weight; ++d)
        map[std::to_string(d)] = values[static_cast<std::size_t>(d - weight)];
    return map;
}

} // namespace

ordered_json betti_record(const BettiTable& table) {
    ordered_json record = ordered_json::object();
    record["genus"] = table.surface.genus;
    record["boundaries"] = table.surface.boundaries;
    record["points"] = table.weight;
    record["betti_open"] = table.open;
    record["betti_compactified"] = dim_map(table.weight, table.compactified);
    record["cells_by_dim"] = dim_map(table.weight, table.cells_by_dim);
    record["euler"] = table.euler;
    return record;
}

BettiTable betti_table_from_record(const ordered_json& record) {
    BettiTable table;
    table.surface = make_surface(record.at("genus").get<int>(),
                                 record.at("boundaries").get<int>());
    table.weight = record.at("points").get<int>();
    table.open = record.at("betti_open").get<std::vector<std::size_t>>();
    table.euler = record.at("euler").get<long long>();

    const std::size_t slots = static_cast<std::size_t>(table.weight) + 1;
    if (table.open.size() != slots)
        throw std::invalid_argument("betti record: betti_open length mismatch");
    table.compactified.assign(slots, 0);
    table.cells_by_dim.assign(slots, 0);
    for (int d = table.weight; d <= 2 * table.weight; ++d) {
        const std::string key = std::to_string(d);
        const std::size_t slot = static_cast<std::size_t>(d - table.weight);
        table.compactified[slot] = record.at("betti_compactified").at(key).get<std::size_t>();
        table.cells_by_dim[slot] = record.at("cells_by_dim").at(key).get<std::size_t>();
    }
    return table;
}

ordered_json predicted_record(const SurfaceSpec& surface, int weight,
                              const std::vector<std::size_t>& open) {
    // the compactified side is forced by duality
    std::vector<std::size_t> compactified(open.rbegin(), open.rend());
    long long euler = 0;
    for (int d = weight; d <= 2 * weight; ++d) {
        const long long b = static_cast<long long>(compactified[static_cast<std::size_t>(d - weight)]);
        euler += d % 2 == 0 ? b : -b;
    }
    ordered_json record = ordered_json::object();
    record["genus"] = surface.genus;
    record["boundaries"] = surface.boundaries;
    record["points"] = weight;
    record["betti_open"] = open;
    record["betti_compactified"] = dim_map(weight, compactified);
    record["euler"] = euler;
    record["source"] = "predicted";
    return record;
}

ordered_json compare_record(const BettiTable& table,
                            const std::vector<std::size_t>& predicted) {
    ordered_json record = ordered_json::object();
    record["genus"] = table.surface.genus;
    record["boundaries"] = table.surface.boundaries;
    record["points"] = table.weight;
    record["betti_open"] = table.open;
    record["predicted_open"] = predicted;
    record["match"] = table.open == predicted;
    return record;
}

ordered_json cells_record(const CellIndex& index) {
    ordered_json cells = ordered_json::array();
    for (int d = index.min_dim(); d <= index.max_dim(); ++d)
        for (const CellTuple& t : index.cells(d)) {
            ordered_json cell = ordered_json::object();
            cell["l"] = t.line_count();
            cell["x"] = t.lines;
            cell["s"] = t.arcs;
            cells.push_back(std::move(cell));
        }
    return cells;
}

std::string betti_text(const BettiTable& table) {
    std::ostringstream os;
    std::size_t total_cells = 0;
    for (std::size_t c : table.cells_by_dim) total_cells += c;
    os << "g=" << table.surface.genus << " n=" << table.surface.boundaries
       << " m=" << table.weight << " cells=" << total_cells << " euler=" << table.euler
       << '\n';
    os << "degree weight betti\n";
    for (int q = 0; q <= table.weight; ++q)
        os << q << ' ' << table.weight << ' ' << table.open_at(q) << '\n';
    return os.str();
}

std::string predicted_text(const SurfaceSpec& surface, int weight,
                           const std::vector<std::size_t>& open) {
    std::ostringstream os;
    os << "g=" << surface.genus << " n=" << surface.boundaries << " m=" << weight
       << " source=predicted\n";
    os << "degree weight betti\n";
    for (int q = 0; q <= weight; ++q)
        os << q << ' ' << weight << ' ' << open[static_cast<std::size_t>(q)] << '\n';
    return os.str();
}

void append_betti_csv(std::string& out, const BettiTable& table) {
    for (int q = 0; q <= table.weight; ++q) {
        out += std::to_string(table.surface.genus) + ',' +
               std::to_string(table.surface.boundaries) + ',' +
               std::to_string(table.weight) + ',' + std::to_string(q) + ',' +
               std::to_string(table.open_at(q)) + '\n';
    }
}

void append_predicted_csv(std::string& out, const SurfaceSpec& surface, int weight,
                          const std::vector<std::size_t>& open) {
    for (int q = 0; q <= weight; ++q) {
        out += std::to_string(surface.genus) + ',' + std::to_string(surface.boundaries) +
               ',' + std::to_string(weight) + ',' + std::to_string(q) + ',' +
               std::to_string(open[static_cast<std::size_t>(q)]) + '\n';
    }
}

void append_table_csv(std::string& out, const BettiTable& table,
                      const std::vector<std::size_t>& predicted) {
    for (int q = 0; q <= table.weight; ++q) {
        const std::size_t b = table.open_at(q);
        const std::size_t pred = predicted[static_cast<std::size_t>(q)];
        out += std::to_string(table.surface.genus) + ',' +
               std::to_string(table.surface.boundaries) + ',' +
               std::to_string(table.weight) + ',' + std::to_string(q) + ',' +
               std::to_string(b) + ',' + std::to_string(pred) + ',' +
               (b == pred ? "true" : "false") + '\n';
    }
}

} // namespace confhom
