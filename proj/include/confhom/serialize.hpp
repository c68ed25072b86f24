#ifndef CONFHOM_SERIALIZE_HPP
#define CONFHOM_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "confhom/cells.hpp"
#include "confhom/homology.hpp"
#include "confhom/report.hpp"

namespace confhom {

using ordered_json = nlohmann::ordered_json;

// {"genus":1,"boundaries":1,"points":2,"betti_open":[1,3,3],
//  "betti_compactified":{"2":3,"3":3,"4":1},"cells_by_dim":{"2":3,"3":3,"4":1},
//  "euler":1}
ordered_json betti_record(const BettiTable& table);
BettiTable betti_table_from_record(const ordered_json& record);

// same shape as betti_record without the cell data, tagged "source":"predicted"
ordered_json predicted_record(const SurfaceSpec& surface, int weight,
                              const std::vector<std::size_t>& open);

ordered_json compare_record(const BettiTable& table,
                            const std::vector<std::size_t>& predicted);

ordered_json cells_record(const CellIndex& index);

// text blocks follow the (degree, weight) bigrading convention
std::string betti_text(const BettiTable& table);
std::string predicted_text(const SurfaceSpec& surface, int weight,
                           const std::vector<std::size_t>& open);

inline constexpr const char* kBettiCsvHeader = "g,n,m,q,betti";
inline constexpr const char* kTableCsvHeader = "g,n,m,q,betti,predicted,match";

void append_betti_csv(std::string& out, const BettiTable& table);
void append_predicted_csv(std::string& out, const SurfaceSpec& surface, int weight,
                          const std::vector<std::size_t>& open);
void append_table_csv(std::string& out, const BettiTable& table,
                      const std::vector<std::size_t>& predicted);

} // namespace confhom

#endif
