#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wgraph/analysis.hpp"
#include "wgraph/colored_graph.hpp"
#include "wgraph/constructions.hpp"
#include "wgraph/embedding.hpp"
#include "wgraph/homomorphism.hpp"
#include "wgraph/search.hpp"
#include "wgraph/threshold.hpp"

namespace wgraph {

/// Identifier written into every report and pinned by schema/wgraph-report.schema.json.
inline constexpr const char* kReportSchema = "wgraph-report/1";

nlohmann::json to_json(const ColoredGraph& g);
nlohmann::json to_json(const Threshold& t);
nlohmann::json to_json(const HomCertificate& c);
nlohmann::json to_json(const HomResult& h);
nlohmann::json to_json(const FreenessResult& f);
nlohmann::json to_json(const StructureReport& s);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json parts_to_json(const PartitionedConstruction& pc);

/// wall time is only included with `timing`, so reports of identical
/// single-threaded runs are byte-identical.
nlohmann::json to_json(const SearchReport& r, bool timing = false);
nlohmann::json to_json(const std::vector<DensityRow>& rows);

/// {"schema": ..., "command": command}
nlohmann::json report_header(const std::string& command);

}  // namespace wgraph
