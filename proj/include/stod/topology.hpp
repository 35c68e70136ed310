#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stod/matrix.hpp"

namespace stod {

enum class SensorKind { Level, Flow, Valve, Pump, Chemical };

const char* to_string(SensorKind k);
SensorKind sensor_kind_from(const std::string& s);

struct SensorDef {
  std::string id;
  int stage = 0;  // 1..P
  SensorKind kind = SensorKind::Level;
};

// Immutable after load; safe to share across threads.
struct WtnTopology {
  std::vector<SensorDef> sensors;                    // file order
  std::vector<std::pair<int, int>> edges;            // indices into sensors
  std::unordered_map<std::string, int> index_by_id;  // id -> sensor index

  std::size_t sensor_count() const { return sensors.size(); }
  int stage_count() const;
  int index_of(const std::string& id) const;  // -1 if unknown
  int degree(int sensor) const;

  // throws std::runtime_error on any invariant violation
  void validate() const;
};

// Text format: `sensor <id> <stage> <kind>`, `edge <id> <id>`, `#` comments.
WtnTopology load_topology(const std::string& path);
WtnTopology parse_topology(const std::string& text, const std::string& origin = "<string>");

// N x N binary symmetric matrix, zero diagonal.
Matrix build_adjacency(const WtnTopology& topo);

}  // namespace stod
