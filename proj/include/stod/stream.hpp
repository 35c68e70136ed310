#pragma once

#include <string>
#include <vector>

#include "stod/matrix.hpp"
#include "stod/topology.hpp"

namespace stod {

// Timestamped multivariate sensor records with per-record attack labels.
// Record spacing is one dimensionless tick; timestamps are 0..T-1.
struct SensorStream {
  Matrix values;           // T x N
  std::vector<int> labels; // length T, 0/1

  std::size_t records() const { return values.rows(); }
  std::size_t sensor_count() const { return values.cols(); }
};

// Maps an external CSV layout onto the topology's sensor order.
// File format, one directive per line, `#` comments:
//   label <column-name>
//   attack_value <string>        (repeatable; cell equal to any -> label 1)
//   time <column-name>           (optional; column is ignored)
//   map <sensor-id> <column-name>
// Unmapped sensors default to the column named like the sensor id.
struct StreamColumnMap {
  std::string label_column;
  std::vector<std::string> attack_values;
  std::string time_column;
  std::vector<std::pair<std::string, std::string>> sensor_columns;
};

StreamColumnMap load_stream_map(const std::string& path);

// Native format: header `t,<sensor_id>...,label`, sensors in topology order,
// doubles printed with 17 significant digits (exact round-trip).
void write_stream(const SensorStream& s, const WtnTopology& topo, const std::string& path);

SensorStream read_stream(const std::string& path, const WtnTopology& topo);
SensorStream read_stream_mapped(const std::string& path, const WtnTopology& topo,
                                const StreamColumnMap& map);

}  // namespace stod
