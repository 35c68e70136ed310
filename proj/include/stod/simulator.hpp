#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stod/stream.hpp"
#include "stod/topology.hpp"

namespace stod {

enum class Manipulation { Freeze, Offset, Setpoint };

const char* to_string(Manipulation m);
Manipulation manipulation_from(const std::string& s);

// One injected attack. The commanded window [onset, onset+duration) is what
// gets labeled; the manipulation itself is active on
// [onset+delay, onset+delay+duration), so symptoms can lag the label.
struct AttackScenario {
  std::string target_sensor;
  long onset = 0;
  long delay = 0;
  long duration = 1;
  Manipulation manipulation = Manipulation::Freeze;
  double magnitude = 0.0;  // ignored for freeze
};

// Scenario file: one per line,
//   attack <sensor> <onset> <delay> <duration> <manipulation> <magnitude>
std::vector<AttackScenario> load_scenarios(const std::string& path, const WtnTopology& topo);

// Deterministic surrogate plant. Each stage is a tank: the inlet valve
// admits the upstream stage's pumped outflow (a constant source for stage
// 1), the transfer pump empties the tank into the next stage, and both
// run on hysteresis bands over the observed tank level. Flow sensors read
// the resulting edge throughput, dosing pumps cycle with the transfer
// pump, and chemical sensors relax toward a dosing-dependent target. Controls
// consume the *reported* (possibly attacked, never noisy) values, so a
// manipulated sensor or actuator drags its stage and everything
// downstream along with it, while upstream stages are untouched.
//
// noise_std is the per-sensor observation-noise std as a fraction of that
// sensor's own dynamic range over the run (0.01 = 1%). RNG is consumed
// only by observation noise, in (record, sensor) order.
SensorStream simulate(const WtnTopology& topo, const std::vector<AttackScenario>& scenarios,
                      long records, double noise_std, std::uint64_t seed);

}  // namespace stod
