#ifndef WILDSIM_WORLD_HPP
#define WILDSIM_WORLD_HPP

#include "wildsim/grid.hpp"
#include "wildsim/rng.hpp"

#include <optional>
#include <vector>

namespace wildsim {

enum class BurnState : std::uint8_t { Unburned, Burning, Burned };

enum class AnomalyKind : std::uint8_t { SignalNoise, NonFireHeat };

struct AnomalySource {
    Cell cell;
    double magnitude = 0.0;
    int start_step = 0;
    int end_step = 0; // inclusive
    AnomalyKind kind = AnomalyKind::NonFireHeat;
};

struct IgnitionEvent {
    int fire_id = 0; // 1-based; 0 means "no fire" in the per-cell field
    Cell cell;
    int ignition_step = 0;
    std::optional<int> detection_step;
    std::optional<int> alert_step;
};

struct SpreadParams {
    double wind_coeff = 1.0;     // alpha1
    double fuel_coeff = 2.0;     // alpha2
    double humidity_coeff = 6.0; // alpha3
    int burn_duration = 10;      // steps a cell stays Burning
    Vec2 wind;                   // global, cells/step
};

struct WorldParams {
    int width = 100;
    int height = 100;
    SpreadParams spread;
    double ambient_temperature = 20.0;
    double burning_temperature_boost = 80.0;
    // Smooth random environment fields: a coarse uniform lattice upsampled
    // bilinearly. lattice = number of lattice cells across each axis.
    int fuel_lattice = 10;
    double fuel_min = 0.2, fuel_max = 1.0;
    int humidity_lattice = 10;
    double humidity_min = 0.1, humidity_max = 0.9;
};

struct FireStepDelta {
    std::vector<Cell> ignited;
    std::vector<Cell> burned_out;
};

// Logistic spread probability sigma(a1*wind + a2*fuel - a3*humidity).
double spread_probability(const SpreadParams& p, double wind_alignment,
                          double fuel, double humidity);

// Scalar projection of the wind vector onto the neighbor->cell direction,
// clamped to [-1, 1]. dx, dy in {-1, 0, 1}.
double wind_alignment(const Vec2& wind, int dx, int dy);

class GridWorld {
public:
    // Generates fuel/humidity fields from the rng (consumes a fixed number
    // of draws so world streams stay aligned across policies).
    GridWorld(const WorldParams& params, Rng& rng);

    // Explicit fields, for tests and small scenarios.
    GridWorld(const WorldParams& params, Field<double> fuel,
              Field<double> humidity);

    int width() const { return fuel_.width(); }
    int height() const { return fuel_.height(); }
    int cell_count() const { return width() * height(); }
    int step() const { return step_; }
    const WorldParams& params() const { return params_; }

    bool in_bounds(Cell c) const { return fuel_.in_bounds(c); }

    double fuel(Cell c) const { return fuel_.at(c); }
    double humidity(Cell c) const { return humidity_.at(c); }
    BurnState burn_state(Cell c) const { return burn_.at(c); }
    int fire_id_at(Cell c) const { return fire_id_.at(c); }

    // True temperature: ambient + burning boost + active non-fire heat.
    double temperature(Cell c) const;
    // Additive reading corruption from active SignalNoise sources; applied
    // by sensors, never part of the true temperature.
    double signal_noise(Cell c) const;
    bool anomaly_active_at(Cell c) const;

    const std::vector<IgnitionEvent>& ignitions() const { return ignitions_; }
    std::vector<IgnitionEvent>& ignitions() { return ignitions_; }
    const std::vector<AnomalySource>& anomalies() const { return anomalies_; }
    int burning_count() const { return static_cast<int>(burning_.size()); }
    const std::vector<int>& burning_cells() const { return burning_; }

    // Moves the clock to `t` (must be current step or current+1) and applies
    // anomaly interval boundaries. Call once per simulation step before any
    // other world mutation.
    void begin_step(int t);

    // One synchronous cellular-automaton update: spread trials against the
    // current burning set, then burn-down. Returns exactly the cells whose
    // state changed.
    FireStepDelta step_fire(Rng& rng);

    // Ignites an unburned cell; returns the logged event, or nullopt if the
    // cell is already Burning/Burned.
    std::optional<IgnitionEvent> spawn_ignition(Cell c);

    // Picks an unburned cell weighted by (fuel*(1-humidity))^2 and ignites
    // it. Returns nullopt when no ignitable cell remains.
    std::optional<IgnitionEvent> spawn_random_ignition(Rng& rng);

    // Registers an anomaly source; rejects intervals outside [0, horizon]
    // or with start > end or magnitude <= 0.
    bool inject_anomaly(const AnomalySource& src, int horizon);

private:
    void apply_anomaly_boundaries(int t);

    WorldParams params_;
    Field<double> fuel_;
    Field<double> humidity_;
    Field<BurnState> burn_;
    Field<int> burn_timer_;
    Field<int> fire_id_;
    Field<double> anomaly_heat_;
    Field<double> signal_noise_;
    std::vector<int> burning_; // indices, kept sorted
    std::vector<AnomalySource> anomalies_;
    std::vector<std::uint8_t> anomaly_applied_;
    std::vector<IgnitionEvent> ignitions_;
    int step_ = 0;
};

// Generates a smooth field by bilinear upsampling of a uniform lattice.
Field<double> generate_smooth_field(int width, int height, int lattice,
                                    double lo, double hi, Rng& rng);

} // namespace wildsim

#endif
