#ifndef WILDSIM_SENSING_HPP
#define WILDSIM_SENSING_HPP

#include "wildsim/grid.hpp"
#include "wildsim/rng.hpp"
#include "wildsim/world.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace wildsim {

enum class Modality : std::uint8_t { ThermalUav, GroundIot, Satellite };

const char* modality_name(Modality m);

struct Observation {
    Modality modality = Modality::ThermalUav;
    int sensor_id = 0;      // UAV id, ground sensor id, or satellite region id
    Cell cell;              // target cell (region center for Satellite)
    int region_id = -1;     // Satellite only
    double reading = 0.0;   // heat value
    bool detection = false;
    int emitted_step = 0;
    int delivered_step = 0;
    double truth = 0.0;     // ground-truth temperature, harness log only
};

struct SensorParams {
    double thermal_detect_prob = 0.85;
    double thermal_anomaly_fpr = 0.3; // false detection at active anomaly cells
    int footprint_radius = 2;         // square footprint half-width

    int ground_spacing = 10;
    double ground_noise_std = 2.0;
    double ground_threshold = 60.0;

    int satellite_period = 25;
    int satellite_latency = 5; // delivery delay bound (and actual delay)
    int satellite_tiles = 10;  // tiles per axis
    double satellite_threshold = 25.0;
};

struct SenseResult {
    std::vector<Observation> observations;
    std::vector<int> covered; // cell indices with a (possibly negative) look
};

// Per-run fixed ground sensor layout: uniform grid, offset half a spacing.
std::vector<Cell> ground_sensor_layout(int width, int height, int spacing);

// Attacker-controlled replacement readings, keyed by ground sensor id.
using SpoofOverrides = std::unordered_map<int, double>;

// Thermal sweep of one UAV footprint. Emits an observation per detection;
// `covered` reports every footprint cell for negative belief evidence.
SenseResult sense_thermal(int uav_id, Cell uav_pos, const GridWorld& world,
                          const SensorParams& params, Rng& rng);

// All ground sensors report every step: true temperature plus Gaussian
// noise plus any signal-noise corruption, thresholded into a detection
// flag. Spoofed sensors report the attacker value instead; the truth field
// always carries the real temperature.
SenseResult sense_ground(const std::vector<Cell>& sensors,
                         const GridWorld& world, const SensorParams& params,
                         Rng& rng, const SpoofOverrides* spoof = nullptr);

// Regional mean-temperature summaries on revisit steps; delivery is delayed
// by the configured satellite latency.
SenseResult sense_satellite(const GridWorld& world, const SensorParams& params,
                            Rng& rng);

// Tiling helpers shared by satellite sensing and belief updates.
struct RegionTiling {
    int tiles = 10;
    int width = 100, height = 100;

    int region_of(Cell c) const;
    CellRect region_rect(int region) const;
    int region_count() const { return tiles * tiles; }
};

} // namespace wildsim

#endif
