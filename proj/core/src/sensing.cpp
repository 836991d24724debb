#include "wildsim/sensing.hpp"

#include <algorithm>

namespace wildsim {

const char* modality_name(Modality m) {
    switch (m) {
    case Modality::ThermalUav: return "thermal";
    case Modality::GroundIot: return "ground";
    case Modality::Satellite: return "satellite";
    }
    return "?";
}

std::vector<Cell> ground_sensor_layout(int width, int height, int spacing) {
    std::vector<Cell> cells;
    if (spacing <= 0) return cells;
    for (int y = spacing / 2; y < height; y += spacing) {
        for (int x = spacing / 2; x < width; x += spacing) {
            cells.push_back(Cell{x, y});
        }
    }
    return cells;
}

int RegionTiling::region_of(Cell c) const {
    const int rw = (width + tiles - 1) / tiles;
    const int rh = (height + tiles - 1) / tiles;
    return (c.y / rh) * tiles + (c.x / rw);
}

CellRect RegionTiling::region_rect(int region) const {
    const int rw = (width + tiles - 1) / tiles;
    const int rh = (height + tiles - 1) / tiles;
    const int rx = region % tiles;
    const int ry = region / tiles;
    CellRect rect;
    rect.x0 = rx * rw;
    rect.y0 = ry * rh;
    rect.x1 = std::min(width - 1, rect.x0 + rw - 1);
    rect.y1 = std::min(height - 1, rect.y0 + rh - 1);
    return rect;
}

SenseResult sense_thermal(int uav_id, Cell uav_pos, const GridWorld& world,
                          const SensorParams& params, Rng& rng) {
    SenseResult result;
    const int r = params.footprint_radius;
    const int t = world.step();
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
            const Cell c{uav_pos.x + dx, uav_pos.y + dy};
            if (!world.in_bounds(c)) continue;
            result.covered.push_back(c.y * world.width() + c.x);

            bool detected = false;
            if (world.burn_state(c) == BurnState::Burning) {
                detected = rng.bernoulli(params.thermal_detect_prob);
            } else if (world.anomaly_active_at(c)) {
                detected = rng.bernoulli(params.thermal_anomaly_fpr);
            }
            if (!detected) continue;

            Observation obs;
            obs.modality = Modality::ThermalUav;
            obs.sensor_id = uav_id;
            obs.cell = c;
            obs.reading = world.temperature(c) + world.signal_noise(c);
            obs.detection = true;
            obs.emitted_step = t;
            obs.delivered_step = t; // UAVs report immediately
            obs.truth = world.temperature(c);
            result.observations.push_back(obs);
        }
    }
    return result;
}

SenseResult sense_ground(const std::vector<Cell>& sensors,
                         const GridWorld& world, const SensorParams& params,
                         Rng& rng, const SpoofOverrides* spoof) {
    SenseResult result;
    const int t = world.step();
    for (std::size_t i = 0; i < sensors.size(); ++i) {
        const Cell c = sensors[i];
        const double truth = world.temperature(c);
        double reading = truth + world.signal_noise(c);
        if (params.ground_noise_std > 0.0) {
            reading += rng.normal(0.0, params.ground_noise_std);
        }
        if (spoof) {
            if (auto it = spoof->find(static_cast<int>(i));
                it != spoof->end()) {
                reading = it->second;
            }
        }
        Observation obs;
        obs.modality = Modality::GroundIot;
        obs.sensor_id = static_cast<int>(i);
        obs.cell = c;
        obs.reading = reading;
        obs.detection = reading > params.ground_threshold;
        obs.emitted_step = t;
        obs.delivered_step = t;
        obs.truth = truth;
        result.observations.push_back(obs);
        result.covered.push_back(c.y * world.width() + c.x);
    }
    return result;
}

SenseResult sense_satellite(const GridWorld& world,
                            const SensorParams& params, Rng&) {
    SenseResult result;
    const int t = world.step();
    if (params.satellite_period <= 0 || t % params.satellite_period != 0) {
        return result;
    }
    RegionTiling tiling{params.satellite_tiles, world.width(), world.height()};
    for (int region = 0; region < tiling.region_count(); ++region) {
        const CellRect rect = tiling.region_rect(region);
        double sum = 0.0;
        int count = 0;
        for (int y = rect.y0; y <= rect.y1; ++y) {
            for (int x = rect.x0; x <= rect.x1; ++x) {
                sum += world.temperature(Cell{x, y});
                ++count;
            }
        }
        const double mean = count > 0 ? sum / count : 0.0;
        Observation obs;
        obs.modality = Modality::Satellite;
        obs.sensor_id = region;
        obs.region_id = region;
        obs.cell = Cell{(rect.x0 + rect.x1) / 2, (rect.y0 + rect.y1) / 2};
        obs.reading = mean;
        obs.detection = mean > params.satellite_threshold;
        obs.emitted_step = t;
        obs.delivered_step = t + params.satellite_latency;
        obs.truth = mean;
        result.observations.push_back(obs);
    }
    return result;
}

} // namespace wildsim
