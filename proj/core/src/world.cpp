#include "wildsim/world.hpp"

#include <algorithm>
#include <cmath>

namespace wildsim {

namespace {
// Moore neighborhood, fixed scan order (row-major offsets).
constexpr int kNeighborDx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr int kNeighborDy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};

inline double logistic(double x) {
    return 1.0 / (1.0 + std::exp(-x));
}
} // namespace

double wind_alignment(const Vec2& wind, int dx, int dy) {
    const double norm = std::sqrt(static_cast<double>(dx * dx + dy * dy));
    if (norm == 0.0) return 0.0;
    const double proj = (wind.x * dx + wind.y * dy) / norm;
    return std::clamp(proj, -1.0, 1.0);
}

double spread_probability(const SpreadParams& p, double alignment, double fuel,
                          double humidity) {
    return logistic(p.wind_coeff * alignment + p.fuel_coeff * fuel -
                    p.humidity_coeff * humidity);
}

Field<double> generate_smooth_field(int width, int height, int lattice,
                                    double lo, double hi, Rng& rng) {
    const int lw = std::max(1, lattice);
    Field<double> nodes(lw + 1, lw + 1);
    for (auto& v : nodes) v = rng.uniform_real(lo, hi);

    Field<double> out(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double fx = (width <= 1) ? 0.0
                                           : static_cast<double>(x) * lw /
                                                 (width - 1);
            const double fy = (height <= 1) ? 0.0
                                            : static_cast<double>(y) * lw /
                                                  (height - 1);
            const int ix = std::min(static_cast<int>(fx), lw - 1);
            const int iy = std::min(static_cast<int>(fy), lw - 1);
            const double tx = fx - ix;
            const double ty = fy - iy;
            const double a = nodes.at(Cell{ix, iy});
            const double b = nodes.at(Cell{ix + 1, iy});
            const double c = nodes.at(Cell{ix, iy + 1});
            const double d = nodes.at(Cell{ix + 1, iy + 1});
            out.at(Cell{x, y}) = (1 - ty) * ((1 - tx) * a + tx * b) +
                                 ty * ((1 - tx) * c + tx * d);
        }
    }
    return out;
}

GridWorld::GridWorld(const WorldParams& params, Rng& rng)
    : GridWorld(params,
                generate_smooth_field(params.width, params.height,
                                      params.fuel_lattice, params.fuel_min,
                                      params.fuel_max, rng),
                generate_smooth_field(params.width, params.height,
                                      params.humidity_lattice,
                                      params.humidity_min, params.humidity_max,
                                      rng)) {}

GridWorld::GridWorld(const WorldParams& params, Field<double> fuel,
                     Field<double> humidity)
    : params_(params), fuel_(std::move(fuel)), humidity_(std::move(humidity)),
      burn_(params.width, params.height, BurnState::Unburned),
      burn_timer_(params.width, params.height, 0),
      fire_id_(params.width, params.height, 0),
      anomaly_heat_(params.width, params.height, 0.0),
      signal_noise_(params.width, params.height, 0.0) {}

double GridWorld::temperature(Cell c) const {
    double t = params_.ambient_temperature + anomaly_heat_.at(c);
    if (burn_.at(c) == BurnState::Burning) {
        t += params_.burning_temperature_boost;
    }
    return t;
}

double GridWorld::signal_noise(Cell c) const {
    return signal_noise_.at(c);
}

bool GridWorld::anomaly_active_at(Cell c) const {
    return anomaly_heat_.at(c) != 0.0 || signal_noise_.at(c) != 0.0;
}

void GridWorld::begin_step(int t) {
    step_ = t;
    apply_anomaly_boundaries(t);
}

void GridWorld::apply_anomaly_boundaries(int t) {
    for (std::size_t i = 0; i < anomalies_.size(); ++i) {
        const auto& src = anomalies_[i];
        const bool want = src.start_step <= t && t <= src.end_step;
        if (want == static_cast<bool>(anomaly_applied_[i])) continue;
        auto& field = (src.kind == AnomalyKind::NonFireHeat) ? anomaly_heat_
                                                             : signal_noise_;
        field.at(src.cell) += want ? src.magnitude : -src.magnitude;
        anomaly_applied_[i] = want ? 1 : 0;
    }
}

FireStepDelta GridWorld::step_fire(Rng& rng) {
    FireStepDelta delta;

    // Candidate cells: unburned neighbors of the burning set, deduped and
    // scanned in ascending index order so draw order is reproducible.
    std::vector<int> candidates;
    candidates.reserve(burning_.size() * 4);
    for (int bi : burning_) {
        const Cell b = burn_.cell_of(bi);
        for (int n = 0; n < 8; ++n) {
            const Cell c{b.x + kNeighborDx[n], b.y + kNeighborDy[n]};
            if (!in_bounds(c) || burn_.at(c) != BurnState::Unburned) continue;
            candidates.push_back(burn_.index_of(c));
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    // One independent Bernoulli trial per burning neighbor.
    std::vector<std::pair<int, int>> ignite; // (cell index, inherited fire id)
    for (int ci : candidates) {
        const Cell c = burn_.cell_of(ci);
        bool ignited = false;
        int inherited = 0;
        for (int n = 0; n < 8; ++n) {
            const Cell nb{c.x + kNeighborDx[n], c.y + kNeighborDy[n]};
            if (!in_bounds(nb) || burn_.at(nb) != BurnState::Burning) continue;
            // Direction of spread is neighbor -> candidate cell.
            const double align =
                wind_alignment(params_.spread.wind, c.x - nb.x, c.y - nb.y);
            const double p = spread_probability(params_.spread, align,
                                                fuel_.at(c), humidity_.at(c));
            if (rng.bernoulli(p)) {
                ignited = true;
                const int fid = fire_id_.at(nb);
                if (inherited == 0 || (fid != 0 && fid < inherited)) {
                    inherited = fid;
                }
            }
        }
        if (ignited) ignite.emplace_back(ci, inherited);
    }

    // Burn-down of the current burning set.
    std::vector<int> still_burning;
    still_burning.reserve(burning_.size());
    for (int bi : burning_) {
        if (--burn_timer_.at(bi) <= 0) {
            burn_.at(bi) = BurnState::Burned;
            delta.burned_out.push_back(burn_.cell_of(bi));
        } else {
            still_burning.push_back(bi);
        }
    }
    burning_ = std::move(still_burning);

    for (const auto& [ci, fid] : ignite) {
        burn_.at(ci) = BurnState::Burning;
        burn_timer_.at(ci) = params_.spread.burn_duration;
        fire_id_.at(ci) = fid;
        burning_.push_back(ci);
        delta.ignited.push_back(burn_.cell_of(ci));
    }
    std::sort(burning_.begin(), burning_.end());
    return delta;
}

std::optional<IgnitionEvent> GridWorld::spawn_ignition(Cell c) {
    if (!in_bounds(c) || burn_.at(c) != BurnState::Unburned) {
        return std::nullopt;
    }
    IgnitionEvent ev;
    ev.fire_id = static_cast<int>(ignitions_.size()) + 1;
    ev.cell = c;
    ev.ignition_step = step_;
    ignitions_.push_back(ev);

    burn_.at(c) = BurnState::Burning;
    burn_timer_.at(c) = params_.spread.burn_duration;
    fire_id_.at(c) = ev.fire_id;
    burning_.insert(
        std::lower_bound(burning_.begin(), burning_.end(), burn_.index_of(c)),
        burn_.index_of(c));
    return ev;
}

std::optional<IgnitionEvent> GridWorld::spawn_random_ignition(Rng& rng) {
    // Ignition likelihood follows dryness and fuel load.
    double total = 0.0;
    std::vector<double> cumulative(static_cast<std::size_t>(cell_count()));
    for (int i = 0; i < cell_count(); ++i) {
        double w = 0.0;
        if (burn_.at(i) == BurnState::Unburned) {
            const double base = fuel_.at(i) * (1.0 - humidity_.at(i));
            w = base * base;
        }
        total += w;
        cumulative[static_cast<std::size_t>(i)] = total;
    }
    if (total <= 0.0) return std::nullopt;
    const double pick = rng.u01() * total;
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), pick);
    const int idx = static_cast<int>(it - cumulative.begin());
    return spawn_ignition(burn_.cell_of(std::min(idx, cell_count() - 1)));
}

bool GridWorld::inject_anomaly(const AnomalySource& src, int horizon) {
    if (!in_bounds(src.cell)) return false;
    if (src.magnitude <= 0.0) return false;
    if (src.start_step > src.end_step) return false;
    if (src.start_step < 0 || src.end_step > horizon) return false;
    anomalies_.push_back(src);
    anomaly_applied_.push_back(0);
    // A source whose interval covers the current step becomes active now.
    if (src.start_step <= step_ && src.end_step >= step_) {
        auto& field = (src.kind == AnomalyKind::NonFireHeat) ? anomaly_heat_
                                                             : signal_noise_;
        field.at(src.cell) += src.magnitude;
        anomaly_applied_.back() = 1;
    }
    return true;
}

} // namespace wildsim
