#ifndef WILDSIM_GRID_HPP
#define WILDSIM_GRID_HPP

#include <cassert>
#include <cstdint>
#include <vector>

namespace wildsim {

struct Cell {
    int x = 0;
    int y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

// Chebyshev (king-move) distance; the movement and footprint metric.
inline int chebyshev(Cell a, Cell b) {
    const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
    const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
    return dx > dy ? dx : dy;
}

struct CellRect {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0; // inclusive corners

    bool contains(Cell c) const {
        return c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1;
    }
};

// Row-major dense grid field. Dimensions are fixed at construction.
template <typename T>
class Field {
public:
    Field() = default;
    Field(int width, int height, T fill = T{})
        : width_(width), height_(height),
          values_(static_cast<std::size_t>(width) * height, fill) {}

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return values_.size(); }

    bool in_bounds(Cell c) const {
        return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_;
    }

    int index_of(Cell c) const {
        assert(in_bounds(c));
        return c.y * width_ + c.x;
    }
    Cell cell_of(int index) const {
        return Cell{index % width_, index / width_};
    }

    T& at(Cell c) { return values_[static_cast<std::size_t>(index_of(c))]; }
    const T& at(Cell c) const {
        return values_[static_cast<std::size_t>(index_of(c))];
    }
    T& at(int index) { return values_[static_cast<std::size_t>(index)]; }
    const T& at(int index) const {
        return values_[static_cast<std::size_t>(index)];
    }

    auto begin() { return values_.begin(); }
    auto end() { return values_.end(); }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    void fill(const T& v) { values_.assign(values_.size(), v); }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<T> values_;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

} // namespace wildsim

#endif
