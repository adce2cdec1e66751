#pragma once

#include "topomeasure/cellset.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace topomeasure {

using Region = CellSet;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SpaceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Cell {
    std::string id;
    int dim = 0;
    std::string label;
};

struct ComplementComponent {
    Region cells;
    bool bounded = false;
};

// Face poset with the Alexandrov topology: open = up-closed, closed = down-closed.
// An optional minimal cell omega plays the point at infinity; X is every other cell.
class FiniteSpace {
public:
    FiniteSpace(std::string name, std::vector<Cell> cells,
                std::vector<std::pair<std::size_t, std::size_t>> covers,
                std::optional<std::size_t> infinity = std::nullopt,
                std::map<std::string, Region> named = {});

    const std::string& name() const { return name_; }
    std::size_t cell_count() const { return cells_.size(); }
    const Cell& cell(std::size_t i) const { return cells_[i]; }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
    std::optional<std::size_t> infinity() const { return infinity_; }
    bool compact() const { return !infinity_; }
    const std::map<std::string, Region>& named_regions() const { return named_; }

    std::optional<std::size_t> find(const std::string& id) const;
    std::size_t index(const std::string& id) const;

    // All cells except omega.
    const Region& all() const { return all_; }
    // Cells above omega; empty for compact spaces. Bounded means disjoint from these.
    const Region& frontier() const { return frontier_; }
    // Down-set and up-set in X-hat, each containing the cell itself.
    const Region& down(std::size_t i) const { return down_[i]; }
    const Region& up(std::size_t i) const { return up_[i]; }
    // Cells comparable to i, excluding omega.
    const Region& neighbours(std::size_t i) const { return nbr_[i]; }
    // Cells of X with no cell above omega over them; every bounded open set lies here.
    const Region& core() const { return core_; }

    Region down_closure(const Region& r) const;
    Region up_closure(const Region& r) const;

    Region closure(const Region& r) const { return down_closure(r) & all_; }
    Region interior(const Region& r) const;
    Region complement(const Region& r) const { return all_ - r; }

    bool is_open(const Region& r) const { return up_closure(r) == r; }
    bool is_closed(const Region& r) const { return closure(r) == r; }
    bool is_bounded(const Region& r) const { return !r.intersects(frontier_); }
    bool is_compact(const Region& r) const { return is_closed(r) && is_bounded(r); }
    bool is_connected(const Region& r) const;

    std::vector<Region> components(const Region& r) const;
    std::vector<ComplementComponent> complement_components(const Region& r) const;

    // Minimal cells of X; the points that can be marked.
    bool is_vertex(std::size_t i) const { return (down_[i] & all_) == Region::single(i); }

    // The compact space X-hat with omega kept as an ordinary cell.
    FiniteSpace compactification() const;

    // Comma-separated cell ids, or @label / @name / @all references, joined by commas.
    Region parse_region(const std::string& literal) const;
    std::string format_region(const Region& r) const;

    std::string to_text() const;

private:
    std::string name_;
    std::vector<Cell> cells_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::optional<std::size_t> infinity_;
    std::map<std::string, Region> named_;
    std::map<std::string, std::size_t> by_id_;
    std::vector<Region> down_, up_, nbr_;
    Region all_, frontier_, core_;
};

FiniteSpace parse_space(const std::string& text);

FiniteSpace build_interval(int n);
FiniteSpace build_circle(int n);
FiniteSpace build_line_window(int n);
FiniteSpace build_disk(int rings);
FiniteSpace build_punctured_disk(int rings);
FiniteSpace build_sphere(int n);
FiniteSpace build_plane_window(int n);
FiniteSpace build_annulus(int n);
FiniteSpace build_strip(int w, int h);

// "name" or "name(a,b)" for the builders above.
FiniteSpace build_named(const std::string& spec);
std::vector<std::string> builtin_space_names();

}  // namespace topomeasure
