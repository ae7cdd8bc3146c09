#pragma once

#include <string>
#include <vector>

#include "kreweras/rat.hpp"

namespace kreweras {

/// Dense dynamic-programming table for Kreweras walks in the quarter plane
/// with unit steps west, south, and the diagonal north-east step.
/// table(n, i, j) is the exact number of n-step walks from the origin
/// ending at (i, j); every count is a big integer.
class WalkTable {
public:
    explicit WalkTable(int max_steps);

    int max_steps() const { return max_steps_; }
    const Int& count(int n, int i, int j) const;

private:
    int max_steps_;
    int side_;                  // spatial extent: coordinates run over [0, side_)
    std::vector<Int> data_;     // layer-major, then row-major in i
    Int zero_;
    size_t idx(int n, int i, int j) const {
        return (static_cast<size_t>(n) * side_ + i) * side_ + j;
    }
};

/// Number of n-step Kreweras walks from the origin back to the origin.
Int kreweras_count(const WalkTable& table, int n);

/// Number of n-step walks from the origin ending on the x-axis at (i, 0).
Int axis_count(const WalkTable& table, int n, int i);

Int catalan(int n);

/// Walks with unit N/S/E/W steps confined to the quarter plane, from the
/// origin back to the origin in 2n steps, computed by dynamic programming.
Int square_lattice_count(int n);

/// CSV rows "n,count" for excursion counts a_{0,0}(3n), n = 0..max_n.
std::string excursion_csv(const WalkTable& table, int max_n);

}  // namespace kreweras
