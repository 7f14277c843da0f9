#pragma once

#include <string>
#include <vector>

#include "fronts/coupled.hpp"
#include "fronts/semiwave.hpp"

namespace fronts {

// Deterministic SVG emitters: fixed canvas, fixed formatting, no external
// renderer. Identical inputs produce byte-identical documents.

// g and h against t, with straight reference lines of slope kbar_beta and
// kund_mu from the semi-wave speed table anchored at the first record.
std::string svg_fronts_plot(const std::vector<CoupledRecord>& records,
                            const SpeedTable& table);

// u and v against x for one snapshot.
std::string svg_profile_plot(const Snapshot& snap);

// Phase-diagram heat map: a rows-by-cols grid of cells colored by label.
// Labels: "both", "prey", "predator", "none", "failed".
struct PhaseCell {
    double x, y;          // axis values (for the tick labels)
    std::string label;
};

std::string svg_phase_map(const std::vector<PhaseCell>& cells, int rows, int cols,
                          const std::string& xlabel, const std::string& ylabel);

}  // namespace fronts
