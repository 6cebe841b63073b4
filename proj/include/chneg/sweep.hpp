// Negativity sweeps over parameter grids and completely-positive-region
// mapping for the built-in channel families.
#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "chneg/channelkit.hpp"
#include "chneg/cmatrix.hpp"

namespace chneg {

struct SweepAxis {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 0;  // >= 2
};

/// Evenly spaced axis values including both endpoints.
std::vector<double> axis_values(const SweepAxis& axis);

/// Families: rabi | utheta | alpha | theta_alpha | czprime | czdoubleprime.
struct SweepGrid {
    std::string family;
    std::vector<SweepAxis> axes;
    std::map<std::string, double> fixed;
};

struct SweepRow {
    std::vector<double> params;  // axis values, in axis order
    double eta = 0.0;
};

struct SweepResult {
    std::string family;
    SweepGrid grid;              // echo of the request
    std::vector<std::string> axis_names;
    std::vector<SweepRow> rows;  // row-major in axis order
    std::string timestamp;       // metadata only; never serialized to CSV
};

/// Builds the (coupling, sharp) pair of a channel family at one parameter
/// point.  For the rabi family the sharp is R(phi) when phi is assigned and
/// the Hadamard rotation otherwise.
std::pair<CouplingSpec, AssignmentMap> family_channel(const std::string& family,
                                                      const std::map<std::string, double>& params);

/// Evaluates eta over the grid.  Grid points are independent; evaluation may
/// run on several threads (capped by NEGATIVITY_THREADS) but rows always come
/// back in row-major grid order.
SweepResult run_sweep(const SweepGrid& grid);

/// run_sweep filtered to the completely positive points (eta < eta_tol).
SweepResult cp_map(const SweepGrid& grid, double eta_tol = 1e-9);

/// Closed-form spectrum of the X-shaped Choi matrix
/// [[1,0,0,x],[0,0,y,0],[0,y*,0,0],[x*,0,0,1]]:
/// (1-|x|, 1+|x|, -|y|, |y|).
std::array<double, 4> xform_spectrum(Complex x, Complex y);

/// The X-shaped matrix itself.
Matrix xform_choi(Complex x, Complex y);

/// Header "axis1,...,eta", one row per grid point, 17 significant digits,
/// LF line endings, no trailing whitespace.
void write_csv(std::ostream& os, const SweepResult& result);

} // namespace chneg
