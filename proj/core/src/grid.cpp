#include "stripmhd/grid.hpp"

#include "stripmhd/errors.hpp"

namespace stripmhd {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

GridSpec::GridSpec(double L, int nx_, int ny_) : period_L(L), nx(nx_), ny(ny_) {
    if (!(period_L > 0.0)) throw ConfigError("GridSpec: period_L must be positive");
    if (!power_of_two(nx) || nx < 16)
        throw ConfigError("GridSpec: nx must be a power of two, nx >= 16");
    if (ny < 4) throw ConfigError("GridSpec: ny must be at least 4");
    y_nodes_.resize(ny);
    for (int j = 0; j < ny; ++j) y_nodes_[j] = (j + 1) * dy();
}

}  // namespace stripmhd
