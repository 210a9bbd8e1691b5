#pragma once

#include <string>

#include "stripmhd/state.hpp"

namespace stripmhd {

/// Binary snapshot, magic "MHDSNAP1". Header: flavor, nx, ny (uint32 LE),
/// then period_L, time, a, lambda, theta (float64 LE). Payload: fields
/// u, v, b, c as nx*ny complex128 in (field, k, j) order, real/imag
/// interleaved, then the pressure (nx*1 for limit flavor, nx*(ny+1) faces
/// otherwise). Round trips are bit-exact.
struct SnapshotHeader {
    Flavor flavor;
    int nx, ny;
    double period_L, time, a, lambda, theta;
};

void write_snapshot(const std::string& path, const MhdState& state, double a,
                    double lambda, double theta);

struct Snapshot {
    SnapshotHeader header;
    MhdState state;
};
Snapshot read_snapshot(const std::string& path);

}  // namespace stripmhd
