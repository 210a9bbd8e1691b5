#include "stripmhd/snapshot_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "stripmhd/errors.hpp"

namespace stripmhd {

namespace {
constexpr char kMagic[8] = {'M', 'H', 'D', 'S', 'N', 'A', 'P', '1'};

void put_u32(std::vector<char>& buf, uint32_t v) {
    char b[4];
    std::memcpy(b, &v, 4);
    buf.insert(buf.end(), b, b + 4);
}
void put_f64(std::vector<char>& buf, double v) {
    char b[8];
    std::memcpy(b, &v, 8);
    buf.insert(buf.end(), b, b + 8);
}
void put_field(std::vector<char>& buf, const std::vector<cplx>& v) {
    for (const cplx& z : v) {
        put_f64(buf, z.real());
        put_f64(buf, z.imag());
    }
}

struct Reader {
    const char* p;
    const char* end;
    uint32_t u32() {
        if (p + 4 > end) throw UsageError("snapshot: truncated");
        uint32_t v;
        std::memcpy(&v, p, 4);
        p += 4;
        return v;
    }
    double f64() {
        if (p + 8 > end) throw UsageError("snapshot: truncated");
        double v;
        std::memcpy(&v, p, 8);
        p += 8;
        return v;
    }
    void field(std::vector<cplx>& out, size_t n) {
        out.resize(n);
        for (size_t i = 0; i < n; ++i) {
            const double re = f64();
            const double im = f64();
            out[i] = cplx{re, im};
        }
    }
};
}  // namespace

void write_snapshot(const std::string& path, const MhdState& state, double a,
                    double lambda, double theta) {
    std::vector<char> buf;
    buf.insert(buf.end(), kMagic, kMagic + 8);
    put_u32(buf, static_cast<uint32_t>(state.flavor));
    put_u32(buf, static_cast<uint32_t>(state.grid().nx));
    put_u32(buf, static_cast<uint32_t>(state.grid().ny));
    put_f64(buf, state.grid().period_L);
    put_f64(buf, state.time);
    put_f64(buf, a);
    put_f64(buf, lambda);
    put_f64(buf, theta);
    put_field(buf, state.u.data());
    put_field(buf, state.v.data());
    put_field(buf, state.b.data());
    put_field(buf, state.c.data());
    if (state.flavor == Flavor::limit)
        put_field(buf, state.p_row);
    else
        put_field(buf, state.p_faces);

    std::ofstream os(path, std::ios::binary);
    if (!os) throw UsageError("snapshot: cannot open " + path);
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw UsageError("snapshot: cannot open " + path);
    std::vector<char> buf((std::istreambuf_iterator<char>(is)),
                          std::istreambuf_iterator<char>());
    if (buf.size() < 8 || std::memcmp(buf.data(), kMagic, 8) != 0)
        throw UsageError("snapshot: bad magic in " + path);
    Reader r{buf.data() + 8, buf.data() + buf.size()};

    Snapshot snap;
    snap.header.flavor = static_cast<Flavor>(r.u32());
    snap.header.nx = static_cast<int>(r.u32());
    snap.header.ny = static_cast<int>(r.u32());
    snap.header.period_L = r.f64();
    snap.header.time = r.f64();
    snap.header.a = r.f64();
    snap.header.lambda = r.f64();
    snap.header.theta = r.f64();

    GridSpec grid(snap.header.period_L, snap.header.nx, snap.header.ny);
    snap.state = MhdState(grid, snap.header.flavor);
    snap.state.time = snap.header.time;
    const size_t nfield = static_cast<size_t>(grid.nx) * grid.ny;
    r.field(snap.state.u.data(), nfield);
    r.field(snap.state.v.data(), nfield);
    r.field(snap.state.b.data(), nfield);
    r.field(snap.state.c.data(), nfield);
    if (snap.header.flavor == Flavor::limit)
        r.field(snap.state.p_row, static_cast<size_t>(grid.nx));
    else
        r.field(snap.state.p_faces, static_cast<size_t>(grid.nx) * (grid.ny + 1));
    return snap;
}

}  // namespace stripmhd
