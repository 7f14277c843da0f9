#include "fronts/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fronts/types.hpp"

namespace fronts {
namespace {

std::vector<double> split_numbers(const std::string& line, const std::string& path,
                                  size_t expected) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            out.push_back(std::stod(cell));
        } catch (const std::exception&) {
            throw DataError(path + ": cannot parse '" + cell + "' as a number");
        }
    }
    if (out.size() != expected)
        throw DataError(path + ": expected " + std::to_string(expected) +
                        " columns, got " + std::to_string(out.size()));
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw DataError("cannot open " + path + " for writing");
    return f;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open " + path);
    return f;
}

}  // namespace

void write_timeseries_csv(const std::string& path,
                          const std::vector<CoupledRecord>& records) {
    auto f = open_out(path);
    f << kTimeseriesHeader << "\n";
    char buf[512];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf,
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      r.t, r.g, r.h, r.gdot, r.hdot, r.umax, r.vmax, r.u_at_0,
                      r.v_at_0, r.mass_u, r.mass_v);
        f << buf;
    }
}

std::vector<CoupledRecord> read_timeseries_csv(const std::string& path) {
    auto f = open_in(path);
    std::string line;
    if (!std::getline(f, line)) throw DataError(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kTimeseriesHeader)
        throw DataError(path + ": unexpected header '" + line + "'");
    std::vector<CoupledRecord> out;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto v = split_numbers(line, path, 11);
        out.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9],
                       v[10]});
    }
    if (out.empty()) throw DataError(path + ": no data rows");
    return out;
}

void write_snapshot_csv(const std::string& path, const Snapshot& snap) {
    auto f = open_out(path);
    f << "x,u,v\n";
    char buf[160];
    for (size_t i = 0; i < snap.x.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", snap.x[i], snap.u[i],
                      snap.v[i]);
        f << buf;
    }
}

Snapshot read_snapshot_csv(const std::string& path) {
    auto f = open_in(path);
    std::string line;
    if (!std::getline(f, line)) throw DataError(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,u,v") throw DataError(path + ": unexpected header '" + line + "'");
    Snapshot snap;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto v = split_numbers(line, path, 3);
        snap.x.push_back(v[0]);
        snap.u.push_back(v[1]);
        snap.v.push_back(v[2]);
    }
    if (snap.x.empty()) throw DataError(path + ": no data rows");
    return snap;
}

}  // namespace fronts
