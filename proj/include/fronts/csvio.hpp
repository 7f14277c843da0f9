#pragma once

#include <string>
#include <vector>

#include "fronts/coupled.hpp"

namespace fronts {

inline constexpr const char* kTimeseriesHeader =
    "t,g,h,gdot,hdot,umax,vmax,u_at_0,v_at_0,mass_u,mass_v";

void write_timeseries_csv(const std::string& path,
                          const std::vector<CoupledRecord>& records);
std::vector<CoupledRecord> read_timeseries_csv(const std::string& path);

// One snapshot per file, columns x,u,v.
void write_snapshot_csv(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot_csv(const std::string& path);

}  // namespace fronts
