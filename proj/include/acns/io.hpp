// File output: diagnostics CSV, field snapshots (CSV / legacy VTK), and the
// per-run manifest with config hash and file checksums.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acns/diagnostics.hpp"
#include "acns/params.hpp"

namespace acns {

std::uint64_t fnv1a64(const std::string& data);
std::uint64_t fnv1a64_file(const std::string& path);

void ensure_dir(const std::string& path);

// header: n,t,W,kinetic,grad_phi_sq,q_sq,div_u,r,V,step_seconds
void write_energy_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows);
// companion series with the double-well form of the energy: n,t,W_F
void write_energy_dw_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows);

// x,y,phi,u,v,p at cell centers (velocity averaged from faces)
void write_fields_csv(const std::string& path, const State& s);
// legacy VTK STRUCTURED_POINTS, ASCII, cell data
void write_fields_vtk(const std::string& path, const State& s);

struct Manifest {
    std::string config_text;
    std::vector<std::string> notes;
    std::vector<std::string> files;  // paths relative to the run directory

    void write(const std::string& dir) const;
};

}  // namespace acns
