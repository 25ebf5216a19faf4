#include "acns/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "acns/version.hpp"

namespace acns {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return fnv1a64(ss.str());
}

void ensure_dir(const std::string& path) {
    std::filesystem::create_directories(path);
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f.precision(17);
    return f;
}

}  // namespace

void write_energy_csv(const std::string& path,
                      const std::vector<DiagnosticsRow>& rows) {
    auto f = open_out(path);
    f << "n,t,W,kinetic,grad_phi_sq,q_sq,div_u,r,V,step_seconds\n";
    for (const auto& r : rows)
        f << r.n << "," << r.t << "," << r.W << "," << r.kinetic << ","
          << r.grad_phi_sq << "," << r.q_sq << "," << r.div_u << "," << r.r << ","
          << r.V << "," << r.step_seconds << "\n";
}

void write_energy_dw_csv(const std::string& path,
                         const std::vector<DiagnosticsRow>& rows) {
    auto f = open_out(path);
    f << "n,t,W_F\n";
    for (const auto& r : rows) f << r.n << "," << r.t << "," << r.W_F << "\n";
}

void write_fields_csv(const std::string& path, const State& s) {
    auto f = open_out(path);
    const Grid& g = s.grid();
    f << "x,y,phi,u,v,p\n";
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double uc = 0.5 * (s.u.x(i, j) + s.u.x(i + 1, j));
            double vc = 0.5 * (s.u.y(i, j) + s.u.y(i, j + 1));
            f << g.xc(i) << "," << g.yc(j) << "," << s.phi(i, j) << "," << uc
              << "," << vc << "," << s.p(i, j) << "\n";
        }
}

void write_fields_vtk(const std::string& path, const State& s) {
    auto f = open_out(path);
    const Grid& g = s.grid();
    f << "# vtk DataFile Version 3.0\n";
    f << "acns snapshot t=" << s.t << " n=" << s.n << "\n";
    f << "ASCII\nDATASET STRUCTURED_POINTS\n";
    f << "DIMENSIONS " << g.nx + 1 << " " << g.ny + 1 << " 1\n";
    f << "ORIGIN 0 0 0\n";
    f << "SPACING " << g.hx << " " << g.hy << " 1\n";
    f << "CELL_DATA " << g.n_cells() << "\n";
    f << "SCALARS phi double 1\nLOOKUP_TABLE default\n";
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) f << s.phi(i, j) << "\n";
    f << "SCALARS p double 1\nLOOKUP_TABLE default\n";
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) f << s.p(i, j) << "\n";
    f << "VECTORS velocity double\n";
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double uc = 0.5 * (s.u.x(i, j) + s.u.x(i + 1, j));
            double vc = 0.5 * (s.u.y(i, j) + s.u.y(i, j + 1));
            f << uc << " " << vc << " 0\n";
        }
}

void Manifest::write(const std::string& dir) const {
    auto f = open_out(dir + "/manifest.txt");
    f << "version = " << kVersion << "\n";
    f << std::hex;
    f << "config_fnv64 = " << fnv1a64(config_text) << "\n";
    f << std::dec;
    for (const auto& n : notes) f << "note = " << n << "\n";
    for (const auto& file : files) {
        std::uint64_t h = fnv1a64_file(dir + "/" + file);
        std::uintmax_t sz = std::filesystem::file_size(dir + "/" + file);
        f << "file = " << file << " fnv64 = " << std::hex << h << std::dec
          << " bytes = " << sz << "\n";
    }
}

}  // namespace acns
