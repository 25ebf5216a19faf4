#include "acns/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace acns {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<Bubble> parse_bubbles(const std::string& s) {
    std::vector<Bubble> out;
    std::stringstream groups(s);
    std::string part;
    while (std::getline(groups, part, ';')) {
        part = trim(part);
        if (part.empty()) continue;
        Bubble b;
        char comma;
        std::stringstream ss(part);
        if (!(ss >> b.cx >> comma >> b.cy >> comma >> b.radius >> comma >>
              b.width_factor))
            throw std::invalid_argument("config: bad bubble spec '" + part + "'");
        out.push_back(b);
    }
    return out;
}

std::string bubbles_to_string(const std::vector<Bubble>& bs) {
    std::ostringstream os;
    os.precision(17);
    for (size_t k = 0; k < bs.size(); ++k) {
        if (k) os << "; ";
        os << bs[k].cx << "," << bs[k].cy << "," << bs[k].radius << ","
           << bs[k].width_factor;
    }
    return os.str();
}

}  // namespace

void RunConfig::validate() const {
    params().validate();  // positivity and alpha*beta >= 1/4
    if (t_end < dt) throw std::invalid_argument("config: time.t_end < time.dt");
    grid();               // cell-count bounds
    if (init_kind != "cosine" && init_kind != "spinodal" && init_kind != "bubbles")
        throw std::invalid_argument("config: unknown init.kind '" + init_kind + "'");
    if (init_kind == "bubbles" && bubbles.empty())
        throw std::invalid_argument("config: init.kind=bubbles needs init.bubbles");
}

ScalarField RunConfig::build_initial_phi() const {
    Grid g = grid();
    if (init_kind == "cosine") return init_cosine(g);
    if (init_kind == "spinodal") return init_spinodal(g, mean, amplitude, seed);
    return init_bubbles(g, eta, bubbles);
}

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        try {
            if (key == "domain.lx") c.lx = std::stod(val);
            else if (key == "domain.ly") c.ly = std::stod(val);
            else if (key == "grid.nx") c.nx = std::stoi(val);
            else if (key == "grid.ny") c.ny = std::stoi(val);
            else if (key == "time.dt") c.dt = std::stod(val);
            else if (key == "time.t_end") c.t_end = std::stod(val);
            else if (key == "time.output_every") c.output_every = std::stoi(val);
            else if (key == "model.eta") c.eta = std::stod(val);
            else if (key == "model.lambda") c.lambda = std::stod(val);
            else if (key == "model.mobility") c.mobility = std::stod(val);
            else if (key == "model.nu") c.nu = std::stod(val);
            else if (key == "scheme.kind") c.scheme = scheme_from_name(val);
            else if (key == "scheme.alpha") c.alpha = std::stod(val);
            else if (key == "scheme.beta") c.beta = std::stod(val);
            else if (key == "init.kind") c.init_kind = val;
            else if (key == "init.seed") c.seed = std::stoull(val);
            else if (key == "init.mean") c.mean = std::stod(val);
            else if (key == "init.amplitude") c.amplitude = std::stod(val);
            else if (key == "init.bubbles") c.bubbles = parse_bubbles(val);
            else if (key == "init.stokes_velocity") c.stokes_velocity = (val == "true" || val == "1");
            else if (key == "solver.tol") c.tol = std::stod(val);
            else if (key == "solver.maxit") c.maxit = std::stoi(val);
            else if (key == "output.dir") c.out_dir = val;
            else if (key == "output.formats") {
                c.format_csv = val.find("csv") != std::string::npos;
                c.format_vtk = val.find("vtk") != std::string::npos;
            } else
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        " (" + key + "): " + e.what());
        }
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream os;
    os.precision(17);
    os << "domain.lx = " << c.lx << "\n";
    os << "domain.ly = " << c.ly << "\n";
    os << "grid.nx = " << c.nx << "\n";
    os << "grid.ny = " << c.ny << "\n";
    os << "time.dt = " << c.dt << "\n";
    os << "time.t_end = " << c.t_end << "\n";
    os << "time.output_every = " << c.output_every << "\n";
    os << "model.eta = " << c.eta << "\n";
    os << "model.lambda = " << c.lambda << "\n";
    os << "model.mobility = " << c.mobility << "\n";
    os << "model.nu = " << c.nu << "\n";
    os << "scheme.kind = " << scheme_name(c.scheme) << "\n";
    os << "scheme.alpha = " << c.alpha << "\n";
    os << "scheme.beta = " << c.beta << "\n";
    os << "init.kind = " << c.init_kind << "\n";
    os << "init.seed = " << c.seed << "\n";
    os << "init.mean = " << c.mean << "\n";
    os << "init.amplitude = " << c.amplitude << "\n";
    if (!c.bubbles.empty())
        os << "init.bubbles = " << bubbles_to_string(c.bubbles) << "\n";
    os << "init.stokes_velocity = " << (c.stokes_velocity ? "true" : "false") << "\n";
    os << "solver.tol = " << c.tol << "\n";
    os << "solver.maxit = " << c.maxit << "\n";
    os << "output.dir = " << c.out_dir << "\n";
    std::string fmts;
    if (c.format_csv) fmts = "csv";
    if (c.format_vtk) fmts += (fmts.empty() ? "vtk" : ",vtk");
    os << "output.formats = " << fmts << "\n";
    return os.str();
}

bool operator==(const RunConfig& a, const RunConfig& b) {
    auto beq = [](const std::vector<Bubble>& x, const std::vector<Bubble>& y) {
        if (x.size() != y.size()) return false;
        for (size_t k = 0; k < x.size(); ++k)
            if (x[k].cx != y[k].cx || x[k].cy != y[k].cy ||
                x[k].radius != y[k].radius || x[k].width_factor != y[k].width_factor)
                return false;
        return true;
    };
    return a.lx == b.lx && a.ly == b.ly && a.nx == b.nx && a.ny == b.ny &&
           a.dt == b.dt && a.t_end == b.t_end && a.output_every == b.output_every &&
           a.eta == b.eta && a.lambda == b.lambda && a.mobility == b.mobility &&
           a.nu == b.nu && a.scheme == b.scheme && a.alpha == b.alpha &&
           a.beta == b.beta && a.init_kind == b.init_kind && a.seed == b.seed &&
           a.mean == b.mean && a.amplitude == b.amplitude &&
           beq(a.bubbles, b.bubbles) && a.stokes_velocity == b.stokes_velocity &&
           a.tol == b.tol && a.maxit == b.maxit && a.out_dir == b.out_dir &&
           a.format_csv == b.format_csv && a.format_vtk == b.format_vtk;
}

}  // namespace acns
