#include "nlslab/field_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nlslab {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_field_csv(const std::filesystem::path& path, const Field& u) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << "x,re,im\n";
    for (int j = 0; j < u.size(); ++j)
        out << format_double(u.grid.node(j)) << ',' << format_double(u[j].real()) << ','
            << format_double(u[j].imag()) << '\n';
}

Field read_field_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    std::getline(in, line);  // header
    std::vector<double> xs;
    std::vector<Complex> vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok;
        double col[3];
        for (double& c : col) {
            if (!std::getline(ss, tok, ',')) throw std::runtime_error("bad CSV row: " + line);
            c = std::stod(tok);
        }
        xs.push_back(col[0]);
        vs.emplace_back(col[1], col[2]);
    }
    if (xs.size() < 8) throw std::runtime_error("field CSV too short");
    const int n = static_cast<int>(xs.size());
    const double dx = xs[1] - xs[0];
    Grid g = Grid::make(n, dx * n);
    return Field(g, std::move(vs));
}

namespace {

void put_f64(std::ofstream& out, double x) {
    static_assert(sizeof(double) == 8);
    out.write(reinterpret_cast<const char*>(&x), 8);
}

double get_f64(std::ifstream& in) {
    double x;
    in.read(reinterpret_cast<char*>(&x), 8);
    if (!in) throw std::runtime_error("truncated binary field file");
    return x;
}

void write_field_payload(std::ofstream& out, const Field& u) {
    put_f64(out, static_cast<double>(u.grid.n));
    put_f64(out, u.grid.length);
    out.write(reinterpret_cast<const char*>(u.v.data()), sizeof(Complex) * u.grid.n);
}

Field read_field_payload(std::ifstream& in) {
    const int n = static_cast<int>(get_f64(in));
    const double length = get_f64(in);
    Grid g = Grid::make(n, length);
    Field u(g);
    in.read(reinterpret_cast<char*>(u.v.data()), sizeof(Complex) * n);
    if (!in) throw std::runtime_error("truncated binary field file");
    return u;
}

}  // namespace

void write_field_binary(const std::filesystem::path& path, const Field& u) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    write_field_payload(out, u);
}

Field read_field_binary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_field_payload(in);
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& c) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    put_f64(out, c.t);
    put_f64(out, c.dt);
    out.write(reinterpret_cast<const char*>(&c.step), 8);
    write_field_payload(out, c.field);
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    Checkpoint c;
    c.t = get_f64(in);
    c.dt = get_f64(in);
    in.read(reinterpret_cast<char*>(&c.step), 8);
    c.field = read_field_payload(in);
    return c;
}

}  // namespace nlslab
