#include "latomo/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace latomo {

namespace {

void write_values_csv(std::ostream& out, const std::vector<double>& values, int row_len) {
    out.precision(17);
    for (size_t i = 0; i < values.size(); ++i) {
        out << values[i];
        out << (((i + 1) % row_len == 0) ? '\n' : ',');
    }
}

std::vector<double> read_values_csv(std::istream& in, size_t expected) {
    std::vector<double> values;
    values.reserve(expected);
    std::string tok;
    while (std::getline(in, tok)) {
        std::stringstream row(tok);
        std::string cell;
        while (std::getline(row, cell, ','))
            values.push_back(std::stod(cell));
    }
    if (values.size() != expected)
        throw std::runtime_error("csv: expected " + std::to_string(expected) + " values, got " +
                                 std::to_string(values.size()));
    return values;
}

void write_pgm16(const std::vector<double>& values, int width, int height,
                 const std::string& path) {
    double vmin = *std::min_element(values.begin(), values.end());
    double vmax = *std::max_element(values.begin(), values.end());
    double scale = vmax > vmin ? 65535.0 / (vmax - vmin) : 0.0;

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path);
    out << "P5\n" << width << " " << height << "\n65535\n";
    for (double v : values) {
        auto q = static_cast<uint16_t>(std::lround((v - vmin) * scale));
        // PGM 16-bit samples are big-endian.
        out.put(static_cast<char>(q >> 8));
        out.put(static_cast<char>(q & 0xff));
    }

    std::ofstream side(path + ".scale.txt");
    side.precision(17);
    side << "vmin " << vmin << "\nvmax " << vmax << "\n";
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return in;
}

} // namespace

void write_sinogram_csv(const Sinogram& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path);
    out.precision(17);
    out << g.grid.n_phi << "," << g.grid.n_s << "," << g.grid.s_max << "\n";
    write_values_csv(out, g.values, g.grid.n_s);
}

Sinogram read_sinogram_csv(const std::string& path) {
    auto in = open_or_throw(path);
    std::string header;
    std::getline(in, header);
    std::stringstream hs(header);
    std::string cell;
    SinogramGrid grid;
    std::getline(hs, cell, ',');
    grid.n_phi = std::stoi(cell);
    std::getline(hs, cell, ',');
    grid.n_s = std::stoi(cell);
    std::getline(hs, cell, ',');
    grid.s_max = std::stod(cell);
    Sinogram g(grid);
    g.values = read_values_csv(in, g.values.size());
    return g;
}

void write_image_csv(const Image& img, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path);
    out << img.n << "\n";
    write_values_csv(out, img.values, img.n);
}

Image read_image_csv(const std::string& path) {
    auto in = open_or_throw(path);
    std::string header;
    std::getline(in, header);
    Image img(std::stoi(header));
    img.values = read_values_csv(in, img.values.size());
    return img;
}

void write_sinogram_pgm(const Sinogram& g, const std::string& path) {
    write_pgm16(g.values, g.grid.n_s, g.grid.n_phi, path);
}

void write_image_pgm(const Image& img, const std::string& path) {
    write_pgm16(img.values, img.n, img.n, path);
}

} // namespace latomo
