#pragma once

#include <string>

#include "latomo/grids.hpp"

namespace latomo {

/// CSV layout: header "n_phi,n_s,s_max" (resp. "n") then row-major values.
void write_sinogram_csv(const Sinogram& g, const std::string& path);
Sinogram read_sinogram_csv(const std::string& path);

void write_image_csv(const Image& img, const std::string& path);
Image read_image_csv(const std::string& path);

/// 16-bit binary PGM, affinely scaled; vmin/vmax recorded in <path>.scale.txt.
void write_sinogram_pgm(const Sinogram& g, const std::string& path);
void write_image_pgm(const Image& img, const std::string& path);

} // namespace latomo
