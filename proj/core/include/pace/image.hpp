#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "pace/scene.hpp"

namespace pace {

/// Interleaved 8-bit RGB raster, row-major.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples; // width * height * 3

    static RasterImage filled(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b);

    std::uint8_t& at(int x, int y, int c) { return samples[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }
    std::uint8_t at(int x, int y, int c) const { return samples[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }

    RasterImage crop(const BBox& box) const;
    void paste(const RasterImage& patch, int x, int y);

    bool operator==(const RasterImage&) const = default;
};

/// Binary PPM (P6, maxval 255). load_image(save_image(img)) is the
/// identity on samples.
RasterImage load_image(const std::filesystem::path& path);
void save_image(const RasterImage& image, const std::filesystem::path& path);

} // namespace pace
