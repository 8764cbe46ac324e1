#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wavemark/errors.hpp"

namespace wavemark {

// 2D grid of 8-bit samples, row-major. Carrier for covers, payload
// canvases and noise images alike. Treat as immutable once built.
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> samples;

  RasterImage() = default;
  RasterImage(int w, int h, std::uint8_t fill = 0);
  RasterImage(int w, int h, std::vector<std::uint8_t> data);

  std::uint8_t at(int r, int c) const { return samples[static_cast<std::size_t>(r) * width + c]; }
  std::uint8_t& at(int r, int c) { return samples[static_cast<std::size_t>(r) * width + c]; }
  std::size_t pixel_count() const { return samples.size(); }

  bool operator==(const RasterImage&) const = default;
};

// Three equally sized planes, index 0=R, 1=G, 2=B.
struct RgbImage {
  std::array<RasterImage, 3> layers;

  RgbImage() = default;
  explicit RgbImage(std::array<RasterImage, 3> l);

  int width() const { return layers[0].width; }
  int height() const { return layers[0].height; }

  bool operator==(const RgbImage&) const = default;
};

// Replicates the cover into all three color layers. The result renders
// as a gray image (R==G==B) but each layer can carry distinct payloads.
RgbImage gray_to_rgb(const RasterImage& cover);

// Netpbm binary I/O, maxval fixed at 255. Round trips are bit-exact.
RasterImage load_gray(const std::string& path);
void save_gray(const RasterImage& image, const std::string& path);
RgbImage load_rgb(const std::string& path);
void save_rgb(const RgbImage& image, const std::string& path);

}  // namespace wavemark
