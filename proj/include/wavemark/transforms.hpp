#pragma once

#include <complex>
#include <vector>

#include "wavemark/errors.hpp"
#include "wavemark/image.hpp"

namespace wavemark {

// Row-major real-valued coefficient plane.
struct CoeffPlane {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  CoeffPlane() = default;
  CoeffPlane(int w, int h, double fill = 0.0);
  CoeffPlane(int w, int h, std::vector<double> data);

  double at(int r, int c) const { return values[static_cast<std::size_t>(r) * width + c]; }
  double& at(int r, int c) { return values[static_cast<std::size_t>(r) * width + c]; }
};

struct ComplexPlane {
  int width = 0;
  int height = 0;
  std::vector<std::complex<double>> values;

  std::complex<double> at(int r, int c) const { return values[static_cast<std::size_t>(r) * width + c]; }
  std::complex<double>& at(int r, int c) { return values[static_cast<std::size_t>(r) * width + c]; }
};

// Four equal-size subband planes of a single-level 2D DWT, each
// (H/2) x (W/2) for an H x W input.
struct SubbandSet {
  CoeffPlane ll, lh, hl, hh;
};

CoeffPlane plane_from_image(const RasterImage& image);
// Clamps to [0,255] and rounds half away from zero.
RasterImage image_from_plane(const CoeffPlane& plane);

double plane_energy(const CoeffPlane& plane);

// Single-level separable 2D DWT with the orthonormal 4-tap Daubechies
// filter (the paper's "Daubechies-4 / db2": same filter, two naming
// conventions) and periodic boundary extension. Rows are filtered first,
// then columns. Subband naming: first letter = vertical (column) filter,
// second = horizontal (row) filter; LL is the coarse approximation, HH
// the diagonal detail. Requires even dimensions.
SubbandSet dwt2_forward(const CoeffPlane& plane);
CoeffPlane dwt2_inverse(const SubbandSet& bands);

// Blockwise orthonormal DCT-II and its inverse. Dimensions must divide
// by the block size.
CoeffPlane dct2_block(const CoeffPlane& plane, int block = 8);
CoeffPlane idct2_block(const CoeffPlane& plane, int block = 8);

// Blockwise Walsh-Hadamard transform, sequency (Walsh) row order,
// normalized per axis by 1/sqrt(block). Block size must be a power of two.
CoeffPlane wht2_block(const CoeffPlane& plane, int block = 8);
CoeffPlane iwht2_block(const CoeffPlane& plane, int block = 8);

// Full-plane unitary 2D DFT (1/sqrt(MN) both ways). idft2 returns the
// real part, intended for spectra of real-valued planes.
ComplexPlane dft2(const CoeffPlane& plane);
CoeffPlane idft2(const ComplexPlane& spectrum);

}  // namespace wavemark
