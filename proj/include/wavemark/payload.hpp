#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "wavemark/audio.hpp"
#include "wavemark/image.hpp"

namespace wavemark {

enum class PayloadKind { Text, Image, Audio };

std::string_view to_string(PayloadKind kind);
PayloadKind payload_kind_from_string(std::string_view s);

// Identifies one scrambling key. The seed fully determines the row and
// column permutations; the PRNG is pinned in docs/formats.md.
struct StegoKey {
  std::string id;
  std::uint64_t seed = 0;
};

struct TextMeta {
  std::uint32_t char_count = 0;
};
struct ImageMeta {
  int width = 0;
  int height = 0;
};
struct AudioMeta {
  std::uint32_t sample_count = 0;
  std::uint32_t sample_rate = 8000;
  int bias = 128;
};
using PayloadMeta = std::variant<TextMeta, ImageMeta, AudioMeta>;

// A payload rendered onto a grayscale canvas plus whatever is needed to
// invert the encoding.
struct PayloadDescriptor {
  PayloadKind kind = PayloadKind::Text;
  RasterImage canvas;
  PayloadMeta meta;
};

inline constexpr int kTextCanvasWidth = 64;
inline constexpr int kTextCanvasHeight = 32;
inline constexpr std::size_t kTextMaxChars = 256;

// Text: up to 256 8-bit characters, each emitting 8 bits MSB-first, laid
// row-major onto a 64x32 canvas (bit 1 -> 255), zero padded.
PayloadDescriptor text_to_canvas(std::string_view text);
// Thresholds at 128, repacks MSB-first, truncates to the stored count.
std::string canvas_to_text(const PayloadDescriptor& desc);

// Audio: sample s -> pixel s+128, reshaped row-major into the smallest
// ceil(sqrt(N)) square, tail zero padded.
PayloadDescriptor audio_to_canvas(const PcmAudio& audio);
PcmAudio canvas_to_audio(const PayloadDescriptor& desc);

// Image: verbatim copy; each dimension must be at most cover_dim/4.
PayloadDescriptor image_to_canvas(const RasterImage& image, int cover_width, int cover_height);
RasterImage canvas_to_image(const PayloadDescriptor& desc);

// Keyed scrambling: independent whole-row and whole-column permutations
// (rows drawn first, then columns, from one stream seeded by key.seed).
// Output pixel (r,c) = input pixel (rowperm[r], colperm[c]). A pixel
// permutation, so histograms are invariant. This is not encryption.
RasterImage im2noise(const RasterImage& canvas, const StegoKey& key);
// Exact inverse of im2noise under the same key.
RasterImage noise2im(const RasterImage& noise, const StegoKey& key);

// Zero pads right/bottom so both dims are multiples of m.
RasterImage pad_to_multiple(const RasterImage& image, int m);
RasterImage crop(const RasterImage& image, int width, int height);

}  // namespace wavemark
