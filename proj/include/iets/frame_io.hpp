#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "iets/surfaces.hpp"

namespace iets {

enum class FrameFormat { png8, raw_f32 };

FrameFormat frame_format_from_name(const std::string& name);
const char* frame_format_extension(FrameFormat format);

/// Quantizes a [0, 1] channel value to 8 bits with round-half-up, so exported
/// images are stable across platforms.
std::uint8_t quantize8(double v);

/// Serializes a composed frame. png8 packs the channels as RGB
/// (pos, neg, count) at 8 bits; raw_f32 is the lossless container described
/// in FORMATS.md (magic, geometry, then channel-planar little-endian floats).
/// Empty pixels export as 0 in both formats.
std::vector<std::uint8_t> export_frame(const IetsFrame& frame,
                                       FrameFormat format);

/// Writes export_frame() output to disk. Throws std::runtime_error naming the
/// path on I/O failure.
void write_frame(const IetsFrame& frame, FrameFormat format,
                 const std::string& path);

/// Decoded raw_f32 container: three row-major channel planes.
struct RawF32Frame {
    SensorGeometry geometry;
    std::vector<float> pos;
    std::vector<float> neg;
    std::vector<float> count;
};

/// Parses raw_f32 bytes. Throws std::runtime_error on a bad magic, size
/// mismatch, or truncation.
RawF32Frame read_raw_f32(std::span<const std::uint8_t> bytes);

}  // namespace iets
