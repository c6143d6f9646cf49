#include "iets/frame_io.hpp"

#include <zlib.h>

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace iets {

namespace {

constexpr char kRawMagic[8] = {'I', 'E', 'T', 'S', 'F', '3', '2', '\0'};

void put_u32_le(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

void put_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

void put_f32_le(std::vector<std::uint8_t>& out, float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32_le(out, bits);
}

void append_chunk(std::vector<std::uint8_t>& png, const char type[5],
                  std::span<const std::uint8_t> data) {
    put_u32_be(png, static_cast<std::uint32_t>(data.size()));
    const std::size_t crc_from = png.size();
    png.insert(png.end(), type, type + 4);
    png.insert(png.end(), data.begin(), data.end());
    const auto crc = static_cast<std::uint32_t>(
        crc32(0, png.data() + crc_from, static_cast<uInt>(png.size() - crc_from)));
    put_u32_be(png, crc);
}

std::vector<std::uint8_t> zlib_deflate(std::span<const std::uint8_t> raw) {
    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> out(bound);
    if (compress2(out.data(), &bound, raw.data(),
                  static_cast<uLong>(raw.size()), Z_BEST_SPEED) != Z_OK) {
        throw std::runtime_error("zlib compression failed");
    }
    out.resize(bound);
    return out;
}

std::vector<std::uint8_t> encode_png_rgb8(std::uint32_t width,
                                          std::uint32_t height,
                                          std::span<const std::uint8_t> rgb) {
    // Scanlines with filter byte 0; no interlacing.
    std::vector<std::uint8_t> filtered;
    filtered.reserve((static_cast<std::size_t>(width) * 3 + 1) * height);
    for (std::uint32_t y = 0; y < height; ++y) {
        filtered.push_back(0);
        const std::uint8_t* row = rgb.data() + static_cast<std::size_t>(y) * width * 3;
        filtered.insert(filtered.end(), row, row + static_cast<std::size_t>(width) * 3);
    }

    static const std::uint8_t signature[8] = {0x89, 'P', 'N', 'G',
                                              '\r', '\n', 0x1a, '\n'};
    std::vector<std::uint8_t> png(signature, signature + 8);

    std::vector<std::uint8_t> ihdr;
    put_u32_be(ihdr, width);
    put_u32_be(ihdr, height);
    ihdr.push_back(8);   // bit depth
    ihdr.push_back(2);   // color type: truecolor
    ihdr.push_back(0);   // compression
    ihdr.push_back(0);   // filter
    ihdr.push_back(0);   // interlace
    append_chunk(png, "IHDR", ihdr);
    append_chunk(png, "IDAT", zlib_deflate(filtered));
    append_chunk(png, "IEND", {});
    return png;
}

std::uint32_t get_u32_le(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) |
           static_cast<std::uint32_t>(p[1]) << 8 |
           static_cast<std::uint32_t>(p[2]) << 16 |
           static_cast<std::uint32_t>(p[3]) << 24;
}

}  // namespace

FrameFormat frame_format_from_name(const std::string& name) {
    if (name == "png8" || name == "png") return FrameFormat::png8;
    if (name == "raw_f32") return FrameFormat::raw_f32;
    throw std::invalid_argument("unknown frame format: " + name);
}

const char* frame_format_extension(FrameFormat format) {
    return format == FrameFormat::png8 ? ".png" : ".f32";
}

std::uint8_t quantize8(double v) {
    const double scaled = std::floor(v * 255.0 + 0.5);
    if (scaled <= 0.0) return 0;
    if (scaled >= 255.0) return 255;
    return static_cast<std::uint8_t>(scaled);
}

std::vector<std::uint8_t> export_frame(const IetsFrame& frame,
                                       FrameFormat format) {
    const SensorGeometry geom = frame.geometry();
    if (format == FrameFormat::png8) {
        std::vector<std::uint8_t> rgb;
        rgb.reserve(geom.pixel_count() * 3);
        for (std::uint32_t y = 0; y < geom.height; ++y) {
            for (std::uint32_t x = 0; x < geom.width; ++x) {
                rgb.push_back(quantize8(frame.pos.value(x, y)));
                rgb.push_back(quantize8(frame.neg.value(x, y)));
                rgb.push_back(quantize8(frame.count.value(x, y)));
            }
        }
        return encode_png_rgb8(geom.width, geom.height, rgb);
    }

    std::vector<std::uint8_t> out;
    out.reserve(20 + geom.pixel_count() * 12);
    out.insert(out.end(), kRawMagic, kRawMagic + 8);
    put_u32_le(out, geom.width);
    put_u32_le(out, geom.height);
    put_u32_le(out, 3);
    for (const SurfaceImage* channel : {&frame.pos, &frame.neg, &frame.count}) {
        for (std::uint32_t y = 0; y < geom.height; ++y) {
            for (std::uint32_t x = 0; x < geom.width; ++x) {
                put_f32_le(out, static_cast<float>(channel->value(x, y)));
            }
        }
    }
    return out;
}

void write_frame(const IetsFrame& frame, FrameFormat format,
                 const std::string& path) {
    const std::vector<std::uint8_t> bytes = export_frame(frame, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

RawF32Frame read_raw_f32(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 20 || std::memcmp(bytes.data(), kRawMagic, 8) != 0) {
        throw std::runtime_error("raw_f32: bad magic");
    }
    RawF32Frame frame;
    frame.geometry.width = get_u32_le(bytes.data() + 8);
    frame.geometry.height = get_u32_le(bytes.data() + 12);
    const std::uint32_t channels = get_u32_le(bytes.data() + 16);
    if (channels != 3) {
        throw std::runtime_error("raw_f32: expected 3 channels, got " +
                                 std::to_string(channels));
    }
    const std::size_t plane = frame.geometry.pixel_count();
    if (bytes.size() != 20 + plane * 12) {
        throw std::runtime_error("raw_f32: truncated payload");
    }
    auto read_plane = [&](std::size_t plane_idx) {
        std::vector<float> values(plane);
        const std::uint8_t* base = bytes.data() + 20 + plane_idx * plane * 4;
        for (std::size_t i = 0; i < plane; ++i) {
            const std::uint32_t bits = get_u32_le(base + i * 4);
            std::memcpy(&values[i], &bits, 4);
        }
        return values;
    };
    frame.pos = read_plane(0);
    frame.neg = read_plane(1);
    frame.count = read_plane(2);
    return frame;
}

}  // namespace iets
