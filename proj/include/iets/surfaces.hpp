#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "iets/event.hpp"
#include "iets/filters.hpp"

namespace iets {

/// Statistic applied to a pixel's event times when building a time surface.
enum class Aggregator { mean, min, max, median };

Aggregator aggregator_from_name(const std::string& name);
const char* aggregator_name(Aggregator agg);

enum class ChannelKind { ts_pos, ts_neg, count };

/// Per-pixel scalar field with an explicit empty marker for pixels that had
/// no contributing events. Raw time channels hold microseconds; internally
/// they are stored relative to time_offset_us() so that normalization is
/// bit-exact under constant timestamp shifts. Normalized channels hold [0, 1]
/// and a zero offset. Empty pixels render as 0 on export.
class SurfaceImage {
public:
    SurfaceImage() = default;
    SurfaceImage(SensorGeometry geometry, ChannelKind kind, Aggregator agg,
                 std::int64_t time_offset_us, bool normalized);

    const SensorGeometry& geometry() const { return geometry_; }
    ChannelKind kind() const { return kind_; }
    Aggregator aggregator() const { return agg_; }
    std::int64_t time_offset_us() const { return time_offset_us_; }
    bool normalized() const { return normalized_; }

    bool has_value(std::uint32_t x, std::uint32_t y) const {
        return occupied_[index(x, y)] != 0;
    }
    /// Absolute value: rel + offset for raw time channels, the stored value
    /// otherwise. 0 for empty pixels.
    double value(std::uint32_t x, std::uint32_t y) const {
        const std::size_t i = index(x, y);
        if (!occupied_[i]) return 0.0;
        return values_[i] + static_cast<double>(time_offset_us_);
    }
    /// Offset-relative value as stored; what normalize() consumes.
    double rel_value(std::uint32_t x, std::uint32_t y) const {
        return values_[index(x, y)];
    }

    void set(std::uint32_t x, std::uint32_t y, double rel_value) {
        const std::size_t i = index(x, y);
        values_[i] = rel_value;
        occupied_[i] = 1;
    }

    std::size_t occupied_count() const;

private:
    std::size_t index(std::uint32_t x, std::uint32_t y) const {
        return static_cast<std::size_t>(y) * geometry_.width + x;
    }

    SensorGeometry geometry_{};
    ChannelKind kind_ = ChannelKind::count;
    Aggregator agg_ = Aggregator::mean;
    std::int64_t time_offset_us_ = 0;
    bool normalized_ = false;
    std::vector<double> values_{};
    std::vector<std::uint8_t> occupied_{};
};

/// Three normalized channels: positive IETS, negative IETS, raw event count.
/// fallback_used flags pixels where either polarity channel fell back to the
/// mean of all raw event times for lack of an inceptive event.
struct IetsFrame {
    SurfaceImage pos;
    SurfaceImage neg;
    SurfaceImage count;
    std::vector<std::uint8_t> fallback_used;

    const SensorGeometry& geometry() const { return pos.geometry(); }
    bool fallback_at(std::uint32_t x, std::uint32_t y) const {
        return fallback_used[static_cast<std::size_t>(y) *
                                 pos.geometry().width +
                             x] != 0;
    }
};

/// Raw (pre-normalization) time surface over the given polarity's tracks:
/// each contributing pixel gets the aggregator of its track times, in
/// absolute microseconds. t_start anchors the internal relative storage.
SurfaceImage time_surface(std::span<const PixelTrack> tracks,
                          SensorGeometry geometry, std::int64_t t_start,
                          std::int8_t polarity, Aggregator agg);

/// Convenience overload grouping the stream itself.
SurfaceImage time_surface(const EventStream& stream, std::int8_t polarity,
                          Aggregator agg);

struct IetsSurfaceResult {
    SurfaceImage surface;
    std::vector<std::uint8_t> fallback_used;  // one flag per pixel
};

/// Raw IETS channel: aggregator over the pixel's inceptive-event times where
/// at least one IE exists; otherwise, if the pixel has raw events of this
/// polarity, the mean of all of them (fallback, flagged); otherwise empty.
IetsSurfaceResult iets_surface(const EventStream& stream, std::int8_t polarity,
                               const FilterParams& params,
                               Aggregator agg = Aggregator::mean);

/// Per-pixel count of unfiltered events across both polarities.
SurfaceImage count_channel(const EventStream& stream);

/// Scales a raw surface into [0, 1]: time channels map (v - min)/(max - min)
/// over the occupied pixels, the count channel maps v/max. When max == min
/// every occupied pixel maps to 1. Empty pixels stay empty.
SurfaceImage normalize(const SurfaceImage& raw);

/// Which events feed the two time channels of a composed frame.
enum class SurfaceVariant { raw_ts, fsae, iets };

SurfaceVariant variant_from_name(const std::string& name);
const char* variant_name(SurfaceVariant variant);

/// Full IETS composition: normalized positive/negative IETS channels plus the
/// normalized raw-count channel.
IetsFrame compose_frame(const EventStream& stream, const FilterParams& params,
                        Aggregator agg = Aggregator::mean);

/// Same composition with the time channels built from raw, FSAE-filtered, or
/// inceptive events. The count channel always comes from unfiltered events;
/// only the iets variant uses the mean-time fallback.
IetsFrame compose_variant_frame(const EventStream& stream,
                                SurfaceVariant variant,
                                const FilterParams& params,
                                Aggregator agg = Aggregator::mean);

}  // namespace iets
