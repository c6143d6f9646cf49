#include "iets/surfaces.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace iets {

Aggregator aggregator_from_name(const std::string& name) {
    if (name == "mean") return Aggregator::mean;
    if (name == "min") return Aggregator::min;
    if (name == "max") return Aggregator::max;
    if (name == "median") return Aggregator::median;
    throw std::invalid_argument("unknown aggregator: " + name);
}

const char* aggregator_name(Aggregator agg) {
    switch (agg) {
        case Aggregator::mean: return "mean";
        case Aggregator::min: return "min";
        case Aggregator::max: return "max";
        case Aggregator::median: return "median";
    }
    return "?";
}

SurfaceVariant variant_from_name(const std::string& name) {
    if (name == "raw_ts") return SurfaceVariant::raw_ts;
    if (name == "fsae") return SurfaceVariant::fsae;
    if (name == "iets") return SurfaceVariant::iets;
    throw std::invalid_argument("unknown surface variant: " + name);
}

const char* variant_name(SurfaceVariant variant) {
    switch (variant) {
        case SurfaceVariant::raw_ts: return "raw_ts";
        case SurfaceVariant::fsae: return "fsae";
        case SurfaceVariant::iets: return "iets";
    }
    return "?";
}

SurfaceImage::SurfaceImage(SensorGeometry geometry, ChannelKind kind,
                           Aggregator agg, std::int64_t time_offset_us,
                           bool normalized)
    : geometry_(geometry),
      kind_(kind),
      agg_(agg),
      time_offset_us_(time_offset_us),
      normalized_(normalized),
      values_(geometry.pixel_count(), 0.0),
      occupied_(geometry.pixel_count(), 0) {}

std::size_t SurfaceImage::occupied_count() const {
    std::size_t n = 0;
    for (std::uint8_t o : occupied_) n += o;
    return n;
}

namespace {

// Aggregates strictly increasing times, relative to t_start. Sums stay well
// under 2^53 for any realistic window, so the double math is exact up to one
// deterministic rounding in the mean.
double aggregate_rel(std::span<const std::int64_t> times, std::int64_t t_start,
                     Aggregator agg) {
    switch (agg) {
        case Aggregator::mean: {
            std::int64_t sum = 0;
            for (std::int64_t t : times) sum += t - t_start;
            return static_cast<double>(sum) / static_cast<double>(times.size());
        }
        case Aggregator::min:
            return static_cast<double>(times.front() - t_start);
        case Aggregator::max:
            return static_cast<double>(times.back() - t_start);
        case Aggregator::median: {
            const std::size_t n = times.size();
            if (n % 2 == 1) {
                return static_cast<double>(times[n / 2] - t_start);
            }
            const std::int64_t lo = times[n / 2 - 1] - t_start;
            const std::int64_t hi = times[n / 2] - t_start;
            return (static_cast<double>(lo) + static_cast<double>(hi)) / 2.0;
        }
    }
    throw std::logic_error("unknown aggregator");
}

double mean_rel(std::span<const std::int64_t> times, std::int64_t t_start) {
    return aggregate_rel(times, t_start, Aggregator::mean);
}

}  // namespace

SurfaceImage time_surface(std::span<const PixelTrack> tracks,
                          SensorGeometry geometry, std::int64_t t_start,
                          std::int8_t polarity, Aggregator agg) {
    SurfaceImage img(geometry,
                     polarity > 0 ? ChannelKind::ts_pos : ChannelKind::ts_neg,
                     agg, t_start, false);
    for (const PixelTrack& track : tracks) {
        if (track.p != polarity || track.times.empty()) continue;
        img.set(track.x, track.y, aggregate_rel(track.times, t_start, agg));
    }
    return img;
}

SurfaceImage time_surface(const EventStream& stream, std::int8_t polarity,
                          Aggregator agg) {
    const std::vector<PixelTrack> tracks = group_tracks(stream);
    return time_surface(tracks, stream.geometry(), stream.t_start(), polarity,
                        agg);
}

IetsSurfaceResult iets_surface(const EventStream& stream, std::int8_t polarity,
                               const FilterParams& params, Aggregator agg) {
    const SensorGeometry geom = stream.geometry();
    IetsSurfaceResult out{
        SurfaceImage(geom,
                     polarity > 0 ? ChannelKind::ts_pos : ChannelKind::ts_neg,
                     agg, stream.t_start(), false),
        std::vector<std::uint8_t>(geom.pixel_count(), 0)};

    for (const PixelTrack& track : group_tracks(stream)) {
        if (track.p != polarity || track.times.empty()) continue;
        const FilteredTrack ie = ie_filter(track, params);
        if (!ie.kept_times.empty()) {
            out.surface.set(track.x, track.y,
                            aggregate_rel(ie.kept_times, stream.t_start(), agg));
        } else {
            // No inceptive event: fall back to the mean time of all raw
            // events at this pixel, whatever the configured aggregator.
            out.surface.set(track.x, track.y,
                            mean_rel(track.times, stream.t_start()));
            out.fallback_used[static_cast<std::size_t>(track.y) * geom.width +
                              track.x] = 1;
        }
    }
    return out;
}

SurfaceImage count_channel(const EventStream& stream) {
    SurfaceImage img(stream.geometry(), ChannelKind::count, Aggregator::mean, 0,
                     false);
    std::vector<std::uint32_t> counts(stream.geometry().pixel_count(), 0);
    for (const Event& e : stream.events()) {
        ++counts[static_cast<std::size_t>(e.y) * stream.geometry().width + e.x];
    }
    for (std::uint32_t y = 0; y < stream.geometry().height; ++y) {
        for (std::uint32_t x = 0; x < stream.geometry().width; ++x) {
            const std::uint32_t c =
                counts[static_cast<std::size_t>(y) * stream.geometry().width + x];
            if (c > 0) img.set(x, y, static_cast<double>(c));
        }
    }
    return img;
}

SurfaceImage normalize(const SurfaceImage& raw) {
    SurfaceImage out(raw.geometry(), raw.kind(), raw.aggregator(), 0, true);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::uint32_t y = 0; y < raw.geometry().height; ++y) {
        for (std::uint32_t x = 0; x < raw.geometry().width; ++x) {
            if (!raw.has_value(x, y)) continue;
            const double v = raw.rel_value(x, y);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    const bool any = hi >= lo;
    for (std::uint32_t y = 0; y < raw.geometry().height; ++y) {
        for (std::uint32_t x = 0; x < raw.geometry().width; ++x) {
            if (!raw.has_value(x, y)) continue;
            const double v = raw.rel_value(x, y);
            double scaled = 1.0;
            if (raw.kind() == ChannelKind::count) {
                scaled = any && hi > 0.0 ? v / hi : 1.0;
            } else if (any && hi > lo) {
                scaled = (v - lo) / (hi - lo);
            }
            out.set(x, y, scaled);
        }
    }
    return out;
}

IetsFrame compose_frame(const EventStream& stream, const FilterParams& params,
                        Aggregator agg) {
    return compose_variant_frame(stream, SurfaceVariant::iets, params, agg);
}

IetsFrame compose_variant_frame(const EventStream& stream,
                                SurfaceVariant variant,
                                const FilterParams& params, Aggregator agg) {
    IetsFrame frame;
    frame.fallback_used.assign(stream.geometry().pixel_count(), 0);

    if (variant == SurfaceVariant::iets) {
        IetsSurfaceResult pos = iets_surface(stream, +1, params, agg);
        IetsSurfaceResult neg = iets_surface(stream, -1, params, agg);
        frame.pos = normalize(pos.surface);
        frame.neg = normalize(neg.surface);
        for (std::size_t i = 0; i < frame.fallback_used.size(); ++i) {
            frame.fallback_used[i] =
                pos.fallback_used[i] || neg.fallback_used[i];
        }
    } else {
        const EventStream& source =
            variant == SurfaceVariant::raw_ts
                ? stream
                : filter_stream(stream, FilterKind::fsae, params);
        frame.pos = normalize(time_surface(source, +1, agg));
        frame.neg = normalize(time_surface(source, -1, agg));
    }
    frame.count = normalize(count_channel(stream));
    return frame;
}

}  // namespace iets
