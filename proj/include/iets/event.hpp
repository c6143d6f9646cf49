#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace iets {

/// One sensor event: pixel coordinates, timestamp in integer microseconds,
/// polarity in {-1, +1}. Timestamps are kept integral end to end; no
/// floating-point time exists in the core.
struct Event {
    std::int64_t t = 0;
    std::uint16_t x = 0;
    std::uint16_t y = 0;
    std::int8_t p = 1;
};

constexpr bool operator==(const Event& a, const Event& b) {
    return a.t == b.t && a.x == b.x && a.y == b.y && a.p == b.p;
}

/// Canonical total order: (t, y, x, p) ascending.
constexpr bool canonical_less(const Event& a, const Event& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.y != b.y) return a.y < b.y;
    if (a.x != b.x) return a.x < b.x;
    return a.p < b.p;
}

struct SensorGeometry {
    std::uint32_t width = 0;
    std::uint32_t height = 0;

    constexpr bool contains(std::uint32_t x, std::uint32_t y) const {
        return x < width && y < height;
    }
    constexpr std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }
};

constexpr bool operator==(const SensorGeometry& a, const SensorGeometry& b) {
    return a.width == b.width && a.height == b.height;
}

/// Time-ordered, duplicate-free event collection with sensor geometry and a
/// time window covering every event. Immutable after construction.
class EventStream {
public:
    EventStream() = default;

    /// Wraps events that are already canonically ordered and deduplicated.
    /// Callers outside this library should go through sort_stream().
    static EventStream from_canonical(SensorGeometry geometry,
                                      std::vector<Event> events,
                                      std::int64_t t_start, std::int64_t t_end);

    const std::vector<Event>& events() const { return events_; }
    const SensorGeometry& geometry() const { return geometry_; }
    std::int64_t t_start() const { return t_start_; }
    std::int64_t t_end() const { return t_end_; }
    std::int64_t duration_us() const { return t_end_ - t_start_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }

private:
    SensorGeometry geometry_{};
    std::vector<Event> events_{};
    std::int64_t t_start_ = 0;
    std::int64_t t_end_ = 0;
};

bool operator==(const EventStream& a, const EventStream& b);

/// Ordered event times of one (x, y, p) cell. Times are strictly increasing;
/// exact duplicates were collapsed at canonicalization.
struct PixelTrack {
    std::uint16_t x = 0;
    std::uint16_t y = 0;
    std::int8_t p = 1;
    std::vector<std::int64_t> times;
};

/// Canonicalizes an arbitrary event sequence: sorts by (t, y, x, p), collapses
/// exact duplicates, and checks bounds/polarity. The window defaults to
/// [min t, max t] ([0, 0] for an empty input).
/// Throws std::invalid_argument naming the offending input index on an
/// out-of-bounds coordinate or a polarity outside {-1, +1}.
EventStream sort_stream(std::span<const Event> events, SensorGeometry geometry);

/// Same, with an explicit window; every event must satisfy
/// t_start <= t <= t_end.
EventStream sort_stream(std::span<const Event> events, SensorGeometry geometry,
                        std::int64_t t_start, std::int64_t t_end);

/// Splits a canonical stream into per-(x, y, p) tracks. Tracks are emitted in
/// (y, x, p) ascending order; only cells with at least one event appear.
std::vector<PixelTrack> group_tracks(const EventStream& stream);

}  // namespace iets
