#include "iets/event.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace iets {

EventStream EventStream::from_canonical(SensorGeometry geometry,
                                        std::vector<Event> events,
                                        std::int64_t t_start,
                                        std::int64_t t_end) {
    EventStream s;
    s.geometry_ = geometry;
    s.events_ = std::move(events);
    s.t_start_ = t_start;
    s.t_end_ = t_end;
    return s;
}

bool operator==(const EventStream& a, const EventStream& b) {
    return a.geometry() == b.geometry() && a.t_start() == b.t_start() &&
           a.t_end() == b.t_end() && a.events() == b.events();
}

namespace {

void validate_events(std::span<const Event> events, SensorGeometry geometry) {
    for (std::size_t i = 0; i < events.size(); ++i) {
        const Event& e = events[i];
        if (!geometry.contains(e.x, e.y)) {
            throw std::invalid_argument(
                "event " + std::to_string(i) + " out of bounds: (" +
                std::to_string(e.x) + "," + std::to_string(e.y) +
                ") for geometry " + std::to_string(geometry.width) + "x" +
                std::to_string(geometry.height));
        }
        if (e.p != -1 && e.p != 1) {
            throw std::invalid_argument("event " + std::to_string(i) +
                                        " has polarity " + std::to_string(e.p) +
                                        ", expected -1 or +1");
        }
    }
}

std::vector<Event> canonical_events(std::span<const Event> events) {
    std::vector<Event> sorted(events.begin(), events.end());
    std::stable_sort(sorted.begin(), sorted.end(), canonical_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return sorted;
}

}  // namespace

EventStream sort_stream(std::span<const Event> events, SensorGeometry geometry) {
    validate_events(events, geometry);
    std::vector<Event> sorted = canonical_events(events);
    std::int64_t t_start = 0;
    std::int64_t t_end = 0;
    if (!sorted.empty()) {
        t_start = sorted.front().t;
        t_end = sorted.back().t;
    }
    return EventStream::from_canonical(geometry, std::move(sorted), t_start, t_end);
}

EventStream sort_stream(std::span<const Event> events, SensorGeometry geometry,
                        std::int64_t t_start, std::int64_t t_end) {
    if (t_end < t_start) {
        throw std::invalid_argument("window end precedes window start");
    }
    validate_events(events, geometry);
    std::vector<Event> sorted = canonical_events(events);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].t < t_start || sorted[i].t > t_end) {
            throw std::invalid_argument(
                "event " + std::to_string(i) + " at t=" +
                std::to_string(sorted[i].t) + " outside window [" +
                std::to_string(t_start) + "," + std::to_string(t_end) + "]");
        }
    }
    return EventStream::from_canonical(geometry, std::move(sorted), t_start, t_end);
}

std::vector<PixelTrack> group_tracks(const EventStream& stream) {
    const SensorGeometry& geom = stream.geometry();
    std::vector<PixelTrack> tracks;
    if (stream.empty()) return tracks;

    // Cell index = (y * width + x) * 2 + polarity bit. A dense index table is
    // used for ordinary sensor sizes, a hash map for pathologically large
    // inferred geometries.
    const std::size_t cells = geom.pixel_count() * 2;
    constexpr std::size_t kDenseLimit = std::size_t{1} << 26;

    auto cell_of = [&](const Event& e) {
        return (static_cast<std::size_t>(e.y) * geom.width + e.x) * 2 +
               (e.p > 0 ? 1 : 0);
    };

    if (cells <= kDenseLimit) {
        std::vector<std::int32_t> slot(cells, -1);
        for (const Event& e : stream.events()) {
            const std::size_t c = cell_of(e);
            if (slot[c] < 0) {
                slot[c] = static_cast<std::int32_t>(tracks.size());
                tracks.push_back(PixelTrack{e.x, e.y, e.p, {}});
            }
            tracks[static_cast<std::size_t>(slot[c])].times.push_back(e.t);
        }
    } else {
        std::unordered_map<std::size_t, std::size_t> slot;
        slot.reserve(stream.size() / 4 + 1);
        for (const Event& e : stream.events()) {
            auto [it, inserted] = slot.try_emplace(cell_of(e), tracks.size());
            if (inserted) tracks.push_back(PixelTrack{e.x, e.y, e.p, {}});
            tracks[it->second].times.push_back(e.t);
        }
    }

    std::sort(tracks.begin(), tracks.end(),
              [](const PixelTrack& a, const PixelTrack& b) {
                  if (a.y != b.y) return a.y < b.y;
                  if (a.x != b.x) return a.x < b.x;
                  return a.p < b.p;
              });
    return tracks;
}

}  // namespace iets
