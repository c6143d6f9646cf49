#pragma once

#include <cstdint>
#include <vector>

#include "iets/event.hpp"

namespace iets {

/// Temporal thresholds in microseconds. tau_minus gates the gap to the
/// previous event, tau_plus the gap to the next one. Defaults are 12 ms each.
struct FilterParams {
    std::int64_t tau_minus = 12000;
    std::int64_t tau_plus = 12000;
};

enum class FilterKind { fsae, ie };

/// Survivors of a temporal filter over one pixel track. kept_times is a
/// subsequence of the source track's times.
struct FilteredTrack {
    std::uint16_t x = 0;
    std::uint16_t y = 0;
    std::int8_t p = 1;
    std::vector<std::int64_t> kept_times;
    std::size_t source_count = 0;
};

/// FSAE: keeps t_i iff t_i - t_{i-1} > tau_minus, where t_{i-1} is the
/// previous raw track time. The first event of a track has no predecessor and
/// is kept unconditionally.
FilteredTrack fsae_filter(const PixelTrack& track, const FilterParams& params);

/// Inceptive events: keeps t_i iff the FSAE predecessor-gap condition holds
/// (vacuously for the first event) AND a successor exists with
/// t_{i+1} - t_i < tau_plus. An event with no successor within tau_plus is
/// never an IE, so isolated events and every track's last event are dropped.
FilteredTrack ie_filter(const PixelTrack& track, const FilterParams& params);

FilteredTrack apply_filter(const PixelTrack& track, FilterKind kind,
                           const FilterParams& params);

/// Filters every (x, y, p) track of a canonical stream and re-canonicalizes
/// the surviving events. Geometry and window are preserved.
EventStream filter_stream(const EventStream& stream, FilterKind kind,
                          const FilterParams& params);

}  // namespace iets
