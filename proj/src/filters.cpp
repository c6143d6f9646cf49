#include "iets/filters.hpp"

#include <algorithm>
#include <stdexcept>

namespace iets {

FilteredTrack fsae_filter(const PixelTrack& track, const FilterParams& params) {
    FilteredTrack out{track.x, track.y, track.p, {}, track.times.size()};
    const auto& ts = track.times;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i == 0 || ts[i] - ts[i - 1] > params.tau_minus) {
            out.kept_times.push_back(ts[i]);
        }
    }
    return out;
}

FilteredTrack ie_filter(const PixelTrack& track, const FilterParams& params) {
    FilteredTrack out{track.x, track.y, track.p, {}, track.times.size()};
    const auto& ts = track.times;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const bool gap_before = i == 0 || ts[i] - ts[i - 1] > params.tau_minus;
        const bool burst_after =
            i + 1 < ts.size() && ts[i + 1] - ts[i] < params.tau_plus;
        if (gap_before && burst_after) {
            out.kept_times.push_back(ts[i]);
        }
    }
    return out;
}

FilteredTrack apply_filter(const PixelTrack& track, FilterKind kind,
                           const FilterParams& params) {
    switch (kind) {
        case FilterKind::fsae:
            return fsae_filter(track, params);
        case FilterKind::ie:
            return ie_filter(track, params);
    }
    throw std::logic_error("unknown filter kind");
}

EventStream filter_stream(const EventStream& stream, FilterKind kind,
                          const FilterParams& params) {
    std::vector<Event> kept;
    kept.reserve(stream.size());
    for (const PixelTrack& track : group_tracks(stream)) {
        const FilteredTrack filtered = apply_filter(track, kind, params);
        for (std::int64_t t : filtered.kept_times) {
            kept.push_back(Event{t, track.x, track.y, track.p});
        }
    }
    std::sort(kept.begin(), kept.end(), canonical_less);
    return EventStream::from_canonical(stream.geometry(), std::move(kept),
                                       stream.t_start(), stream.t_end());
}

}  // namespace iets
