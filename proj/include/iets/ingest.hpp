#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iets/event.hpp"

namespace iets {

/// Parse failure with the byte offset (binary formats) or line number (CSV)
/// where decoding stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::uint64_t position)
        : std::runtime_error(msg), position_(position) {}
    std::uint64_t position() const { return position_; }

private:
    std::uint64_t position_;
};

struct IngestStats {
    std::uint64_t records = 0;          // event records decoded
    std::uint64_t out_of_order = 0;     // timestamp regressions, re-sorted
    std::uint64_t skipped_non_dvs = 0;  // AEDAT2 APS/IMU records skipped
};

struct IngestResult {
    EventStream stream;
    IngestStats stats;
};

// Prophesee DAT: '%'-prefixed ASCII header lines (Width/Height keys
// recognized), an optional 2-byte event-type/size tag, then 8-byte
// little-endian records; see FORMATS.md for the exact bit layout. Geometry
// falls back to max coordinate + 1 when the header omits it. Out-of-order
// timestamps are re-sorted and counted in stats.
IngestResult read_prophesee_dat(std::span<const std::uint8_t> bytes);
IngestResult read_prophesee_dat_file(const std::string& path);
std::vector<std::uint8_t> write_prophesee_dat(const EventStream& stream);

// AEDAT 2.0: '#'-prefixed header lines including the #!AER-DAT2.0 version
// line, then 8-byte big-endian (address, timestamp) records. DVS addresses
// decode against the fixed 240x180 geometry; APS/IMU-flagged records are
// skipped and counted.
IngestResult read_aedat2(std::span<const std::uint8_t> bytes);
IngestResult read_aedat2_file(const std::string& path);
std::vector<std::uint8_t> write_aedat2(const EventStream& stream);

// Portable CSV: '#' comment lines, a width,height header, then one
// t,x,y,p line per event. write_csv_events() leads with a window comment the
// reader recognizes, making the round trip lossless for any canonical stream.
EventStream read_csv_events(const std::string& text);
EventStream read_csv_events_file(const std::string& path);
std::string write_csv_events(const EventStream& stream);

enum class EventFileFormat { auto_detect, prophesee_dat, aedat2, csv };

EventFileFormat format_from_name(const std::string& name);
const char* format_name(EventFileFormat format);

/// Reads one event file, dispatching on `format` (auto_detect uses the
/// extension: .dat, .aedat, .csv).
IngestResult read_event_file(const std::string& path, EventFileFormat format);
void write_event_file(const EventStream& stream, const std::string& path,
                      EventFileFormat format);

/// One labeled recording: a canonical stream plus its class tag and origin.
struct DatasetSample {
    EventStream stream;
    std::string label;
    std::string source_path;
    std::int64_t duration_us = 0;
};

struct LoadReport {
    std::vector<DatasetSample> samples;
    std::vector<std::pair<std::string, std::string>> skipped;  // path, reason
};

/// Loads a <root>/<label>/<files> tree in deterministic (sorted-path) order.
/// Unreadable or malformed files are skipped and reported, not fatal.
LoadReport load_dataset(const std::string& root, EventFileFormat format);

}  // namespace iets
