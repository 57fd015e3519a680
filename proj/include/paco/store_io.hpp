#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "paco/store.hpp"

namespace paco {

/// Text persistence format, one point per line sorted by id:
///
///   paco-store v1
///   id,lon,lat,t
///
/// Coordinates are decimal degrees with at least 7 fractional digits and
/// enough digits to reproduce the stored double exactly; t is integer
/// seconds. Output is byte-stable for a given point set.
std::string serialize_store(const StoreBackend& store);

void save_store(const StoreBackend& store, const std::filesystem::path& path);

/// Throws ParseError (with the offending line) on malformed input or a
/// duplicate id.
std::unique_ptr<StoreBackend> load_store(std::istream& in, BackendKind kind);
std::unique_ptr<StoreBackend> load_store(const std::filesystem::path& path, BackendKind kind);

/// Fixed-notation decimal that parses back to exactly `v`, zero-padded
/// to at least 7 fractional digits.
std::string format_coord(double v);

}  // namespace paco
