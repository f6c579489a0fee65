#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "cohpol/channels.hpp"
#include "cohpol/density.hpp"

namespace cohpol::io {

/// State documents take exactly one of three top-level keys:
///   {"pure": {"a": [re, im], "b": ..., "c": ..., "d": ...}}
///   {"mixture": [{"weight": w, "pure": {...}}, ...]}
///   {"matrix": [[[re, im] x 4] x 4]}   (row-major, basis order)
/// Unknown keys are rejected. Errors carry the offending key path.
DensityMatrix parse_state(const nlohmann::json& doc);
DensityMatrix load_state(const std::filesystem::path& path);

/// Matrix form of a state document; doubles are written round-trip exact.
nlohmann::json state_to_json(const DensityMatrix& rho);

/// {"kind": "path-dephasing" | "birefringent-dephasing", "p": P}
/// or {"kind": "custom", "kraus": [matrix, ...]} with matrices encoded as in
/// the state "matrix" form. "p" is optional for the named kinds.
struct ChannelSpec {
    std::optional<ChannelKind> kind;  // empty for custom channels
    std::optional<double> p_interact;
    std::optional<KrausChannel> custom;

    /// The concrete channel: the named kind at p_interact, or the custom set.
    KrausChannel channel() const;
};

ChannelSpec parse_channel(const nlohmann::json& doc);
ChannelSpec load_channel(const std::filesystem::path& path);

/// Reads and parses a JSON file; throws InputError with file name and
/// line/column on failure.
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace cohpol::io
