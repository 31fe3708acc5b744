#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace railguard {

// Hazard kinds the on-board sensors can report.
enum class HazardKind {
    WheelFault,
    Fire,
    Obstacle,
    PantographFault,
};

enum class HazardSeverity {
    Normal,
    Urgent,
    Emergency,
};

// Conditions the train can be in. Normal means the absence of every other flag.
enum class SituationFlag : std::uint8_t {
    Normal = 1u << 0,
    Curved = 1u << 1,
    HighSpeed = 1u << 2,
    WheelFault = 1u << 3,
    Fire = 1u << 4,
    PantographRisk = 1u << 5,
};

// Small flag set. Keeps the invariant that Normal is present exactly when no
// other flag is: setting any non-Normal flag clears Normal, and an empty set
// reads as {Normal}.
class SituationFlags {
public:
    SituationFlags() = default;

    static SituationFlags of(std::initializer_list<SituationFlag> flags) {
        SituationFlags s;
        for (SituationFlag f : flags) s.set(f);
        return s;
    }

    void set(SituationFlag f) {
        if (f == SituationFlag::Normal) return;
        bits_ |= static_cast<std::uint8_t>(f);
    }

    bool has(SituationFlag f) const {
        if (f == SituationFlag::Normal) return bits_ == 0;
        return (bits_ & static_cast<std::uint8_t>(f)) != 0;
    }

    bool normal() const { return bits_ == 0; }

    std::vector<SituationFlag> active() const;

    bool operator==(const SituationFlags&) const = default;

private:
    std::uint8_t bits_ = 0;
};

// Piecewise-constant situation history, used to drive sensor rates over a
// simulated run. Entries are (time, flags), sorted by time; the value before
// the first entry is {Normal}.
struct FlagTimeline {
    std::vector<std::pair<double, SituationFlags>> entries;

    SituationFlags at(double t) const;

    // Appends a step, dropping it if the flags do not change. Times must be
    // non-decreasing.
    void append(double t, SituationFlags flags);
};

const char* to_string(SituationFlag f);
const char* to_string(HazardKind k);
const char* to_string(HazardSeverity s);

std::optional<SituationFlag> situation_flag_from(const std::string& name);
std::optional<HazardKind> hazard_kind_from(const std::string& name);
std::optional<HazardSeverity> hazard_severity_from(const std::string& name);

}  // namespace railguard
