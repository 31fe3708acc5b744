#include "railguard/scenario.hpp"

#include "railguard/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace railguard {

double kmh_to_ms(double kmh) { return kmh / 3.6; }

TrackProfile::TrackProfile(std::vector<TrackSegment> segments)
    : segments_(std::move(segments)) {
    starts_.reserve(segments_.size() + 1);
    starts_.push_back(0.0);
    for (const auto& seg : segments_) {
        if (!(seg.length > 0.0)) throw ValidationError("segment length > 0");
        bool straight = std::isinf(seg.radius);
        if (!straight && !(seg.radius >= 100.0))
            throw ValidationError("segment radius >= 100 m or infinite");
        if (!(std::abs(seg.grade) <= 0.05))
            throw ValidationError("segment grade in [-0.05, 0.05]");
        double prev = -1.0;
        for (double tag : seg.tag_positions) {
            if (!(tag >= 0.0 && tag < seg.length))
                throw ValidationError("tag position in [0, segment length)");
            if (!(tag > prev))
                throw ValidationError("tag positions strictly increasing");
            prev = tag;
        }
        starts_.push_back(starts_.back() + seg.length);
    }
}

std::pair<std::size_t, double> TrackProfile::segment_at(double s) const {
    double total = total_length();
    if (segments_.empty() || s < 0.0 || s > total) {
        std::ostringstream os;
        os << "chainage " << s << " outside track [0, " << total << "]";
        throw std::out_of_range(os.str());
    }
    if (s == total) return {segments_.size() - 1, segments_.back().length};
    auto it = std::upper_bound(starts_.begin(), starts_.end(), s);
    std::size_t idx = static_cast<std::size_t>(it - starts_.begin()) - 1;
    return {idx, s - starts_[idx]};
}

double TrackProfile::curvature_at(double s) const {
    double r = radius_at(s);
    return std::isinf(r) ? 0.0 : 1.0 / r;
}

double TrackProfile::radius_at(double s) const {
    return segments_[segment_at(s).first].radius;
}

double TrackProfile::grade_at(double s) const {
    return segments_[segment_at(s).first].grade;
}

std::vector<double> TrackProfile::tag_chainages() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        for (double tag : segments_[i].tag_positions) out.push_back(starts_[i] + tag);
    }
    return out;
}

std::vector<SensorSpec> default_sensor_suite(int n_vehicles) {
    std::vector<SensorSpec> out;
    for (int v = 0; v < n_vehicles; ++v) {
        SensorSpec tilt{"tilt-" + std::to_string(v), SensorKind::Tilt, v, 1.0,
                        {{SituationFlag::Curved, 5.0}}, 64};
        SensorSpec wheel{"wheel-" + std::to_string(v), SensorKind::WheelDefect, v, 2.0,
                         {{SituationFlag::HighSpeed, 4.0}}, 64};
        SensorSpec fire{"fire-" + std::to_string(v), SensorKind::Fire, v, 0.5, {}, 16};
        SensorSpec hum{"hum-" + std::to_string(v), SensorKind::Humidity, v, 0.2, {}, 16};
        out.insert(out.end(), {tilt, wheel, fire, hum});
    }
    SensorSpec panto{"panto-0", SensorKind::PantoVideo, 0, 5.0,
                     {{SituationFlag::HighSpeed, 4.0}}, 512};
    SensorSpec pos{"pos-0", SensorKind::PositionReader, 0, 5.0, {}, 32};
    out.push_back(panto);
    out.push_back(pos);
    return out;
}

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_num(const std::string& raw, int line) {
    std::string v = trim(raw);
    double scale = 1.0;
    if (v.size() > 3 && v.compare(v.size() - 3, 3, "kmh") == 0) {
        v = trim(v.substr(0, v.size() - 3));
        scale = 1.0 / 3.6;
    }
    if (v == "inf") return std::numeric_limits<double>::infinity();
    if (v == "-inf") return -std::numeric_limits<double>::infinity();
    double out = 0.0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        throw ParseError("bad number '" + raw + "'", line);
    return out * scale;
}

int parse_int(const std::string& raw, int line) {
    std::string v = trim(raw);
    int out = 0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        throw ParseError("bad integer '" + raw + "'", line);
    return out;
}

std::uint64_t parse_u64(const std::string& raw, int line) {
    std::string v = trim(raw);
    std::uint64_t out = 0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        throw ParseError("bad unsigned integer '" + raw + "'", line);
    return out;
}

bool parse_bool(const std::string& raw, int line) {
    std::string v = trim(raw);
    if (v == "1" || v == "true") return true;
    if (v == "0" || v == "false") return false;
    throw ParseError("bad flag '" + raw + "' (use 0/1)", line);
}

// Splits a compound entry token "key=value" at the first '='.
std::pair<std::string, std::string> split_field(const std::string& tok, int line) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
        throw ParseError("expected key=value, got '" + tok + "'", line);
    return {tok.substr(0, eq), tok.substr(eq + 1)};
}

TrackSegment parse_segment(const std::string& value, int line) {
    TrackSegment seg;
    for (const auto& tok : split_ws(value)) {
        auto [k, v] = split_field(tok, line);
        if (k == "length") {
            seg.length = parse_num(v, line);
        } else if (k == "radius") {
            seg.radius = parse_num(v, line);
        } else if (k == "grade") {
            seg.grade = parse_num(v, line);
        } else if (k == "tags") {
            for (const auto& t : split_on(v, ','))
                seg.tag_positions.push_back(parse_num(t, line));
        } else {
            throw ParseError("unknown segment field '" + k + "'", line);
        }
    }
    return seg;
}

BrakeModel parse_brake(const std::string& value, int line) {
    BrakeModel b;
    bool kind_seen = false;
    for (const auto& tok : split_ws(value)) {
        auto [k, v] = split_field(tok, line);
        if (k == "kind") {
            kind_seen = true;
            if (v == "friction") b.kind = BrakeKind::Friction;
            else if (v == "regenerative") b.kind = BrakeKind::Regenerative;
            else if (v == "eddy_current") b.kind = BrakeKind::EddyCurrent;
            else if (v == "spoiler") b.kind = BrakeKind::Spoiler;
            else throw ParseError("unknown brake kind '" + v + "'", line);
        } else if (k == "max_force") b.max_force = parse_num(v, line);
        else if (k == "adhesion_mu") b.adhesion_mu = parse_num(v, line);
        else if (k == "max_power") b.max_power = parse_num(v, line);
        else if (k == "peak_force") b.peak_force = parse_num(v, line);
        else if (k == "critical_speed") b.critical_speed = parse_num(v, line);
        else if (k == "area") b.area = parse_num(v, line);
        else if (k == "cd_max") b.cd_max = parse_num(v, line);
        else if (k == "angle_max") b.angle_max_deg = parse_num(v, line);
        else if (k == "response_time") b.response_time = parse_num(v, line);
        else if (k == "efficiency") b.efficiency = parse_num(v, line);
        else if (k == "comfort") b.comfort = parse_num(v, line);
        else if (k == "available") b.available = parse_bool(v, line);
        else throw ParseError("unknown brake field '" + k + "'", line);
    }
    if (!kind_seen) throw ParseError("brake entry needs kind=...", line);
    return b;
}

SensorSpec parse_sensor(const std::string& value, int line) {
    SensorSpec s;
    bool id_seen = false;
    for (const auto& tok : split_ws(value)) {
        auto [k, v] = split_field(tok, line);
        if (k == "id") {
            s.id = v;
            id_seen = true;
        } else if (k == "kind") {
            auto kind = sensor_kind_from(v);
            if (!kind) throw ParseError("unknown sensor kind '" + v + "'", line);
            s.kind = *kind;
        } else if (k == "vehicle") s.vehicle = parse_int(v, line);
        else if (k == "base_rate") s.base_rate = parse_num(v, line);
        else if (k == "payload") s.payload = parse_int(v, line);
        else if (k == "local") s.local = parse_bool(v, line);
        else if (k == "silent") s.silent = parse_bool(v, line);
        else if (k == "rate") {
            for (const auto& rule : split_on(v, ',')) {
                auto colon = rule.find(':');
                if (colon == std::string::npos)
                    throw ParseError("rate rule needs flag:multiplier, got '" + rule + "'",
                                     line);
                auto flag = situation_flag_from(rule.substr(0, colon));
                if (!flag)
                    throw ParseError("unknown situation flag '" + rule.substr(0, colon) + "'",
                                     line);
                s.rate_rules[*flag] = parse_num(rule.substr(colon + 1), line);
            }
        } else {
            throw ParseError("unknown sensor field '" + k + "'", line);
        }
    }
    if (!id_seen) throw ParseError("sensor entry needs id=...", line);
    return s;
}

HazardEvent parse_hazard(const std::string& value, int line) {
    HazardEvent h;
    for (const auto& tok : split_ws(value)) {
        auto [k, v] = split_field(tok, line);
        if (k == "time") h.time = parse_num(v, line);
        else if (k == "kind") {
            auto kind = hazard_kind_from(v);
            if (!kind) throw ParseError("unknown hazard kind '" + v + "'", line);
            h.kind = *kind;
        } else if (k == "severity") {
            auto sev = hazard_severity_from(v);
            if (!sev) throw ParseError("unknown hazard severity '" + v + "'", line);
            h.severity = *sev;
        } else if (k == "sensor") h.source_sensor = v;
        else throw ParseError("unknown hazard field '" + k + "'", line);
    }
    return h;
}

std::string fmt(double v) { return fmt_double(v); }

}  // namespace

Scenario load_scenario(const std::string& text) {
    Scenario sc;
    std::vector<TrackSegment> segments;
    std::vector<BrakeModel> brakes;
    std::vector<SensorSpec> sensors;

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("unterminated section header", line_no);
            section = line.substr(1, line.size() - 2);
            if (section != "track" && section != "train" && section != "network" &&
                section != "hazards" && section != "sim")
                throw ParseError("unknown section '" + section + "'", line_no);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key = value", line_no);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ParseError("key '" + key + "' outside a section", line_no);

        if (section == "track") {
            if (key == "segment") segments.push_back(parse_segment(value, line_no));
            else throw ParseError("unknown track key '" + key + "'", line_no);
        } else if (section == "train") {
            TrainConfig& t = sc.train;
            if (key == "brake") brakes.push_back(parse_brake(value, line_no));
            else if (key == "mass") t.mass = parse_num(value, line_no);
            else if (key == "frontal_area") t.frontal_area = parse_num(value, line_no);
            else if (key == "n_vehicles") t.n_vehicles = parse_int(value, line_no);
            else if (key == "high_speed_threshold")
                t.high_speed_threshold = parse_num(value, line_no);
            else if (key == "lateral_accel_limit")
                t.lateral_accel_limit = parse_num(value, line_no);
            else if (key == "lever_arm") t.lever_arm = parse_num(value, line_no);
            else if (key == "jerk_max") t.jerk_max = parse_num(value, line_no);
            else if (key == "w_response") t.blend_weights.response = parse_num(value, line_no);
            else if (key == "w_efficiency")
                t.blend_weights.efficiency = parse_num(value, line_no);
            else if (key == "w_comfort") t.blend_weights.comfort = parse_num(value, line_no);
            else if (key == "blend_lambda") t.blend_lambda = parse_num(value, line_no);
            else if (key == "side_down_force") t.side_down_force = parse_num(value, line_no);
            else if (key == "side_lateral_force")
                t.side_lateral_force = parse_num(value, line_no);
            else throw ParseError("unknown train key '" + key + "'", line_no);
        } else if (section == "network") {
            NetworkConfig& n = sc.network;
            if (key == "sensor") sensors.push_back(parse_sensor(value, line_no));
            else if (key == "mode") {
                auto mode = network_mode_from(value);
                if (!mode) throw ParseError("unknown network mode '" + value + "'", line_no);
                n.mode = *mode;
            } else if (key == "gateways") n.gateways = parse_int(value, line_no);
            else if (key == "slot_duration")
                n.superframe.slot_duration = parse_num(value, line_no);
            else if (key == "priority_slots")
                n.superframe.priority_slots = parse_int(value, line_no);
            else if (key == "contention_slots")
                n.superframe.contention_slots = parse_int(value, line_no);
            else if (key == "link_delay") n.link_delay = parse_num(value, line_no);
            else if (key == "max_attempts") n.backoff.max_attempts = parse_int(value, line_no);
            else if (key == "backoff_window")
                n.backoff.window_slots = parse_int(value, line_no);
            else if (key == "egress_delay") n.egress_delay = parse_num(value, line_no);
            else throw ParseError("unknown network key '" + key + "'", line_no);
        } else if (section == "hazards") {
            if (key == "hazard") sc.hazards.push_back(parse_hazard(value, line_no));
            else throw ParseError("unknown hazards key '" + key + "'", line_no);
        } else {  // sim
            if (key == "timestep") sc.timestep = parse_num(value, line_no);
            else if (key == "seed") sc.seed = parse_u64(value, line_no);
            else if (key == "duration") sc.duration = parse_num(value, line_no);
            else if (key == "air_density") sc.air_density = parse_num(value, line_no);
            else if (key == "initial_speed") sc.initial_speed = parse_num(value, line_no);
            else if (key == "extra_onset_delay")
                sc.extra_onset_delay = parse_num(value, line_no);
            else if (key == "diagnosis_timeout")
                sc.diagnosis_timeout = parse_num(value, line_no);
            else if (key == "drift_rate") sc.drift_rate = parse_num(value, line_no);
            else if (key == "service_decel") sc.service_decel = parse_num(value, line_no);
            else throw ParseError("unknown sim key '" + key + "'", line_no);
        }
    }

    sc.track = TrackProfile(std::move(segments));
    sc.train.brakes = brakes.empty() ? default_brakes(sc.train.mass) : std::move(brakes);
    sc.network.sensors =
        sensors.empty() ? default_sensor_suite(sc.train.n_vehicles) : std::move(sensors);
    validate(sc);
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario(buf.str());
}

void validate(const Scenario& sc) {
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw ValidationError(what);
    };
    require(!sc.track.segments().empty(), "track has at least one segment");
    require(sc.timestep > 0.0 && sc.timestep <= 0.1, "timestep in (0, 0.1]");
    require(std::isfinite(sc.initial_speed) && sc.initial_speed >= 0.0,
            "initial_speed >= 0");
    require(sc.duration >= 0.0, "duration >= 0");
    require(sc.air_density > 0.0, "air_density > 0");
    require(sc.extra_onset_delay >= 0.0, "extra_onset_delay >= 0");
    require(sc.diagnosis_timeout > 0.0, "diagnosis_timeout > 0");
    require(sc.drift_rate >= 0.0, "drift_rate >= 0");
    require(sc.service_decel > 0.0, "service_decel > 0");

    const TrainConfig& t = sc.train;
    require(t.mass > 0.0, "train mass > 0");
    require(t.frontal_area > 0.0, "frontal_area > 0");
    require(t.n_vehicles >= 1, "n_vehicles >= 1");
    require(t.high_speed_threshold > 0.0, "high_speed_threshold > 0");
    require(t.lateral_accel_limit > 0.0, "lateral_accel_limit > 0");
    require(t.lever_arm > 0.0, "lever_arm > 0");
    require(t.jerk_max > 0.0, "jerk_max > 0");
    require(t.blend_lambda >= 0.0, "blend_lambda >= 0");
    require(!t.brakes.empty(), "train has at least one brake");
    validate(t.blend_weights);
    for (const auto& b : t.brakes) validate_brake(b);

    const NetworkConfig& n = sc.network;
    require(n.gateways == 1 || n.gateways == 2, "gateways in {1, 2}");
    require(n.superframe.slot_duration > 0.0, "slot_duration > 0");
    require(n.superframe.priority_slots >= 1, "priority_slots >= 1");
    require(n.superframe.contention_slots >= 1, "contention_slots >= 1");
    require(n.link_delay >= 0.0, "link_delay >= 0");
    require(n.egress_delay >= 0.0, "egress_delay >= 0");
    require(n.backoff.max_attempts >= 1, "max_attempts >= 1");
    require(n.backoff.window_slots >= 1, "backoff_window >= 1");
    for (std::size_t i = 0; i < n.sensors.size(); ++i) {
        const SensorSpec& s = n.sensors[i];
        require(!s.id.empty(), "sensor id non-empty");
        require(s.vehicle >= 0 && s.vehicle < t.n_vehicles,
                "sensor '" + s.id + "': vehicle < n_vehicles");
        require(s.base_rate > 0.0, "sensor '" + s.id + "': base_rate > 0");
        require(s.payload > 0, "sensor '" + s.id + "': payload > 0");
        for (const auto& [flag, mult] : s.rate_rules)
            require(mult >= 1.0, "sensor '" + s.id + "': rate multiplier >= 1");
        for (std::size_t j = i + 1; j < n.sensors.size(); ++j)
            require(n.sensors[j].id != s.id, "duplicate sensor id '" + s.id + "'");
    }

    for (std::size_t i = 0; i < sc.hazards.size(); ++i) {
        const HazardEvent& h = sc.hazards[i];
        require(h.time >= 0.0, "hazard time >= 0");
        require(n.find_sensor(h.source_sensor) != nullptr,
                "hazard source sensor '" + h.source_sensor + "' not in network config");
        if (i > 0 && sc.hazards[i - 1].time > h.time) {
            std::ostringstream os;
            os << "hazards out of time order: t=" << fmt(sc.hazards[i - 1].time)
               << " precedes t=" << fmt(h.time);
            throw ValidationError(os.str());
        }
    }
}

std::string serialize(const Scenario& sc) {
    std::ostringstream out;
    out << "# railguard scenario\n";
    out << "[sim]\n";
    out << "timestep = " << fmt(sc.timestep) << "\n";
    if (sc.seed) out << "seed = " << *sc.seed << "\n";
    out << "duration = " << fmt(sc.duration) << "\n";
    out << "air_density = " << fmt(sc.air_density) << "\n";
    out << "initial_speed = " << fmt(sc.initial_speed) << "\n";
    out << "extra_onset_delay = " << fmt(sc.extra_onset_delay) << "\n";
    out << "diagnosis_timeout = " << fmt(sc.diagnosis_timeout) << "\n";
    out << "drift_rate = " << fmt(sc.drift_rate) << "\n";
    out << "service_decel = " << fmt(sc.service_decel) << "\n";

    out << "\n[track]\n";
    for (const auto& seg : sc.track.segments()) {
        out << "segment = length=" << fmt(seg.length) << " radius=" << fmt(seg.radius)
            << " grade=" << fmt(seg.grade);
        if (!seg.tag_positions.empty()) {
            out << " tags=";
            for (std::size_t i = 0; i < seg.tag_positions.size(); ++i)
                out << (i ? "," : "") << fmt(seg.tag_positions[i]);
        }
        out << "\n";
    }

    const TrainConfig& t = sc.train;
    out << "\n[train]\n";
    out << "mass = " << fmt(t.mass) << "\n";
    out << "frontal_area = " << fmt(t.frontal_area) << "\n";
    out << "n_vehicles = " << t.n_vehicles << "\n";
    out << "high_speed_threshold = " << fmt(t.high_speed_threshold) << "\n";
    out << "lateral_accel_limit = " << fmt(t.lateral_accel_limit) << "\n";
    out << "lever_arm = " << fmt(t.lever_arm) << "\n";
    out << "jerk_max = " << fmt(t.jerk_max) << "\n";
    out << "w_response = " << fmt(t.blend_weights.response) << "\n";
    out << "w_efficiency = " << fmt(t.blend_weights.efficiency) << "\n";
    out << "w_comfort = " << fmt(t.blend_weights.comfort) << "\n";
    out << "blend_lambda = " << fmt(t.blend_lambda) << "\n";
    out << "side_down_force = " << fmt(t.side_down_force) << "\n";
    out << "side_lateral_force = " << fmt(t.side_lateral_force) << "\n";
    for (const auto& b : t.brakes) {
        out << "brake = kind=" << to_string(b.kind);
        switch (b.kind) {
            case BrakeKind::Friction:
                out << " max_force=" << fmt(b.max_force)
                    << " adhesion_mu=" << fmt(b.adhesion_mu);
                break;
            case BrakeKind::Regenerative:
                out << " max_force=" << fmt(b.max_force) << " max_power=" << fmt(b.max_power);
                break;
            case BrakeKind::EddyCurrent:
                out << " peak_force=" << fmt(b.peak_force)
                    << " critical_speed=" << fmt(b.critical_speed);
                break;
            case BrakeKind::Spoiler:
                out << " area=" << fmt(b.area) << " cd_max=" << fmt(b.cd_max)
                    << " angle_max=" << fmt(b.angle_max_deg);
                break;
        }
        out << " response_time=" << fmt(b.response_time)
            << " efficiency=" << fmt(b.efficiency) << " comfort=" << fmt(b.comfort);
        if (!b.available) out << " available=0";
        out << "\n";
    }

    const NetworkConfig& n = sc.network;
    out << "\n[network]\n";
    out << "mode = " << to_string(n.mode) << "\n";
    out << "gateways = " << n.gateways << "\n";
    out << "slot_duration = " << fmt(n.superframe.slot_duration) << "\n";
    out << "priority_slots = " << n.superframe.priority_slots << "\n";
    out << "contention_slots = " << n.superframe.contention_slots << "\n";
    out << "link_delay = " << fmt(n.link_delay) << "\n";
    out << "max_attempts = " << n.backoff.max_attempts << "\n";
    out << "backoff_window = " << n.backoff.window_slots << "\n";
    out << "egress_delay = " << fmt(n.egress_delay) << "\n";
    for (const auto& s : n.sensors) {
        out << "sensor = id=" << s.id << " kind=" << to_string(s.kind)
            << " vehicle=" << s.vehicle << " base_rate=" << fmt(s.base_rate)
            << " payload=" << s.payload;
        if (!s.rate_rules.empty()) {
            out << " rate=";
            bool first = true;
            for (const auto& [flag, mult] : s.rate_rules) {
                out << (first ? "" : ",") << to_string(flag) << ":" << fmt(mult);
                first = false;
            }
        }
        if (s.local) out << " local=1";
        if (s.silent) out << " silent=1";
        out << "\n";
    }

    if (!sc.hazards.empty()) {
        out << "\n[hazards]\n";
        for (const auto& h : sc.hazards) {
            out << "hazard = time=" << fmt(h.time) << " kind=" << to_string(h.kind)
                << " severity=" << to_string(h.severity) << " sensor=" << h.source_sensor
                << "\n";
        }
    }
    return out.str();
}

}  // namespace railguard
