#include "railguard/netsim.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <map>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "railguard/io.hpp"

namespace railguard {

double sampling_interval(const SensorSpec& sensor, const SituationFlags& flags) {
    double rate = sensor.base_rate;
    for (const auto& [flag, mult] : sensor.rate_rules) {
        if (flags.has(flag)) rate *= mult;
    }
    return 1.0 / rate;
}

int priority_of(SensorKind kind, const SituationFlags& flags, bool is_alert) {
    if (is_alert) return 0;
    switch (kind) {
        case SensorKind::Tilt:
            if (flags.has(SituationFlag::Curved)) return 1;
            break;
        case SensorKind::PantoVideo:
        case SensorKind::WheelDefect:
            if (flags.has(SituationFlag::HighSpeed)) return 1;
            break;
        default:
            break;
    }
    return 2;
}

std::vector<Hop> route_of(const NetworkConfig& config, const SensorSpec& sensor,
                          int priority_class) {
    const bool safety = priority_class == 0 && config.gateways == 2;
    const Hop sink{safety ? HopKind::SafetyGateway : HopKind::Gateway, 0};
    if (config.mode == NetworkMode::Direct) return {sink};
    if (sensor.local) return {{HopKind::ClusterHead, sensor.vehicle}};
    return {{HopKind::ClusterHead, sensor.vehicle}, sink};
}

namespace {

// splitmix64 finalizer, used to derive independent per-node RNG streams from
// the run seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

struct LiveMessage {
    Message msg;
    std::vector<Hop> route;
    std::size_t sensor_index = 0;
    int hop = 0;       // index of the hop currently being attempted
    int attempts = 0;  // contention attempts at the current hop
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// A transmitting station. Sensors and cluster heads each get one; classes 1
// and 2 queue here and contend head-of-line on the node's channel.
struct Node {
    std::deque<std::size_t> q1;
    std::deque<std::size_t> q2;
    std::size_t hol = kNone;
    int backoff = 0;
    std::mt19937_64 eng;
};

// One receiving station's airspace. Class-0 traffic queues at the channel and
// is served FIFO in priority slots (all slots for the safety gateway, which
// carries nothing else).
struct Channel {
    bool all_priority = false;
    std::deque<std::size_t> q0;
    std::vector<std::size_t> senders;  // node indices contending here
};

struct PendingArrival {
    double time = 0.0;
    std::size_t index = kNone;  // message index; doubles as the tie-break

    bool operator>(const PendingArrival& o) const {
        if (time != o.time) return time > o.time;
        return index > o.index;
    }
};

}  // namespace

std::vector<DeliveryRecord> run_network(const NetworkConfig& config,
                                        const FlagTimeline& timeline,
                                        const std::vector<Alert>& alerts,
                                        double duration, std::uint64_t seed) {
    if (!(duration > 0.0)) {
        throw std::invalid_argument("network duration must be > 0");
    }
    for (const auto& alert : alerts) {
        if (config.find_sensor(alert.sensor_id) == nullptr) {
            throw std::invalid_argument("alert from unknown sensor '" +
                                        alert.sensor_id + "'");
        }
    }

    // Generate every creation event up front: routine samples on each sensor's
    // situation-driven schedule plus the injected alerts. Ids follow creation
    // time, ties broken by generation order.
    struct Creation {
        double time;
        std::size_t sensor;  // index into config.sensors
        bool is_alert;
    };
    std::vector<Creation> creations;
    for (std::size_t si = 0; si < config.sensors.size(); ++si) {
        const auto& sensor = config.sensors[si];
        if (sensor.silent) continue;
        double t = 0.0;
        while (true) {
            t += sampling_interval(sensor, timeline.at(t));
            if (t >= duration) break;
            creations.push_back({t, si, false});
        }
    }
    for (const auto& alert : alerts) {
        for (std::size_t si = 0; si < config.sensors.size(); ++si) {
            if (config.sensors[si].id == alert.sensor_id) {
                creations.push_back({alert.time, si, true});
                break;
            }
        }
    }
    std::stable_sort(creations.begin(), creations.end(),
                     [](const Creation& a, const Creation& b) { return a.time < b.time; });

    std::vector<LiveMessage> messages;
    messages.reserve(creations.size());
    for (std::size_t i = 0; i < creations.size(); ++i) {
        const auto& c = creations[i];
        const auto& sensor = config.sensors[c.sensor];
        LiveMessage lm;
        lm.msg.id = i;
        lm.sensor_index = c.sensor;
        lm.msg.sensor_id = sensor.id;
        lm.msg.created_at = c.time;
        lm.msg.priority_class =
            priority_of(sensor.kind, timeline.at(c.time), c.is_alert);
        lm.msg.size = sensor.payload;
        lm.route = route_of(config, sensor, lm.msg.priority_class);
        lm.msg.hops_remaining = static_cast<int>(lm.route.size());
        messages.push_back(std::move(lm));
    }

    // Topology: one channel per receiving station, one node per transmitter.
    const bool hierarchical = config.mode == NetworkMode::Hierarchical;
    std::map<int, std::size_t> vehicle_channel;  // vehicle -> channel index
    std::map<int, std::size_t> head_node;        // vehicle -> node index
    std::vector<Channel> channels;
    std::vector<Node> nodes;

    if (hierarchical) {
        for (const auto& sensor : config.sensors) {
            if (!vehicle_channel.count(sensor.vehicle)) {
                vehicle_channel[sensor.vehicle] = channels.size();
                channels.emplace_back();
            }
        }
    }
    const std::size_t gw_channel = channels.size();
    channels.emplace_back();
    std::size_t safety_channel = kNone;
    if (config.gateways == 2) {
        safety_channel = channels.size();
        channels.emplace_back();
        channels.back().all_priority = true;
    }

    std::vector<std::size_t> sensor_node(config.sensors.size());
    for (std::size_t si = 0; si < config.sensors.size(); ++si) {
        const std::size_t ch =
            hierarchical ? vehicle_channel.at(config.sensors[si].vehicle) : gw_channel;
        sensor_node[si] = nodes.size();
        nodes.emplace_back();
        channels[ch].senders.push_back(sensor_node[si]);
    }
    if (hierarchical) {
        for (const auto& [vehicle, ch] : vehicle_channel) {
            head_node[vehicle] = nodes.size();
            nodes.emplace_back();
            channels[gw_channel].senders.push_back(head_node[vehicle]);
        }
    }
    for (std::size_t ni = 0; ni < nodes.size(); ++ni) {
        nodes[ni].eng.seed(mix_seed(seed, ni));
    }

    auto channel_of = [&](const Hop& hop) -> std::size_t {
        switch (hop.kind) {
            case HopKind::ClusterHead:
                return vehicle_channel.at(hop.index);
            case HopKind::Gateway:
                return gw_channel;
            case HopKind::SafetyGateway:
                return safety_channel;
        }
        return gw_channel;
    };

    // Node transmitting the current hop of `m` (contention classes only).
    auto sender_of = [&](const LiveMessage& m) -> std::size_t {
        if (m.hop == 0) return sensor_node[m.sensor_index];
        return head_node.at(config.sensors[m.sensor_index].vehicle);
    };

    std::vector<DeliveryRecord> records(messages.size());
    std::size_t unresolved = messages.size();

    std::priority_queue<PendingArrival, std::vector<PendingArrival>,
                        std::greater<PendingArrival>>
        pending;
    for (std::size_t i = 0; i < messages.size(); ++i) {
        pending.push({messages[i].msg.created_at, i});
    }

    const double slot = config.superframe.slot_duration;
    const int frame_slots =
        config.superframe.priority_slots + config.superframe.contention_slots;
    // Tolerates the rounding in k*slot versus accumulated event times; real
    // gaps are never smaller than a slot fraction of link_delay.
    const double eps = slot * 1e-6;

    auto enqueue = [&](std::size_t mi) {
        LiveMessage& m = messages[mi];
        if (m.msg.priority_class == 0) {
            channels[channel_of(m.route[m.hop])].q0.push_back(mi);
        } else {
            Node& n = nodes[sender_of(m)];
            (m.msg.priority_class == 1 ? n.q1 : n.q2).push_back(mi);
        }
    };

    auto finish = [&](std::size_t mi, std::optional<double> delivered_at) {
        const LiveMessage& m = messages[mi];
        records[mi] = {m.msg.id,       m.msg.sensor_id, m.msg.priority_class,
                       m.msg.created_at, delivered_at,  m.hop};
        --unresolved;
    };

    // Message leaves on the slot ending at slot_end; lands one link_delay
    // later, either done or queued for its next hop.
    auto transmit = [&](std::size_t mi, double slot_end) {
        LiveMessage& m = messages[mi];
        const double arrival = slot_end + config.link_delay;
        m.hop += 1;
        m.msg.hops_remaining -= 1;
        m.attempts = 0;
        if (m.hop == static_cast<int>(m.route.size())) {
            finish(mi, arrival);
        } else {
            pending.push({arrival, mi});
        }
    };

    auto draw_backoff = [&](Node& n, int priority_class) {
        const int w2 = std::max(1, config.backoff.window_slots);
        const int w = priority_class == 1 ? std::max(1, w2 / 2) : w2;
        n.backoff = static_cast<int>(n.eng() % static_cast<std::uint64_t>(w));
    };

    std::vector<std::size_t> attempters;
    std::size_t k = 0;  // global slot index; all channels share the frame clock
    while (unresolved > 0) {
        // Idle fast-forward: nothing queued anywhere, so jump to the slot that
        // can ingest the next pending arrival.
        bool queues_empty = true;
        for (const auto& ch : channels) {
            if (!ch.q0.empty()) queues_empty = false;
        }
        for (const auto& n : nodes) {
            if (!n.q1.empty() || !n.q2.empty()) queues_empty = false;
        }
        if (queues_empty) {
            if (pending.empty()) {
                throw std::logic_error("network simulation stalled with " +
                                       std::to_string(unresolved) +
                                       " unresolved messages");
            }
            const double next_time = pending.top().time;
            const auto target =
                static_cast<std::size_t>(std::ceil(next_time / slot - 1e-9));
            k = std::max(k, target);
        }

        const double slot_start = static_cast<double>(k) * slot;
        const double slot_end = slot_start + slot;
        while (!pending.empty() && pending.top().time <= slot_start + eps) {
            const std::size_t mi = pending.top().index;
            pending.pop();
            enqueue(mi);
        }

        const bool priority_phase =
            static_cast<int>(k % frame_slots) < config.superframe.priority_slots;

        for (std::size_t ci = 0; ci < channels.size(); ++ci) {
            Channel& ch = channels[ci];
            if (priority_phase || ch.all_priority) {
                if (!ch.q0.empty()) {
                    const std::size_t mi = ch.q0.front();
                    ch.q0.pop_front();
                    transmit(mi, slot_end);
                }
                continue;
            }

            // Contention slot: refresh each sender's head-of-line pick, then
            // let every station whose backoff has expired fire at once.
            attempters.clear();
            for (std::size_t ni : ch.senders) {
                Node& n = nodes[ni];
                const std::size_t cand =
                    !n.q1.empty() ? n.q1.front() : (!n.q2.empty() ? n.q2.front() : kNone);
                if (cand != n.hol) {
                    n.hol = cand;
                    if (cand != kNone) draw_backoff(n, messages[cand].msg.priority_class);
                }
                if (n.hol != kNone && n.backoff == 0) attempters.push_back(ni);
            }

            if (attempters.size() == 1) {
                Node& n = nodes[attempters.front()];
                const std::size_t mi = n.hol;
                (messages[mi].msg.priority_class == 1 ? n.q1 : n.q2).pop_front();
                n.hol = kNone;
                transmit(mi, slot_end);
            } else if (attempters.size() > 1) {
                for (std::size_t ni : attempters) {
                    Node& n = nodes[ni];
                    const std::size_t mi = n.hol;
                    LiveMessage& m = messages[mi];
                    m.attempts += 1;
                    if (m.attempts >= config.backoff.max_attempts) {
                        (m.msg.priority_class == 1 ? n.q1 : n.q2).pop_front();
                        n.hol = kNone;
                        finish(mi, std::nullopt);
                    } else {
                        draw_backoff(n, m.msg.priority_class);
                    }
                }
            }
            for (std::size_t ni : ch.senders) {
                Node& n = nodes[ni];
                const bool attempted =
                    std::find(attempters.begin(), attempters.end(), ni) != attempters.end();
                if (n.hol != kNone && !attempted && n.backoff > 0) n.backoff -= 1;
            }
        }
        k += 1;
    }

    return records;
}

LatencyMetrics latency_metrics(const std::vector<DeliveryRecord>& records,
                               int priority_class) {
    LatencyMetrics m;
    std::vector<double> latencies;
    for (const auto& r : records) {
        if (r.priority_class != priority_class) continue;
        m.count += 1;
        if (r.delivered_at) latencies.push_back(*r.delivered_at - r.created_at);
    }
    if (m.count == 0) {
        throw std::invalid_argument("no records for priority class " +
                                    std::to_string(priority_class));
    }
    m.delivered_ratio = static_cast<double>(latencies.size()) /
                        static_cast<double>(m.count);
    if (latencies.empty()) return m;

    std::sort(latencies.begin(), latencies.end());
    double sum = 0.0;
    for (double v : latencies) sum += v;
    m.mean = sum / static_cast<double>(latencies.size());
    auto nearest_rank = [&](double pct) {
        const auto n = static_cast<double>(latencies.size());
        auto rank = static_cast<std::size_t>(std::ceil(pct / 100.0 * n));
        if (rank == 0) rank = 1;
        return latencies[rank - 1];
    };
    m.p50 = nearest_rank(50.0);
    m.p99 = nearest_rank(99.0);
    return m;
}

std::string records_csv(const std::vector<DeliveryRecord>& records) {
    std::ostringstream out;
    out << "msg_id,sensor,class,created_at,delivered_at,hops,dropped\n";
    for (const auto& r : records) {
        out << r.message_id << ',' << r.sensor_id << ',' << r.priority_class
            << ',' << fmt_double(r.created_at) << ',';
        if (r.delivered_at) out << fmt_double(*r.delivered_at);
        out << ',' << r.hop_count << ',' << (r.dropped() ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string metrics_json(const std::vector<DeliveryRecord>& records) {
    nlohmann::ordered_json doc;
    for (int cls = 0; cls <= 2; ++cls) {
        const bool any = std::any_of(
            records.begin(), records.end(),
            [&](const DeliveryRecord& r) { return r.priority_class == cls; });
        if (!any) continue;
        const LatencyMetrics m = latency_metrics(records, cls);
        nlohmann::ordered_json entry;
        entry["count"] = m.count;
        entry["delivered_ratio"] = m.delivered_ratio;
        if (m.mean) entry["mean"] = *m.mean;
        if (m.p50) entry["p50"] = *m.p50;
        if (m.p99) entry["p99"] = *m.p99;
        doc[std::to_string(cls)] = entry;
    }
    return doc.dump(2) + "\n";
}

}  // namespace railguard
