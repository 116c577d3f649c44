// Copyright 2026 The pqcsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pqc/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <map>
#include <sstream>

#include "pqc/error.hpp"

namespace pqc {

size_t max_rotations(size_t num_qubits, size_t layers) {
    return num_qubits * (3 * layers + 1);
}

size_t min_param_count(size_t num_qubits) {
    return 2 * (size_t{1} << num_qubits) - 2;
}

namespace {

std::vector<RotationSlot> build_slots(size_t n, size_t layers, const AxisScheme &axes) {
    std::vector<RotationSlot> slots;
    slots.reserve(max_rotations(n, layers));
    auto add = [&](Stage stage, size_t layer, std::span<const Axis> stage_axes) {
        for (size_t q = 0; q < n; ++q) {
            for (Axis a : stage_axes) {
                slots.push_back({stage, layer, q, a, slots.size()});
            }
        }
    };
    add(Stage::FirstLayer, 1, axes.first);
    for (size_t k = 2; k <= layers; ++k) {
        add(Stage::BulkLayer, k, axes.bulk);
    }
    add(Stage::Final, layers + 1, axes.final);
    return slots;
}

}  // namespace

CircuitTemplate::CircuitTemplate(size_t num_qubits, size_t layers, EntanglerKind entangler, AxisScheme axes)
    : num_qubits_(num_qubits), layers_(layers), entangler_(entangler), axes_(axes) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(num_qubits) + " outside [1, 12]");
    }
    if (layers < 1) {
        throw ArgumentError("circuit needs at least one layer");
    }
    slots_ = std::make_shared<const std::vector<RotationSlot>>(build_slots(num_qubits, layers, axes_));
    layout_ = std::make_shared<const std::vector<PlacedGate>>(entangler_layout(entangler, num_qubits));
}

size_t CircuitTemplate::max_rotations() const {
    return pqc::max_rotations(num_qubits_, layers_);
}

std::vector<RotationSlot> slot_list(const CircuitTemplate &tmpl) {
    return tmpl.slots();
}

RotationConfiguration::RotationConfiguration(CircuitTemplate tmpl, std::vector<size_t> active_slots)
    : template_(std::move(tmpl)), active_(std::move(active_slots)) {
    std::sort(active_.begin(), active_.end());
    const size_t m_max = template_.max_rotations();
    for (size_t i = 0; i < active_.size(); ++i) {
        if (active_[i] >= m_max) {
            throw ArgumentError("slot id " + std::to_string(active_[i]) + " out of range [0, " +
                                std::to_string(m_max) + ")");
        }
        if (i > 0 && active_[i] == active_[i - 1]) {
            throw ArgumentError("slot id " + std::to_string(active_[i]) + " listed twice");
        }
    }
}

RotationConfiguration random_configuration(const CircuitTemplate &tmpl, size_t m, Rng &rng) {
    const size_t m_max = tmpl.max_rotations();
    if (m > m_max) {
        throw ArgumentError("m = " + std::to_string(m) + " exceeds the " + std::to_string(m_max) +
                            " rotation slots of the template");
    }
    std::vector<size_t> ids(m_max);
    for (size_t i = 0; i < m_max; ++i) {
        ids[i] = i;
    }
    std::vector<size_t> chosen;
    chosen.reserve(m);
    std::sample(ids.begin(), ids.end(), std::back_inserter(chosen), static_cast<std::ptrdiff_t>(m), rng);
    return RotationConfiguration(tmpl, std::move(chosen));
}

Statevector run_circuit(const RotationConfiguration &config, std::span<const double> theta) {
    const auto &active = config.active_slots();
    if (theta.size() != active.size()) {
        throw ArgumentError("expected " + std::to_string(active.size()) + " angles, got " +
                            std::to_string(theta.size()));
    }
    const CircuitTemplate &tmpl = config.circuit();
    const auto &slots = tmpl.slots();
    Statevector state = Statevector::zero(tmpl.num_qubits());

    // Slots are numbered in application order, and an entangler block follows every layer
    // except the final stage, so one pass over the active slots suffices.
    size_t next_layer_to_close = 1;
    auto close_layers_before = [&](size_t layer) {
        while (next_layer_to_close < layer && next_layer_to_close <= tmpl.layers()) {
            for (const auto &pg : tmpl.entangler_gates()) {
                state.apply(pg.gate, pg.targets);
            }
            ++next_layer_to_close;
        }
    };
    for (size_t i = 0; i < active.size(); ++i) {
        const RotationSlot &slot = slots[active[i]];
        close_layers_before(slot.layer);
        state.apply_single(rotation_matrix(slot.axis, theta[i]), slot.qubit);
    }
    close_layers_before(tmpl.layers() + 1);
    return state;
}

std::string format_configuration(const RotationConfiguration &config, uint64_t seed) {
    const auto &t = config.circuit();
    std::ostringstream out;
    out << "N=" << t.num_qubits() << '\n';
    out << "L=" << t.layers() << '\n';
    out << "entangler=" << to_string(t.entangler()) << '\n';
    out << "m=" << config.num_active() << '\n';
    out << "seed=" << seed << '\n';
    out << "active_slots=";
    for (size_t i = 0; i < config.active_slots().size(); ++i) {
        out << (i ? "," : "") << config.active_slots()[i];
    }
    out << '\n';
    return out.str();
}

namespace {

uint64_t parse_uint(const std::string &s, size_t line) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError("expected a non-negative integer, got '" + s + "'", line);
    }
    return v;
}

}  // namespace

ConfigurationRecord parse_configuration(const std::string &text) {
    std::map<std::string, std::pair<std::string, size_t>> kv;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ParseError("expected key=value", line_no);
        }
        kv[line.substr(0, eq)] = {line.substr(eq + 1), line_no};
    }
    auto get = [&](const std::string &key) -> std::pair<std::string, size_t> {
        auto it = kv.find(key);
        if (it == kv.end()) {
            throw ParseError("missing key '" + key + "'", 0);
        }
        return it->second;
    };
    auto [n_s, n_line] = get("N");
    auto [l_s, l_line] = get("L");
    auto [e_s, e_line] = get("entangler");
    auto [m_s, m_line] = get("m");
    auto [seed_s, seed_line] = get("seed");
    auto [slots_s, slots_line] = get("active_slots");

    EntanglerKind kind;
    try {
        kind = parse_entangler(e_s);
    } catch (const ArgumentError &e) {
        throw ParseError(e.what(), e_line);
    }
    std::vector<size_t> active;
    std::string item;
    std::istringstream items(slots_s);
    while (std::getline(items, item, ',')) {
        active.push_back(parse_uint(item, slots_line));
    }
    size_t m = parse_uint(m_s, m_line);
    if (m != active.size()) {
        throw FormatError("m=" + std::to_string(m) + " but active_slots lists " + std::to_string(active.size()) +
                          " slots");
    }
    CircuitTemplate tmpl(parse_uint(n_s, n_line), parse_uint(l_s, l_line), kind);
    return {RotationConfiguration(std::move(tmpl), std::move(active)), parse_uint(seed_s, seed_line)};
}

}  // namespace pqc
