// Copyright 2026 The ampamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ampamp/errors.hpp"

namespace ampamp {

enum class GateKind { H, X, P, CX };

/// One gate of the {H, X, P, CX} basis. Qubit indices are zero-based; for CX
/// `q0` is the control and `q1` the target.
struct Gate {
    GateKind kind;
    int q0;
    int q1 = -1;
    double angle = 0.0;

    static Gate h(int q) { return {GateKind::H, q}; }
    static Gate x(int q) { return {GateKind::X, q}; }
    static Gate p(int q, double angle) { return {GateKind::P, q, -1, angle}; }
    static Gate cx(int control, int target) { return {GateKind::CX, control, target}; }

    bool two_qubit() const { return kind == GateKind::CX; }

    friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
   public:
    explicit Circuit(int width) : width_(width) {
        if (width < 1) throw InputError("circuit width must be positive");
    }

    int width() const { return width_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    Circuit& add(const Gate& g) {
        check(g.q0);
        if (g.two_qubit()) {
            check(g.q1);
            if (g.q0 == g.q1) throw InputError("CX control and target must differ");
        }
        gates_.push_back(g);
        return *this;
    }

    Circuit& h(int q) { return add(Gate::h(q)); }
    Circuit& x(int q) { return add(Gate::x(q)); }
    Circuit& p(int q, double angle) { return add(Gate::p(q, angle)); }
    Circuit& cx(int c, int t) { return add(Gate::cx(c, t)); }

    Circuit& append(const Circuit& other) {
        if (other.width_ > width_) throw InputError("appended circuit is wider than the target");
        for (const auto& g : other.gates_) add(g);
        return *this;
    }

    friend bool operator==(const Circuit&, const Circuit&) = default;

   private:
    void check(int q) const {
        if (q < 0 || q >= width_) {
            throw InputError("qubit index " + std::to_string(q) + " outside width " + std::to_string(width_));
        }
    }

    int width_;
    std::vector<Gate> gates_;
};

/// Greedy layering: each gate lands one layer after the latest layer touching any of its qubits.
inline int circuit_depth(const Circuit& c) {
    std::vector<int> level(static_cast<std::size_t>(c.width()), 0);
    int depth = 0;
    for (const auto& g : c.gates()) {
        int l = level[static_cast<std::size_t>(g.q0)];
        if (g.two_qubit()) l = std::max(l, level[static_cast<std::size_t>(g.q1)]);
        ++l;
        level[static_cast<std::size_t>(g.q0)] = l;
        if (g.two_qubit()) level[static_cast<std::size_t>(g.q1)] = l;
        depth = std::max(depth, l);
    }
    return depth;
}

inline int two_qubit_count(const Circuit& c) {
    return static_cast<int>(std::count_if(c.gates().begin(), c.gates().end(), [](const Gate& g) { return g.two_qubit(); }));
}

inline std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

inline std::string emit_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.width() << "];\n";
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::H: out << "h q[" << g.q0 << "];\n"; break;
            case GateKind::X: out << "x q[" << g.q0 << "];\n"; break;
            case GateKind::P: out << "p(" << format_angle(g.angle) << ") q[" << g.q0 << "];\n"; break;
            case GateKind::CX: out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n"; break;
        }
    }
    return out.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline int parse_qubit_ref(std::string_view s, int line) {
    s = trim(s);
    if (s.size() < 4 || s.substr(0, 2) != "q[" || s.back() != ']') {
        throw InputError("qasm line " + std::to_string(line) + ": bad qubit reference '" + std::string(s) + "'");
    }
    int q = 0;
    auto body = s.substr(2, s.size() - 3);
    auto r = std::from_chars(body.data(), body.data() + body.size(), q);
    if (r.ec != std::errc{} || r.ptr != body.data() + body.size()) {
        throw InputError("qasm line " + std::to_string(line) + ": bad qubit index");
    }
    return q;
}

}  // namespace detail

/// Reads the subset of OpenQASM 2 produced by emit_qasm.
inline Circuit parse_qasm(std::string_view text) {
    std::vector<Gate> gates;
    int width = -1;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = detail::trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty() || line.starts_with("//") || line.starts_with("OPENQASM") || line.starts_with("include")) {
            continue;
        }
        if (line.back() != ';') throw InputError("qasm line " + std::to_string(line_no) + ": missing ';'");
        line = detail::trim(line.substr(0, line.size() - 1));
        if (line.starts_with("qreg ")) {
            width = detail::parse_qubit_ref(line.substr(5), line_no);
            continue;
        }
        if (line.starts_with("h ")) {
            gates.push_back(Gate::h(detail::parse_qubit_ref(line.substr(2), line_no)));
        } else if (line.starts_with("x ")) {
            gates.push_back(Gate::x(detail::parse_qubit_ref(line.substr(2), line_no)));
        } else if (line.starts_with("p(")) {
            auto close = line.find(')');
            if (close == std::string_view::npos) throw InputError("qasm line " + std::to_string(line_no) + ": bad p()");
            std::string angle_text(line.substr(2, close - 2));
            double angle = 0;
            try {
                std::size_t used = 0;
                angle = std::stod(angle_text, &used);
                if (used != angle_text.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw InputError("qasm line " + std::to_string(line_no) + ": bad angle '" + angle_text + "'");
            }
            gates.push_back(Gate::p(detail::parse_qubit_ref(line.substr(close + 1), line_no), angle));
        } else if (line.starts_with("cx ")) {
            auto rest = line.substr(3);
            auto comma = rest.find(',');
            if (comma == std::string_view::npos) throw InputError("qasm line " + std::to_string(line_no) + ": bad cx");
            gates.push_back(Gate::cx(detail::parse_qubit_ref(rest.substr(0, comma), line_no),
                                     detail::parse_qubit_ref(rest.substr(comma + 1), line_no)));
        } else {
            throw InputError("qasm line " + std::to_string(line_no) + ": unsupported statement '" + std::string(line) +
                             "'");
        }
    }
    if (width < 1) throw InputError("qasm text has no qreg declaration");
    Circuit c(width);
    for (const auto& g : gates) c.add(g);
    return c;
}

}  // namespace ampamp
