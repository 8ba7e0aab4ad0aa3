// Copyright 2026 The poincare Authors
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

#include "poincare/io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "poincare/errors.h"

namespace poincare {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &where, const std::string &what) {
    throw DomainError("schema error at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json &field(const json &obj, const std::string &where, const char *key) {
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where + "/" + key, "missing");
    }
    return *it;
}

double number(const json &v, const std::string &where) {
    if (!v.is_number()) {
        fail(where, "expected a number");
    }
    return v.get<double>();
}

int integer(const json &v, const std::string &where) {
    if (!v.is_number_integer()) {
        fail(where, "expected an integer");
    }
    return v.get<int>();
}

cplx complex_value(const json &v, const std::string &where) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (!v.is_array() || v.size() != 2) {
        fail(where, "expected [re, im]");
    }
    return {number(v[0], where + "/0"), number(v[1], where + "/1")};
}

json complex_json(cplx c) { return json::array({c.real(), c.imag()}); }

HalfSpin spin_field(const json &obj, const std::string &where) {
    int tw = integer(field(obj, where, "twice_spin"), where + "/twice_spin");
    if (tw < 0) {
        fail(where + "/twice_spin", "must be nonnegative");
    }
    return HalfSpin(tw);
}

LayerState layer_state(const json &obj, const std::string &where) {
    HalfSpin s = spin_field(obj, where);
    int d = s.dim();
    std::string w = where;
    try {
        if (obj.contains("amplitudes")) {
            const json &a = obj["amplitudes"];
            w = where + "/amplitudes";
            if (!a.is_array() || (int)a.size() != d) {
                fail(w, "expected " + std::to_string(d) + " entries");
            }
            CVector v(d);
            for (int i = 0; i < d; i++) {
                v(i) = complex_value(a[i], w + "/" + std::to_string(i));
            }
            return LayerState::from_ket(s, v);
        }
        if (obj.contains("rho")) {
            const json &a = obj["rho"];
            w = where + "/rho";
            if (!a.is_array() || (int)a.size() != d) {
                fail(w, "expected " + std::to_string(d) + " rows");
            }
            CMatrix rho(d, d);
            for (int i = 0; i < d; i++) {
                std::string wi = w + "/" + std::to_string(i);
                if (!a[i].is_array() || (int)a[i].size() != d) {
                    fail(wi, "expected " + std::to_string(d) + " entries");
                }
                for (int j = 0; j < d; j++) {
                    rho(i, j) = complex_value(a[i][j], wi + "/" + std::to_string(j));
                }
            }
            return LayerState::from_density(s, rho);
        }
    } catch (const std::invalid_argument &e) {
        fail(w, e.what());
    }
    fail(where, "expected \"rho\" or \"amplitudes\"");
}

json layer_json(const LayerState &st) {
    json out;
    out["twice_spin"] = st.spin().twice;
    if (st.is_pure()) {
        json a = json::array();
        for (int i = 0; i < st.spin().dim(); i++) {
            a.push_back(complex_json(st.ket()(i)));
        }
        out["amplitudes"] = a;
    } else {
        json rows = json::array();
        for (int i = 0; i < st.spin().dim(); i++) {
            json row = json::array();
            for (int j = 0; j < st.spin().dim(); j++) {
                row.push_back(complex_json(st.rho()(i, j)));
            }
            rows.push_back(row);
        }
        out["rho"] = rows;
    }
    return out;
}

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

PolarizationSector parse_state(const std::string &text) {
    json doc = parse_json(text);
    if (!doc.is_object()) {
        fail("", "expected an object");
    }
    if (!doc.contains("layers")) {
        return PolarizationSector::single(layer_state(doc, ""));
    }
    const json &ls = doc["layers"];
    if (!ls.is_array() || ls.empty()) {
        fail("/layers", "expected a nonempty array");
    }
    std::vector<Layer> layers;
    for (size_t i = 0; i < ls.size(); i++) {
        std::string w = "/layers/" + std::to_string(i);
        LayerState st = layer_state(ls[i], w);
        double weight = number(field(ls[i], w, "weight"), w + "/weight");
        layers.push_back({st.spin(), weight, st});
    }
    try {
        return PolarizationSector(std::move(layers));
    } catch (const std::invalid_argument &e) {
        fail("/layers", e.what());
    }
}

PolarizationSector load_state(const std::string &path) { return parse_state(read_file(path)); }

std::string state_json(const PolarizationSector &sector) {
    const auto &ls = sector.layers();
    json arr = json::array();
    for (const auto &l : ls) {
        json o = layer_json(l.state);
        o["weight"] = l.weight;
        arr.push_back(o);
    }
    return json{{"layers", arr}}.dump() + "\n";
}

void save_state(const std::string &path, const PolarizationSector &sector) { write_file(path, state_json(sector)); }

std::string multipoles_json(const MultipoleTable &table) {
    json arr = json::array();
    for (int K = 0; K <= table.max_rank(); K++) {
        for (int q = -K; q <= K; q++) {
            cplx v = table.at(K, q);
            arr.push_back({{"K", K}, {"q", q}, {"re", v.real()}, {"im", v.imag()}});
        }
    }
    return json{{"twice_spin", table.spin().twice}, {"entries", arr}}.dump() + "\n";
}

MultipoleTable parse_multipoles(const std::string &text) {
    json doc = parse_json(text);
    HalfSpin s = spin_field(doc, "");
    const json &arr = field(doc, "", "entries");
    if (!arr.is_array()) {
        fail("/entries", "expected an array");
    }
    MultipoleTable t(s);
    for (size_t i = 0; i < arr.size(); i++) {
        std::string w = "/entries/" + std::to_string(i);
        int K = integer(field(arr[i], w, "K"), w + "/K");
        int q = integer(field(arr[i], w, "q"), w + "/q");
        if (K < 0 || K > s.twice || std::abs(q) > K) {
            fail(w, "index out of range");
        }
        t.set(K, q, {number(field(arr[i], w, "re"), w + "/re"), number(field(arr[i], w, "im"), w + "/im")});
    }
    return t;
}

std::string constellation_json(const Constellation &c) {
    json pts = json::array();
    for (const auto &p : c.points) {
        pts.push_back({{"theta", p.theta}, {"phi", p.phi}});
    }
    return json{{"twice_spin", c.spin.twice}, {"points", pts}}.dump() + "\n";
}

Constellation parse_constellation(const std::string &text) {
    json doc = parse_json(text);
    Constellation c{spin_field(doc, ""), {}};
    const json &pts = field(doc, "", "points");
    if (!pts.is_array() || (int)pts.size() != c.spin.twice) {
        fail("/points", "expected exactly 2S points");
    }
    for (size_t i = 0; i < pts.size(); i++) {
        std::string w = "/points/" + std::to_string(i);
        c.points.push_back(
            {number(field(pts[i], w, "theta"), w + "/theta"), number(field(pts[i], w, "phi"), w + "/phi")});
    }
    return c;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DomainError("cannot write " + path);
    }
    out << content;
}

}  // namespace poincare
