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

// poincare: command-line front end. Every command prints one JSON line
// {"result": ..., "meta": {"version", "seed"}} on success.

#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "poincare/poincare.h"

namespace {

using nlohmann::json;
using namespace poincare;

struct Options {
    std::string state;
    std::string kind;
    std::string grid = "64x128";
    std::string out;
    std::string axis;
    std::string points;
    std::string tomograms;
    std::string moments;
    std::string jones;
    std::string stokes;
    std::string basis = "hv";
    int order = 0;
    int twice_spin = -1;
    int shots = 10000;
    int restarts = 100;
    std::uint64_t seed = 1;
    double eps = 1e-10;
    double angle = 0;
    double chi_t = 0;
    double lambda = 0;
    bool table1 = false;
};

json envelope(const json &result, const Options &o) {
    return {{"result", result}, {"meta", {{"version", kVersion}, {"seed", o.seed}}}};
}

void emit(const json &result, const Options &o) { std::cout << envelope(result, o).dump() << "\n"; }

std::vector<double> parse_list(const std::string &text, size_t n, const char *what) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw CLI::ValidationError(what, "expected " + std::to_string(n) + " comma-separated numbers");
        }
    }
    if (v.size() != n) {
        throw CLI::ValidationError(what, "expected " + std::to_string(n) + " comma-separated numbers");
    }
    return v;
}

SphereGrid parse_grid(const std::string &g) {
    int r = 0, c = 0;
    char x = 0;
    std::istringstream in(g);
    if (!(in >> r >> x >> c) || x != 'x' || r < 2 || c < 2 || !in.eof()) {
        throw CLI::ValidationError("--grid", "expected RxC with R, C >= 2");
    }
    return SphereGrid::gauss_legendre(r, c);
}

json jvec(const Eigen::VectorXd &v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json jmat(const Eigen::MatrixXd &m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); i++) {
        rows.push_back(jvec(m.row(i).transpose()));
    }
    return rows;
}

const LayerState &single_layer(const PolarizationSector &sector) {
    if (sector.layers().size() != 1) {
        throw DomainError("this command needs a single-layer state");
    }
    return sector.layers()[0].state;
}

json report_json(const DegreeReport &r) {
    return {{"kind", to_string(r.kind)}, {"value", r.value}, {"meta", r.meta}};
}

void cmd_degree(const Options &o) {
    auto sector = load_state(o.state);
    emit(report_json(degree(sector, parse_degree_kind(o.kind), o.seed)), o);
}

void cmd_multipoles(const Options &o) {
    auto sector = load_state(o.state);
    json layers = json::array();
    for (const auto &l : sector.layers()) {
        json t = json::parse(multipoles_json(multipoles(l.state)));
        t["weight"] = l.weight;
        layers.push_back(t);
    }
    json result = {{"layers", layers}};
    if (!o.out.empty()) {
        write_file(o.out, result.dump() + "\n");
        result = {{"out", o.out}, {"layers", sector.layers().size()}};
    }
    emit(result, o);
}

void cmd_qfunc(const Options &o) {
    auto sector = load_state(o.state);
    SphereGrid grid = parse_grid(o.grid);
    QKind kind = QKind::total;
    if (o.kind == "partial") {
        kind = QKind::partial;
    } else if (!o.kind.empty() && o.kind != "total") {
        throw CLI::ValidationError("--kind", "qfunc kinds are total and partial");
    }
    QSamples q = q_grid(sector, grid, kind, o.order);
    write_file(o.out, q_csv(q));
    emit({{"out", o.out},
          {"rows", grid.thetas.size()},
          {"cols", grid.phis.size()},
          {"integral_over_4pi", integrate(grid, q.values) / (4 * M_PI)}},
         o);
}

void cmd_transform(const Options &o) {
    auto sector = load_state(o.state);
    auto ax = parse_list(o.axis, 2, "--axis");
    Direction axis{ax[0], ax[1]};
    auto rotated = rotate(sector, axis, o.angle);
    Eigen::Matrix2cd u = su2_matrix(axis, o.angle);
    json result = {{"rotation", jmat(rotation_from_su2(u))},
                   {"mueller", jmat(mueller_from_jones(u))},
                   {"state", json::parse(state_json(rotated))}};
    if (!o.out.empty()) {
        save_state(o.out, rotated);
    }
    emit(result, o);
}

void cmd_kerr(const Options &o) {
    auto evolved = kerr_evolve(load_state(o.state), o.chi_t);
    if (!o.out.empty()) {
        save_state(o.out, evolved);
    }
    emit({{"chi_t", o.chi_t}, {"state", json::parse(state_json(evolved))}}, o);
}

void cmd_majorana(const Options &o) {
    if (!o.points.empty()) {
        auto st = state_from_constellation(parse_constellation(read_file(o.points)));
        auto sector = PolarizationSector::single(st);
        if (!o.out.empty()) {
            save_state(o.out, sector);
        }
        emit({{"state", json::parse(state_json(sector))}}, o);
        return;
    }
    auto sector = load_state(o.state);
    const LayerState &st = single_layer(sector);
    Constellation c = constellation(st);
    json result = json::parse(constellation_json(c));
    result["anticoherence_order"] = anticoherence_order(st, o.eps);
    if (!o.out.empty()) {
        write_file(o.out, constellation_json(c));
    }
    emit(result, o);
}

json amplitudes_json(const LayerState &st) { return json::parse(state_json(PolarizationSector::single(st))); }

int cmd_kings_verify(const Options &o) {
    json rows = json::array();
    bool all = true;
    for (const auto &k : king_table()) {
        int found = anticoherence_order(k.state, o.eps);
        double a = cumulative_A(k.state, k.order);
        double next = k.order < k.spin.twice ? cumulative_A(k.state, k.order + 1) : 0.0;
        bool pass = found == k.order && a < o.eps && (k.order == k.spin.twice || next > 1e-3);
        all = all && pass;
        rows.push_back({{"twice_spin", k.spin.twice},
                        {"name", k.name},
                        {"order", k.order},
                        {"found_order", found},
                        {"A_M", a},
                        {"A_M_plus_1", next},
                        {"pass", pass}});
    }
    emit({{"rows", rows}, {"all_pass", all}}, o);
    return all ? 0 : 1;
}

void cmd_kings_search(const Options &o) {
    if (o.twice_spin < 1) {
        throw CLI::ValidationError("--twice-spin", "must be at least 1");
    }
    KingCandidate k = search_kings(HalfSpin(o.twice_spin), o.order, o.restarts, o.seed);
    emit({{"twice_spin", o.twice_spin},
          {"order", k.order},
          {"residual", k.residual},
          {"certified", k.residual < o.eps},
          {"state", amplitudes_json(k.state)}},
         o);
}

void cmd_tomo_simulate(const Options &o) {
    auto sector = load_state(o.state);
    const LayerState &st = single_layer(sector);
    int M = o.order > 0 ? o.order : st.spin().twice;
    std::mt19937_64 master(o.seed);
    std::vector<TomogramCounts> all;
    for (int ell = 1; ell <= M; ell++) {
        for (const auto &n : design_directions(ell, o.seed).directions) {
            all.push_back(simulate_tomograms(st, n, o.shots, master()));
        }
    }
    write_file(o.out, tomogram_csv(all));
    emit({{"out", o.out}, {"directions", all.size()}, {"shots", o.shots}, {"order", M}}, o);
}

int infer_twice_spin(const std::string &csv) {
    int tw = 0;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        double a, b;
        int m2;
        if (std::sscanf(line.c_str(), "%lf,%lf,%d", &a, &b, &m2) == 3) {
            tw = std::max(tw, std::abs(m2));
        }
    }
    return tw;
}

void cmd_tomo_reconstruct(const Options &o) {
    std::vector<MomentSample> moments;
    int tw = o.twice_spin;
    if (!o.tomograms.empty()) {
        std::string csv = read_file(o.tomograms);
        if (tw < 0) {
            tw = infer_twice_spin(csv);
        }
        int M = o.order > 0 ? o.order : tw;
        for (const auto &t : parse_tomogram_csv(csv, HalfSpin(tw))) {
            for (int ell = 1; ell <= M; ell++) {
                moments.push_back({t.n, ell, empirical_moment(t, ell)});
            }
        }
    } else if (!o.moments.empty()) {
        moments = parse_moments_csv(read_file(o.moments));
        if (tw < 0) {
            throw CLI::ValidationError("--twice-spin", "required with --moments");
        }
    } else {
        throw CLI::ValidationError("tomo reconstruct", "needs --tomograms or --moments");
    }
    int M = o.order > 0 ? o.order : tw;
    MultipoleTable t = reconstruct_multipoles(moments, HalfSpin(tw), M, o.lambda);
    json result = json::parse(multipoles_json(t));
    result["order"] = M;
    if (!o.out.empty()) {
        write_file(o.out, multipoles_json(t));
    }
    emit(result, o);
}

void cmd_classical(const Options &o) {
    CoherenceMatrix J;
    json ellipse = nullptr;
    if (!o.jones.empty()) {
        auto v = parse_list(o.jones, 4, "--jones");
        cplx a(v[0], v[1]), b(v[2], v[3]);
        JonesVector jv;
        if (o.basis == "hv") {
            jv = JonesVector::from_hv(a, b);
            auto e = ellipse_params(a, b);
            ellipse = {{"psi", e.psi}, {"chi", e.chi}};
        } else if (o.basis == "circular") {
            jv = {a, b};
            Eigen::Vector2cd hv = jv.hv();
            auto e = ellipse_params(hv(0), hv(1));
            ellipse = {{"psi", e.psi}, {"chi", e.chi}};
        } else {
            throw CLI::ValidationError("--basis", "expected hv or circular");
        }
        J = coherence_matrix(jv);
    } else if (!o.stokes.empty()) {
        auto v = parse_list(o.stokes, 4, "--stokes");
        J = coherence_from_stokes({v[0], v[1], v[2], v[3]});
    } else {
        throw CLI::ValidationError("classical", "needs --jones or --stokes");
    }
    ClassicalStokes s = stokes_from_coherence(J);
    auto dec = decompose(J);
    emit({{"stokes", jvec(s.vec())},
          {"stokes_textbook", jvec(to_textbook(s))},
          {"degree", dec.degree},
          {"intensity", dec.intensity},
          {"entropy", coherence_entropy(J)},
          {"ellipse", ellipse}},
         o);
}

void cmd_validate(const Options &o) {
    auto sector = load_state(o.state);
    json layers = json::array();
    for (const auto &l : sector.layers()) {
        layers.push_back({{"twice_spin", l.spin.twice},
                          {"weight", l.weight},
                          {"pure", l.state.is_pure()},
                          {"purity", l.state.purity()}});
    }
    emit({{"valid", true}, {"mean_photon_number", sector.mean_photon_number()}, {"layers", layers}}, o);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum and classical polarization toolkit", "poincare"};
    app.require_subcommand(1);
    Options o;
    auto add_seed = [&](CLI::App *c) { c->add_option("--seed", o.seed, "random seed"); };

    auto *deg = app.add_subcommand("degree", "degree of polarization of a state");
    deg->add_option("--state", o.state, "state JSON")->required();
    deg->add_option("--kind", o.kind, "s, s2, s2inv, hs, t, b, c, q, d, p")->required();
    add_seed(deg);

    auto *mp = app.add_subcommand("multipoles", "multipole table of each layer");
    mp->add_option("--state", o.state)->required();
    mp->add_option("--out", o.out);

    auto *qf = app.add_subcommand("qfunc", "Husimi Q on a Gauss-Legendre grid, written as CSV");
    qf->add_option("--state", o.state)->required();
    qf->add_option("--grid", o.grid, "RxC, default 64x128");
    qf->add_option("--kind", o.kind, "total or partial");
    qf->add_option("--order", o.order, "rank for --kind partial");
    qf->add_option("--out", o.out)->required();

    auto *tr = app.add_subcommand("transform", "rotate a state about an axis");
    tr->add_option("--state", o.state)->required();
    tr->add_option("--axis", o.axis, "theta,phi")->required();
    tr->add_option("--angle", o.angle)->required();
    tr->add_option("--out", o.out);

    auto *kr = app.add_subcommand("kerr", "cross-Kerr evolution");
    kr->add_option("--state", o.state)->required();
    kr->add_option("--chi-t", o.chi_t)->required();
    kr->add_option("--out", o.out);

    auto *mj = app.add_subcommand("majorana", "Majorana constellation of a pure layer, or the inverse with --points");
    auto *mj_state = mj->add_option("--state", o.state);
    auto *mj_points = mj->add_option("--points", o.points, "constellation JSON");
    mj_state->excludes(mj_points);
    mj->add_option("--eps", o.eps, "anticoherence tolerance");
    mj->add_option("--out", o.out);

    auto *kings = app.add_subcommand("kings", "maximally unpolarized states");
    kings->require_subcommand(1);
    auto *kv = kings->add_subcommand("verify", "certify the reference table");
    kv->add_flag("--table1", o.table1, "verify the built-in reference table")->required();
    kv->add_option("--eps", o.eps);
    auto *ks = kings->add_subcommand("search", "minimize A_M over pure states");
    ks->add_option("--twice-spin", o.twice_spin)->required();
    ks->add_option("--order", o.order)->required();
    ks->add_option("--restarts", o.restarts);
    ks->add_option("--eps", o.eps);
    add_seed(ks);

    auto *tomo = app.add_subcommand("tomo", "Stokes-moment tomography");
    tomo->require_subcommand(1);
    auto *tsim = tomo->add_subcommand("simulate", "sample tomograms on designed directions");
    tsim->add_option("--state", o.state)->required();
    tsim->add_option("--order", o.order, "highest moment, default 2S");
    tsim->add_option("--shots", o.shots)->check(CLI::PositiveNumber);
    tsim->add_option("--out", o.out)->required();
    add_seed(tsim);
    auto *trec = tomo->add_subcommand("reconstruct", "linear inversion to multipoles");
    trec->add_option("--tomograms", o.tomograms);
    trec->add_option("--moments", o.moments);
    trec->add_option("--twice-spin", o.twice_spin);
    trec->add_option("--order", o.order);
    trec->add_option("--lambda", o.lambda, "Tikhonov regularization");
    trec->add_option("--out", o.out);

    auto *cl = app.add_subcommand("classical", "classical Stokes report");
    cl->add_option("--jones", o.jones, "re,im,re,im");
    cl->add_option("--basis", o.basis, "hv or circular");
    cl->add_option("--stokes", o.stokes, "s0,s1,s2,s3");

    auto *va = app.add_subcommand("validate", "check a state file");
    va->add_option("--state", o.state)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*deg) {
            cmd_degree(o);
        } else if (*mp) {
            cmd_multipoles(o);
        } else if (*qf) {
            cmd_qfunc(o);
        } else if (*tr) {
            cmd_transform(o);
        } else if (*kr) {
            cmd_kerr(o);
        } else if (*mj) {
            if (o.state.empty() && o.points.empty()) {
                throw CLI::ValidationError("majorana", "needs --state or --points");
            }
            cmd_majorana(o);
        } else if (*kv) {
            return cmd_kings_verify(o);
        } else if (*ks) {
            cmd_kings_search(o);
        } else if (*tsim) {
            cmd_tomo_simulate(o);
        } else if (*trec) {
            cmd_tomo_reconstruct(o);
        } else if (*cl) {
            cmd_classical(o);
        } else if (*va) {
            cmd_validate(o);
        }
    } catch (const CLI::Error &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
