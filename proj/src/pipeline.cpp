#include "topodraw/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "topodraw/gf2.hpp"
#include "topodraw/kernels.hpp"
#include "topodraw/maclane.hpp"

namespace topo {

using nlohmann::ordered_json;

namespace {

ordered_json ids1(const std::vector<int>& v) {
    ordered_json a = ordered_json::array();
    for (int x : v) a.push_back(x + 1);
    return a;
}

std::string cname(int id) { return "c" + std::to_string(id + 1); }

std::string cycle_line(const std::string& label, const Cycle& c) {
    return "цикл " + label + " = " + format_edges(c.edges) + " ↔ " + format_vertices(c.vertices) + "\n";
}

ordered_json cycle_json(const std::string& label, const Cycle& c) {
    ordered_json j;
    j["id"] = label;
    j["length"] = c.length();
    j["edges"] = ids1(c.edges.indices());
    j["vertices"] = ids1(c.vertices);
    return j;
}

ordered_json rim_json(const Rim& r) {
    ordered_json j;
    j["edges"] = ids1(r.edges.indices());
    j["simple"] = r.simple;
    j["vertices"] = ids1(r.vertices);
    j["loops"] = ordered_json::array();
    for (const auto& l : r.loops) j["loops"].push_back(ids1(l));
    return j;
}

ordered_json rotation_json(const RotationSystem& rot) {
    ordered_json a = ordered_json::array();
    for (std::size_t v = 0; v < rot.order.size(); ++v)
        if (!rot.order[v].empty()) a.push_back({{"vertex", v + 1}, {"order", ids1(rot.order[v])}});
    return a;
}

ordered_json basis_json(const BasisCandidate& b) {
    ordered_json j;
    j["method"] = b.method;
    j["cycles"] = ids1(b.cycles);
    j["f_cubic"] = b.f_cubic;
    j["f_quadratic"] = b.f_quadratic;
    j["sum_of_lengths"] = b.sum_of_lengths;
    j["independent"] = b.independent;
    j["covers_edges"] = b.covers_edges;
    j["covers_vertices"] = b.covers_vertices;
    if (b.trial >= 0) j["trial"] = b.trial;
    return j;
}

std::string ids_text(const std::vector<int>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + cname(ids[i]);
    return s + "}";
}

struct Ranked {
    BasisCandidate basis;
    PlaneConfiguration config;
};

bool ranked_less(const Ranked& a, const Ranked& b) {
    auto cls = [](const Ranked& r) { return r.config.planar ? (r.config.checks.ok() ? 0 : 1) : 2; };
    if (cls(a) != cls(b)) return cls(a) < cls(b);
    if (a.config.n_u() != b.config.n_u()) return a.config.n_u() < b.config.n_u();
    if (a.config.f_cubic != b.config.f_cubic) return a.config.f_cubic < b.config.f_cubic;
    return basis_better(a.basis, b.basis);
}

}  // namespace

PipelineReport run_pipeline(const Graph& g, const PipelineOptions& opt) {
    using clock = std::chrono::steady_clock;
    PipelineReport rep;
    auto& J = rep.json;
    std::ostringstream T;
    ordered_json timings;
    auto t0 = clock::now();
    auto lap = [&](const char* name) {
        auto t = clock::now();
        timings[name] = std::chrono::duration<double, std::milli>(t - t0).count();
        t0 = t;
    };

    static const char* names[] = {"cycles", "basis", "planarize", "embed", "hamilton"};
    J["command"] = names[static_cast<int>(opt.command)];

    NonseparabilityReport ns = validate_nonseparable(g);
    if (!ns.connected) throw GraphError("graph is disconnected");
    const int mu = cyclomatic_number(g);
    J["graph"] = {{"n", g.n()},
                  {"m", g.m()},
                  {"cyclomatic_number", mu},
                  {"nonseparable", ns.nonseparable()},
                  {"bridges", ids1(ns.bridges)},
                  {"articulation_points", ids1(ns.articulation_points)},
                  {"min_degree", ns.min_degree}};
    T << "n = " << g.n() << ", m = " << g.m() << ", cyclomatic number = " << mu << "\n";
    if (!ns.nonseparable())
        T << "warning: graph is not nonseparable (min degree " << ns.min_degree << ", " << ns.bridges.size()
          << " bridges, " << ns.articulation_points.size() << " articulation points)\n";

    IsometricCycleSet iso = enumerate_isometric_cycles(g, opt.threads);
    const auto& C = iso.cycles;
    lap("isometric_ms");
    std::vector<int> all(C.size());
    for (std::size_t i = 0; i < C.size(); ++i) all[i] = static_cast<int>(i);
    LoadVector p_all = edge_load(C, all, g.m());
    {
        ordered_json cj = ordered_json::array();
        for (std::size_t i = 0; i < C.size(); ++i) cj.push_back(cycle_json(cname(static_cast<int>(i)), C[i]));
        J["isometric"] = {{"count", C.size()},
                          {"candidates", iso.candidates},
                          {"cycles", cj},
                          {"edge_load", p_all},
                          {"vertex_load", vertex_load(g, C, all)},
                          {"f_quadratic", f_quadratic(p_all)},
                          {"f_cubic", f_cubic(p_all)}};
        T << "isometric cycles = " << C.size() << "\n";
        for (std::size_t i = 0; i < C.size(); ++i) T << cycle_line(cname(static_cast<int>(i)), C[i]);
        T << "P_e = " << format_load(p_all) << "\n";
        T << "P_v = " << format_load(vertex_load(g, C, all)) << "\n";
        T << "F2 = " << f_quadratic(p_all) << ", F3 = " << f_cubic(p_all) << "\n";
    }
    if (opt.command == Command::cycles) {
        J["counters"] = {{"isa", kernels::isa_name(kernels::active_isa())}, {"isometric_candidates", iso.candidates}};
        if (opt.timings) J["timings"] = timings;
        rep.text = T.str();
        return rep;
    }
    if (mu <= 0) throw GraphError("graph has no cycles (cyclomatic number 0)");

    // stage 1
    std::vector<BasisCandidate> bases;
    ordered_json bj;
    if (opt.method == "mc") {
        MonteCarloResult mc = monte_carlo_basis(g, C, opt.trials, opt.seed, opt.threads);
        bj = basis_json(mc.best);
        bj["seed"] = opt.seed;
        bj["trials"] = opt.trials;
        std::map<int64_t, int64_t> hist;
        std::set<std::vector<int>> seen;
        std::vector<BasisCandidate> distinct;
        for (const auto& r : mc.log) {
            ++hist[r.f_cubic];
            if (seen.insert(r.cycles).second) {
                BasisCandidate b = evaluate_basis(g, C, r.cycles, "mc");
                b.trial = r.trial;
                distinct.push_back(std::move(b));
            }
        }
        ordered_json h = ordered_json::array();
        for (auto [f, n] : hist) h.push_back({{"f_cubic", f}, {"count", n}});
        bj["histogram"] = h;
        bj["distinct_bases"] = distinct.size();
        std::sort(distinct.begin(), distinct.end(), basis_better);
        bases = std::move(distinct);
        T << "Monte Carlo: " << opt.trials << " trials, seed " << opt.seed << ", best trial " << mc.best.trial
          << "\n";
    } else {
        std::vector<int> excl = seed_exclusions(g, C, opt.pre_exclude_longest);
        DescentResult d = steepest_descent_basis(g, C, excl);
        bj = basis_json(d.basis);
        bj["excluded"] = ids1(excl);
        bj["complete"] = d.complete;
        bj["evaluations"] = d.evaluations;
        ordered_json tr = ordered_json::array();
        T << "steepest descent";
        if (!excl.empty()) T << ", excluded " << ids_text(excl);
        T << "\n";
        int t = 0;
        for (const auto& r : d.rounds) {
            ++t;
            ordered_json vals = ordered_json::array();
            for (auto [c, f] : r.values) vals.push_back({{"cycle", cname(c)}, {"f_cubic", f}});
            tr.push_back({{"removed", cname(r.removed)},
                          {"f_before", r.f_before},
                          {"f_after", r.f_after},
                          {"rate", r.rate},
                          {"values", vals}});
            T << "δ^" << t << " C_τ / δ" << cname(r.removed) << " → " << r.f_after << "\n";
        }
        bj["trace"] = tr;
        bases.push_back(d.basis);
    }
    J["basis"] = bj;
    const BasisCandidate& b0 = bases.front();
    T << "basis " << ids_text(b0.cycles) << "\n";
    T << "P_e = " << format_load(edge_load(C, b0.cycles, g.m())) << "\n";
    T << "F3 = " << b0.f_cubic << ", sum of lengths = " << b0.sum_of_lengths
      << (b0.independent ? "" : " (rank deficient)") << "\n";
    lap("basis_ms");
    if (opt.command == Command::basis) {
        J["counters"] = {{"isa", kernels::isa_name(kernels::active_isa())}, {"isometric_candidates", iso.candidates}};
        if (opt.timings) J["timings"] = timings;
        rep.text = T.str();
        return rep;
    }

    // stage 2
    ReduceOptions ro;
    ro.count_rim_as_cycle = opt.count_rim_as_cycle;
    std::vector<Ranked> ranked;
    for (const auto& b : bases) ranked.push_back({b, reduce_to_plane(g, C, b.cycles, ro)});
    std::stable_sort(ranked.begin(), ranked.end(), ranked_less);
    const Ranked& best = ranked.front();
    const PlaneConfiguration& pc = best.config;
    {
        ordered_json steps = ordered_json::array();
        for (const auto& s : pc.steps)
            steps.push_back({{"cycle", cname(s.cycle)}, {"edges", ids1(s.edges)}, {"F", s.f_after}, {"rate", s.rate}});
        J["planarize"] = {{"basis", ids1(best.basis.cycles)},
                          {"steps", steps},
                          {"removed_edges", ids1(pc.removed_edges)},
                          {"N_u", pc.n_u()},
                          {"f_cubic", pc.f_cubic},
                          {"planar", pc.planar},
                          {"cycles", ids1(pc.cycles)},
                          {"rim", rim_json(pc.rim)},
                          {"checks",
                           {{"connected", pc.checks.connected},
                            {"no_articulation", pc.checks.no_articulation},
                            {"rotation_closed", pc.checks.rotation_closed},
                            {"articulation_points", ids1(pc.checks.articulation_points)}}},
                          {"bases_reduced", ranked.size()},
                          {"count_rim_as_cycle", opt.count_rim_as_cycle}};
        T << "planarization of " << ids_text(best.basis.cycles) << "\n";
        int t = 0;
        for (const auto& s : pc.steps) {
            ++t;
            T << "δ^" << t << " B / δ" << cname(s.cycle) << " → " << s.f_after << "  (deleted";
            for (int e : s.edges) T << " e" << e + 1;
            T << ")\n";
        }
        T << "N_u = " << pc.n_u() << ", F3 = " << pc.f_cubic << ", configuration " << ids_text(pc.cycles) << "\n";
        if (pc.rim.simple) T << "rim " << format_edges(pc.rim.edges) << " ↔ " << format_vertices(pc.rim.vertices) << "\n";
        T << "checks: connected " << pc.checks.connected << ", no articulation " << pc.checks.no_articulation
          << ", rotation closed " << pc.checks.rotation_closed << "\n";
    }
    lap("planarize_ms");
    rep.exit_code = pc.planar ? kExitOk : kExitNotFound;

    std::vector<Cycle> faces = select_cycles(C, pc.cycles);
    if (opt.command == Command::embed || opt.command == Command::planarize) {
        if (pc.rim.simple && pc.rotation.closed) {
            J["embed"] = {{"rotation", rotation_json(pc.rotation)},
                          {"faces", trace_faces(g, pc.rotation).size()},
                          {"closed", pc.rotation.closed}};
            if (opt.command == Command::embed) {
                T << format_rotation(pc.rotation);
                rep.dot = to_dot(g, faces, pc.rotation);
            }
        } else {
            J["embed"] = {{"rotation", ordered_json::array()}, {"faces", 0}, {"closed", false}};
            if (opt.command == Command::embed) T << "rotation not closed: " << pc.checks.rotation_failure << "\n";
        }
    }

    if (opt.stage3 && pc.planar && pc.rim.simple) {
        Stage3Result s3 = reinsert_chords(g, faces, opt.exact_chords);
        ordered_json pj = ordered_json::array();
        for (std::size_t i = 0; i < s3.projections.size(); ++i) {
            const auto& pr = s3.projections[i];
            pj.push_back({{"edge", pr.edge + 1},
                          {"ends", {pr.a + 1, pr.b + 1}},
                          {"arc1", ids1(pr.arc1)},
                          {"arc2", ids1(pr.arc2)},
                          {"crossings", s3.selection.crossings[i]}});
        }
        ordered_json added = ordered_json::array();
        int k = 0;
        for (const auto& a : s3.added) {
            ordered_json aj = cycle_json("cd" + std::to_string(++k), a.cycle);
            aj["chord"] = a.chord + 1;
            aj["split_face"] = a.split_face >= 0;
            added.push_back(aj);
        }
        J["stage3"] = {{"exact", opt.exact_chords},
                       {"chords", pj},
                       {"kept", ids1(s3.selection.kept)},
                       {"discarded", ids1(s3.selection.discarded)},
                       {"interior_chords", ids1(s3.interior_chords)},
                       {"added_cycles", added},
                       {"still_deleted", ids1(s3.still_deleted)},
                       {"f_cubic", s3.f_cubic},
                       {"rotation_closed", s3.rotation_closed},
                       {"surviving_edges", s3.surviving_edges}};
        T << "rim chords:";
        for (const auto& pr : s3.projections) T << " e" << pr.edge + 1;
        T << "\n";
        for (const auto& pr : s3.projections) {
            std::vector<int> a1 = pr.arc1, a2 = pr.arc2;
            T << "пр(v" << pr.a + 1 << ", v" << pr.b + 1 << ") = пр{e" << pr.edge + 1 << "} = {";
            for (std::size_t i = 0; i < a1.size(); ++i) T << (i ? ", " : "") << "e" << a1[i] + 1;
            T << "} ∧ {";
            for (std::size_t i = 0; i < a2.size(); ++i) T << (i ? ", " : "") << "e" << a2[i] + 1;
            T << "}\n";
        }
        T << "kept chords:";
        for (int e : s3.selection.kept) T << " e" << e + 1;
        T << "\n";
        k = 0;
        for (const auto& a : s3.added) T << cycle_line("cd" + std::to_string(++k), a.cycle);
        T << "surviving edges = " << s3.surviving_edges << ", F3 = " << s3.f_cubic << "\n";
        lap("stage3_ms");
    }

    if (opt.command == Command::hamilton) {
        // planar configurations passing the audit, rank order, distinct cycle sets
        std::vector<std::vector<Cycle>> configs;
        std::vector<const Ranked*> which;
        std::set<std::vector<int>> seen;
        for (const auto& r : ranked) {
            if (!r.config.planar || !r.config.checks.ok() || configs.size() >= 16) continue;
            if (!seen.insert(r.config.cycles).second) continue;
            configs.push_back(select_cycles(C, r.config.cycles));
            which.push_back(&r);
        }
        HamiltonOptions ho;
        ho.budget = opt.budget;
        VariantSummary vs = enumerate_hamiltonian_variants(g, configs, ho);
        const HamiltonResult* pick = nullptr;
        const Ranked* pick_cfg = nullptr;
        bool all_evidence = !vs.results.empty();
        for (std::size_t i = 0; i < vs.results.size(); ++i) {
            if (vs.results[i].status == HamiltonStatus::found && !pick) {
                pick = &vs.results[i];
                pick_cfg = which[i];
            }
            if (vs.results[i].status != HamiltonStatus::non_hamiltonian_evidence) all_evidence = false;
        }
        HamiltonStatus status = pick ? HamiltonStatus::found
                                     : (all_evidence ? HamiltonStatus::non_hamiltonian_evidence : HamiltonStatus::not_found);
        if (!pick && !vs.results.empty()) {
            pick = &vs.results.front();
            pick_cfg = which.front();
        }
        ordered_json hj;
        hj["status"] = status_name(status);
        hj["configurations"] = vs.results.size();
        hj["cycle"] = ordered_json::array();
        hj["trace"] = ordered_json::array();
        hj["evidence"] = ordered_json::array();
        if (pick) {
            auto label = [&](int pos) {
                int base = static_cast<int>(pick_cfg->config.cycles.size());
                return pos < base ? cname(pick_cfg->config.cycles[static_cast<std::size_t>(pos)])
                                  : "r" + std::to_string(pos - base + 1);
            };
            hj["configuration"] = ids1(pick_cfg->config.cycles);
            ordered_json ad = ordered_json::array();
            for (std::size_t i = 0; i < pick->adopted.size(); ++i)
                ad.push_back(cycle_json("r" + std::to_string(i + 1), pick->adopted[i]));
            hj["adopted"] = ad;
            if (status == HamiltonStatus::found) {
                hj["cycle"] = ids1(pick->cycle);
                hj["rim_edges"] = ids1(pick->rim_edges);
                hj["verified"] = verify_hamiltonian(pick->cycle, g);
                for (const auto& s : pick->trace) hj["trace"].push_back({{"cycle", label(s.cycle)}, {"edge", s.edge + 1}});
                T << "Hamiltonian cycle found after deleting";
                for (const auto& s : pick->trace) T << " " << label(s.cycle) << "(e" << s.edge + 1 << ")";
                T << "\n";
                LoadVector ones(static_cast<std::size_t>(g.m()), 0);
                for (int e : pick->rim_edges) ones[static_cast<std::size_t>(e)] = 1;
                T << "P_e = " << format_load(ones) << "\n";
                T << "ones = " << pick->rim_edges.size() << " = n\n";
                T << "cycle " << format_vertices(pick->cycle) << "\n";
            } else if (status == HamiltonStatus::non_hamiltonian_evidence) {
                for (const auto& w : pick->evidence) {
                    ordered_json wj;
                    wj["kind"] = w.kind;
                    if (w.kind == "H_multiedge") {
                        wj["cycles"] = {label(w.cycles[0]), label(w.cycles[1])};
                        wj["edges"] = ids1(w.edges);
                        T << "evidence: H multiedge " << label(w.cycles[0]) << " – " << label(w.cycles[1]) << " via "
                          << format_edges(EdgeSet::from_indices(g.m(), w.edges)) << "\n";
                    } else if (w.kind == "H_separable") {
                        wj["components"] = ordered_json::array();
                        for (const auto& comp : w.components) {
                            ordered_json cj = ordered_json::array();
                            for (int x : comp) cj.push_back(label(x));
                            wj["components"].push_back(cj);
                        }
                        T << "evidence: H has " << w.components.size() << " components\n";
                    } else {
                        wj["vertices"] = ids1(w.vertices);
                        T << "evidence: uncovered vertices " << format_vertices(w.vertices) << "\n";
                    }
                    hj["evidence"].push_back(wj);
                }
                T << "non-Hamiltonian evidence\n";
            } else {
                T << "no Hamiltonian cycle found (heuristic)\n";
            }
        } else {
            T << "no plane configuration to extract from\n";
        }
        ordered_json distinct = ordered_json::array();
        for (const auto& d : vs.distinct) distinct.push_back(ids1(d));
        hj["distinct_cycles"] = distinct;
        J["hamilton"] = hj;
        rep.exit_code = status == HamiltonStatus::found ? kExitOk
                        : status == HamiltonStatus::non_hamiltonian_evidence ? kExitEvidence
                                                                             : kExitNotFound;
        lap("hamilton_ms");
    }

    J["counters"] = {{"isa", kernels::isa_name(kernels::active_isa())},
                     {"isometric_candidates", iso.candidates},
                     {"bases_reduced", ranked.size()}};
    if (opt.timings) J["timings"] = timings;
    rep.text = T.str();
    return rep;
}

}  // namespace topo
