#pragma once

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "verify.hpp"

namespace latticelab::cli {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Lattice documents: the single JSON interchange format.
// Keys: name (optional), size, covers (0-based [lo, hi] pairs),
// element_names (optional). Bottom/top are derived, never stored.
// ---------------------------------------------------------------------------

struct LatticeDocument {
    std::string name;
    int size = 0;
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> element_names;
};

inline json to_json(const LatticeDocument& doc) {
    json j;
    if (!doc.name.empty()) j["name"] = doc.name;
    j["size"] = doc.size;
    json cov = json::array();
    for (auto [a, b] : doc.covers) cov.push_back({a, b});
    j["covers"] = cov;
    if (!doc.element_names.empty()) j["element_names"] = doc.element_names;
    return j;
}

inline LatticeDocument document_from_json(const json& j) {
    LatticeDocument doc;
    if (j.contains("name")) doc.name = j.at("name").get<std::string>();
    doc.size = j.at("size").get<int>();
    for (const auto& e : j.at("covers"))
        doc.covers.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("element_names"))
        doc.element_names = j.at("element_names").get<std::vector<std::string>>();
    return doc;
}

inline LatticeDocument document_of(const GenResult& g) {
    LatticeDocument doc;
    doc.name = g.name;
    doc.size = g.lattice.n();
    doc.covers = g.lattice.p.covers;
    doc.element_names = g.element_names;
    return doc;
}

inline Lattice lattice_of(const LatticeDocument& doc) {
    return as_lattice(poset_from_covers(doc.size, doc.covers));
}

inline std::string element_name(const LatticeDocument& doc, int i) {
    if (i < int(doc.element_names.size())) return doc.element_names[i];
    return std::to_string(i);
}

namespace detail {

inline std::string slurp(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw LatticeError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw LatticeError("cannot open " + out_path);
    out << text;
}

inline LatticeDocument load_document(const std::string& path) {
    return document_from_json(json::parse(slurp(path)));
}

} // namespace detail

// ---------------------------------------------------------------------------
// DOT export. Node ids are element indices; output is byte-deterministic.
// ---------------------------------------------------------------------------

inline std::string dot_hasse(const LatticeDocument& doc, const Lattice& L) {
    // Edge labels j_xy need the unique pairing; fall back to a plain Hasse
    // diagram when the lattice is not uniquely paired or not overlapping.
    std::vector<std::string> labels(L.p.covers.size());
    try {
        Pairing k = unique_pairing(L);
        EdgeLabeling lab = edge_labeling(L, k);
        for (size_t c = 0; c < L.p.covers.size(); ++c)
            labels[c] = element_name(doc, lab.joins[lab.cover_label[c]]);
    } catch (const LatticeError&) {
    }
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (int i = 0; i < L.n(); ++i)
        out << "  n" << i << " [label=\"" << element_name(doc, i) << "\"];\n";
    for (size_t c = 0; c < L.p.covers.size(); ++c) {
        auto [a, b] = L.p.covers[c];
        out << "  n" << a << " -> n" << b;
        if (!labels[c].empty()) out << " [label=\"" << labels[c] << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string dot_galois(const LatticeDocument& doc, const Lattice& L) {
    Pairing k = unique_pairing(L); // NotPaired / NotUniquelyPaired propagate
    GaloisGraph g = galois_graph(L, k);
    std::ostringstream out;
    out << "digraph galois {\n";
    for (int i = 0; i < g.size(); ++i)
        out << "  j" << i << " [label=\"" << element_name(doc, g.verts[i]) << "\"];\n";
    for (int i = 0; i < g.size(); ++i)
        g.out[i].for_each([&](int kk) { out << "  j" << i << " -> j" << kk << ";\n"; });
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Subcommand implementations
// ---------------------------------------------------------------------------

struct GenArgs {
    std::string family, type = "A", id, preset, word, out, name;
    int rank = 2, n = 2, k = 2;
    long long cap = 50000;
};

inline CoxType parse_type(const std::string& t) {
    if (t == "A" || t == "a") return CoxType::A;
    if (t == "B" || t == "b") return CoxType::B;
    if (t == "I2" || t == "i2") return CoxType::I2;
    throw UnknownId("coxeter type: " + t);
}

inline GenResult generate(const GenArgs& a) {
    GenResult g;
    if (a.family == "chain") {
        g.lattice = chain(a.k);
        g.name = "chain-" + std::to_string(a.k);
        for (int i = 0; i < a.k; ++i) g.element_names.push_back(std::to_string(i));
    } else if (a.family == "boolean") {
        g.lattice = boolean_lattice(a.k, a.cap);
        g.name = "boolean-" + std::to_string(a.k);
        for (int s = 0; s < g.lattice.n(); ++s) {
            std::string nm;
            for (int b = 0; b < a.k; ++b) nm += (s >> b & 1) ? '1' : '0';
            g.element_names.push_back(nm.empty() ? "e" : nm);
        }
    } else if (a.family == "weak-order") {
        CoxType t = parse_type(a.type);
        g = t == CoxType::I2 ? weak_order_i2(a.rank, a.cap) : weak_order(t, a.rank, a.cap);
    } else if (a.family == "tamari") {
        g = tamari(a.n, a.cap);
    } else if (a.family == "cambrian") {
        CoxeterElementSpec s;
        s.type = parse_type(a.type);
        s.rank = a.rank;
        if (!a.word.empty()) {
            std::stringstream ss(a.word);
            std::string part;
            while (std::getline(ss, part, ',')) s.word.push_back(std::stoi(part));
        } else {
            s.word = s.type == CoxType::I2 ? std::vector<int>{}
                                           : coxeter_word(a.rank, a.preset.empty() ? "linear"
                                                                                   : a.preset);
        }
        g = cambrian(s, a.cap);
    } else if (a.family == "root-ideals") {
        IdealLattice J = order_ideal_lattice(root_poset(parse_type(a.type), a.rank), a.cap);
        g.lattice = std::move(J.lattice);
        g.name = std::string("root-ideals-") + a.type + std::to_string(a.rank);
        for (const Bitset& ideal : J.ideals) {
            std::string nm;
            for (int e = 0; e < ideal.size(); ++e) nm += ideal.test(e) ? '1' : '0';
            g.element_names.push_back(nm.empty() ? "e" : nm);
        }
    } else if (a.family == "figure") {
        g = figure_lattice(a.id);
    } else {
        throw UnknownId("family: " + a.family);
    }
    if (!a.name.empty()) g.name = a.name;
    return g;
}

inline json classification_json(const ClassificationReport& r) {
    json j;
    j["n"] = r.n;
    j["join_semidistributive"] = r.join_semidistributive;
    j["meet_semidistributive"] = r.meet_semidistributive;
    j["semidistributive"] = r.semidistributive;
    j["extremal"] = r.extremal;
    j["trim"] = r.trim;
    j["uniquely_paired"] = r.uniquely_paired;
    j["pairing_count"] = r.pairing_count;
    j["overlapping"] = r.overlapping;
    j["compatibly_dismantlable"] = r.compatibly_dismantlable;
    j["semidistrim"] = r.semidistrim;
    j["crosscut_simplicial"] = r.crosscut_simplicial;
    if (r.completely_uniquely_paired)
        j["completely_uniquely_paired"] = *r.completely_uniquely_paired;
    if (r.jsd_witness)
        j["join_semidistributive_witness"] = {r.jsd_witness->x, r.jsd_witness->y,
                                              r.jsd_witness->z};
    if (r.msd_witness)
        j["meet_semidistributive_witness"] = {r.msd_witness->x, r.msd_witness->y,
                                              r.msd_witness->z};
    if (r.overlap_witness) j["overlapping_witness"] = {r.overlap_witness->first,
                                                        r.overlap_witness->second};
    if (r.crosscut_witness) j["crosscut_witness"] = {r.crosscut_witness->first,
                                                     r.crosscut_witness->second};
    return j;
}

inline std::string classification_text(const LatticeDocument& doc,
                                       const ClassificationReport& r) {
    std::ostringstream out;
    out << "lattice " << (doc.name.empty() ? "(unnamed)" : doc.name) << "  n=" << r.n << "\n";
    auto flag = [&](const char* k, bool v) { out << "  " << k << ": " << (v ? "yes" : "no") << "\n"; };
    flag("join-semidistributive", r.join_semidistributive);
    flag("meet-semidistributive", r.meet_semidistributive);
    flag("semidistributive", r.semidistributive);
    flag("extremal", r.extremal);
    flag("trim", r.trim);
    flag("uniquely-paired", r.uniquely_paired);
    if (!r.uniquely_paired)
        out << "  pairings: " << (r.pairing_count >= 2 ? ">=2" : "0") << "\n";
    flag("overlapping", r.overlapping);
    flag("compatibly-dismantlable", r.compatibly_dismantlable);
    flag("semidistrim", r.semidistrim);
    flag("crosscut-simplicial", r.crosscut_simplicial);
    if (r.completely_uniquely_paired)
        flag("completely-uniquely-paired", *r.completely_uniquely_paired);
    if (r.overlap_witness)
        out << "  overlapping fails at cover (" << r.overlap_witness->first << ","
            << r.overlap_witness->second << ")\n";
    return out.str();
}

// dynamics subcommands share the model setup
inline int cmd_dynamics(const std::string& sub, const LatticeDocument& doc, bool as_json,
                        const std::string& out_path) {
    Lattice L = lattice_of(doc);
    std::ostringstream out;
    json j;
    if (sub == "pop") {
        auto down = orbits(L, DynOperator::pop_down);
        auto up = orbits(L, DynOperator::pop_up);
        if (as_json) {
            j["pop_down_image_size"] = down.image_size;
            j["pop_up_image_size"] = up.image_size;
            json pd = json::array(), pu = json::array();
            for (int x = 0; x < L.n(); ++x) {
                pd.push_back(pop_down(L, x));
                pu.push_back(pop_up(L, x));
            }
            j["pop_down"] = pd;
            j["pop_up"] = pu;
        } else {
            out << "|Pop_down(L)| = " << down.image_size << "\n";
            out << "|Pop_up(L)| = " << up.image_size << "\n";
            for (int x = 0; x < L.n(); ++x)
                out << element_name(doc, x) << "  down-> " << element_name(doc, pop_down(L, x))
                    << "  up-> " << element_name(doc, pop_up(L, x)) << "\n";
        }
    } else {
        SemidistrimModel m = analyze_semidistrim(L); // NotSemidistrim propagates
        if (sub == "row-orbits") {
            auto od = orbits(L, DynOperator::row, &m);
            if (as_json) {
                json cycles = json::array();
                for (const auto& c : od.cycles) cycles.push_back(c);
                j["orbits"] = cycles;
            } else {
                out << od.cycles.size() << " orbit(s)\n";
                for (const auto& c : od.cycles) {
                    out << "  (";
                    for (size_t i = 0; i < c.size(); ++i)
                        out << (i ? " " : "") << element_name(doc, c[i]);
                    out << ")\n";
                }
            }
        } else if (sub == "pop-polynomial") {
            PopPolynomial p = pop_polynomial(m);
            if (as_json) {
                json coeffs = json::array();
                for (auto [d, c] : p.coeffs) coeffs.push_back({d, c}); // ascending by degree
                j["coefficients"] = coeffs;
                j["at_one"] = p.at_one();
                j["pretty"] = p.str();
            } else {
                out << p.str() << "\n";
            }
        } else if (sub == "popping-pairs") {
            auto pp = popping_pairs(m);
            if (as_json) {
                json arr = json::array();
                for (auto [x, y] : pp) arr.push_back({x, y});
                j["popping_pairs"] = arr;
                j["count"] = pp.size();
            } else {
                out << pp.size() << " popping pair(s)\n";
                for (auto [x, y] : pp)
                    out << "  (" << element_name(doc, x) << ", " << element_name(doc, y) << ")\n";
            }
        } else if (sub == "shards") {
            json arr = json::array();
            for (int b = 0; b < L.n(); ++b) {
                auto sp = shard_pop(m, b);
                auto sr = shard_row(m, b);
                if (as_json) {
                    json e;
                    e["element"] = b;
                    e["shard_pop"] = sp;
                    e["shard_row"] = sr;
                    arr.push_back(e);
                } else {
                    auto render = [&](const std::vector<int>& v) {
                        std::string s = "{";
                        for (size_t i = 0; i < v.size(); ++i)
                            s += (i ? "," : "") + element_name(doc, v[i]);
                        return s + "}";
                    };
                    out << element_name(doc, b) << "  pop " << render(sp) << "  row "
                        << render(sr) << "\n";
                }
            }
            if (as_json) j["shards"] = arr;
        } else {
            throw UnknownId("dynamics subcommand: " + sub);
        }
    }
    detail::emit(out_path, as_json ? j.dump(2) + "\n" : out.str());
    return 0;
}

inline int cmd_verify(const std::string& suite, const verify::Options& opt, bool as_json,
                      const std::string& out_path) {
    std::vector<verify::CheckResult> results;
    if (suite == "theorems" || suite == "all") {
        auto r = verify::run_theorem_suite(opt);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (suite == "tables" || suite == "all") {
        auto r = verify::run_table_suite(opt);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (suite == "all") {
        auto r = verify::counterexample_checks();
        results.insert(results.end(), r.begin(), r.end());
    }
    if (results.empty()) throw UnknownId("verify suite: " + suite);

    verify::Summary s = verify::summarize(results);
    if (as_json) {
        json arr = json::array();
        for (const auto& r : results) {
            json e;
            e["subject"] = r.subject;
            e["check"] = r.check;
            e["status"] = r.skipped ? "skip" : r.pass ? "pass" : "fail";
            if (!r.note.empty()) e["note"] = r.note;
            arr.push_back(e);
        }
        json top;
        top["seed"] = opt.seed;
        top["results"] = arr;
        top["passed"] = s.passed;
        top["failed"] = s.failed;
        top["skipped"] = s.skipped;
        detail::emit(out_path, top.dump(2) + "\n");
    } else {
        std::ostringstream out;
        for (const auto& r : results) {
            out << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << "  " << r.check << "  ["
                << r.subject << "]";
            if (!r.note.empty()) out << "  " << r.note;
            out << "\n";
        }
        out << "seed " << opt.seed << ": " << s.passed << " passed, " << s.failed << " failed, "
            << s.skipped << " skipped\n";
        detail::emit(out_path, out.str());
    }
    return s.failed == 0 ? 0 : 1;
}

inline int run(int argc, char** argv) {
    CLI::App app{"latticelab: semidistrim lattice computations"};
    app.require_subcommand(1);

    GenArgs ga;
    verify::Options vopt;
    std::string in_path, out_path, format, suite = "all", dyn_sub;
    bool as_json = false;

    // global flags; subcommands fall through to them
    app.add_flag("--json", as_json, "JSON output");
    app.add_option("--max-size", vopt.max_size, "largest generated lattice in verify");
    app.add_option("--seed", vopt.seed, "random corpus seed");
    app.add_option("--cap", ga.cap, "generator size cap");

    auto* gen = app.add_subcommand("gen", "generate a lattice document");
    gen->fallthrough();
    gen->add_option("family", ga.family,
                    "chain|boolean|weak-order|tamari|cambrian|root-ideals|figure")
        ->required();
    gen->add_option("--type", ga.type, "Coxeter type: A|B|I2");
    gen->add_option("--rank", ga.rank, "rank (m for I2)");
    gen->add_option("--n", ga.n, "tamari index");
    gen->add_option("--k", ga.k, "chain/boolean size");
    gen->add_option("--id", ga.id, "figure id");
    gen->add_option("--preset", ga.preset, "coxeter word preset: linear|bipartite");
    gen->add_option("--word", ga.word, "comma-separated coxeter word, e.g. 2,1,3");
    gen->add_option("--name", ga.name, "document name override");
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* cls = app.add_subcommand("classify", "classify a lattice document");
    cls->fallthrough();
    cls->add_option("input", in_path, "document path or - for stdin")->required();
    cls->add_option("--out", out_path, "output file");

    auto* dyn = app.add_subcommand("dynamics", "rowmotion / pop-stack reports");
    dyn->fallthrough();
    dyn->add_option("subcommand", dyn_sub, "row-orbits|pop|pop-polynomial|popping-pairs|shards")
        ->required();
    dyn->add_option("input", in_path, "document path or - for stdin")->required();
    dyn->add_option("--out", out_path, "output file");

    auto* exp = app.add_subcommand("export", "DOT export");
    exp->fallthrough();
    exp->add_option("input", in_path, "document path or - for stdin")->required();
    exp->add_option("--format", format, "dot-hasse|dot-galois")->required();
    exp->add_option("--out", out_path, "output file");

    auto* ver = app.add_subcommand("verify", "run the verification suites");
    ver->fallthrough();
    ver->add_option("suite", suite, "theorems|tables|all");
    ver->add_option("--theorem-size", vopt.theorem_size, "theorem-suite size cap");
    ver->add_option("--random-count", vopt.random_count, "number of random lattices");
    ver->add_option("--jobs", vopt.jobs, "worker threads (0 = hardware)");
    ver->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            GenResult g = generate(ga);
            detail::emit(out_path, to_json(document_of(g)).dump(2) + "\n");
            return 0;
        }
        if (cls->parsed()) {
            LatticeDocument doc = detail::load_document(in_path);
            Lattice L = lattice_of(doc); // NotALattice -> exit 3
            ClassificationReport r = classify(L);
            detail::emit(out_path, as_json ? classification_json(r).dump(2) + "\n"
                                           : classification_text(doc, r));
            return 0;
        }
        if (dyn->parsed()) {
            LatticeDocument doc = detail::load_document(in_path);
            return cmd_dynamics(dyn_sub, doc, as_json, out_path);
        }
        if (exp->parsed()) {
            LatticeDocument doc = detail::load_document(in_path);
            Lattice L = lattice_of(doc);
            if (format == "dot-hasse")
                detail::emit(out_path, dot_hasse(doc, L));
            else if (format == "dot-galois")
                detail::emit(out_path, dot_galois(doc, L));
            else
                throw UnknownId("format: " + format);
            return 0;
        }
        if (ver->parsed()) return cmd_verify(suite, vopt, as_json, out_path);
    } catch (const NotALattice& e) {
        std::cerr << "error: not a lattice: " << e.what() << "\n";
        return 3;
    } catch (const NotSemidistrim& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NotPaired& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const NotUniquelyPaired& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const LatticeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: bad document: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace latticelab::cli
