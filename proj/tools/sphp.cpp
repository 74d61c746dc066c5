#include "sph/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

using namespace sph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct Output {
    std::optional<std::string> json;  // set when --json was given; empty means stdout
    bool csv = false;
    bool meta = false;
    std::size_t jobs = 0;

    bool json_stdout() const { return json && json->empty(); }
};

void add_output_flags(CLI::App* cmd, Output& out, std::string& json_arg, bool csv) {
    cmd->add_option("--json", json_arg, "Write a JSON report (to FILE, or stdout when no FILE)")
        ->expected(0, 1)
        ->type_name("[FILE]");
    if (csv) cmd->add_flag("--csv", out.csv, "Print CSV instead of text");
    cmd->add_flag("--meta", out.meta, "Add a meta section with version and timestamp to JSON");
}

std::string iso_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void emit_json(const Output& out, Json report) {
    if (!out.json) return;
    if (out.meta) {
        const std::size_t jobs = out.jobs ? out.jobs : std::max(1u, std::thread::hardware_concurrency());
        report["meta"] = {{"version", "1.0.0"}, {"timestamp", iso_now()}, {"jobs", jobs}};
    }
    const auto problems = schema_validate(load_schema("report"), report);
    for (const auto& v : problems) std::cerr << "warning: report schema: " << v.witness << '\n';
    if (out.json->empty()) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream f(*out.json);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + *out.json + "'");
    f << report.dump(2) << '\n';
}

std::string vec_text(const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

std::set<std::string> split_ids(const std::string& text) {
    std::set<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(item);
    return out;
}

int fail_invalid(const Output& out, const std::string& command, const std::string& message,
                 const std::vector<Violation>& vs = {}) {
    auto rep = make_report(command, false);
    rep["error"] = message;
    if (!vs.empty()) rep["violations"] = to_json(vs);
    if (out.json_stdout()) {
        emit_json(out, rep);
        return kExitInvalid;
    }
    std::cerr << "error: " << message << '\n';
    for (const auto& v : vs) std::cerr << "violation " << v.axiom << ": " << v.witness << '\n';
    emit_json(out, rep);
    return kExitInvalid;
}

// compute-p ---------------------------------------------------------------

struct ComputeArgs {
    std::string path, family, marks, emit;
};

int cmd_compute_p(const ComputeArgs& a, const Output& out) {
    SphericalSkeleton sk;
    try {
        if (!a.family.empty()) {
            if (!a.path.empty()) throw Error(ErrorCode::ParseError, "give either a file or --family, not both");
            const auto spec = parse_family_spec(a.family);
            sk = generate(spec);
            if (!a.marks.empty()) {
                std::vector<std::size_t> ks;
                for (const auto& m : split_ids(a.marks)) {
                    const auto k = std::stoul(m);
                    if (k < 1 || k > sk.sigma.size())
                        throw Error(ErrorCode::ParameterOutOfRange, "marking " + m + " outside 1.." +
                                                                        std::to_string(sk.sigma.size()));
                    ks.push_back(k - 1);
                }
                sk = with_markings(sk, ks);
            }
        } else {
            if (a.path.empty()) throw Error(ErrorCode::ParseError, "give a skeleton file or --family");
            sk = skeleton_from_json(read_json_file(a.path));
        }
    } catch (const std::exception& e) {
        return fail_invalid(out, "compute-p", e.what());
    }
    if (!a.emit.empty()) {
        std::ofstream f(a.emit);
        if (!f) return fail_invalid(out, "compute-p", "cannot write '" + a.emit + "'");
        f << to_json(sk).dump(2) << '\n';
    }
    const auto vs = validate(sk);
    if (!vs.empty()) return fail_invalid(out, "compute-p", "invalid skeleton", vs);

    const auto rep = compute_p_unchecked(sk);
    auto report = make_report("compute-p", true);
    report["compute_p"] = to_json(rep, sk);
    if (out.csv) {
        std::cout << to_csv(rep);
    } else if (!out.json_stdout()) {
        std::cout << "root system: " << sk.root_system.name() << ", |Sigma| = " << sk.sigma.size()
                  << ", |Delta| = " << sk.delta_size() << '\n';
        std::cout << "p = " << rep.p_string() << ", bound = " << rep.bound;
        if (rep.is_equality) std::cout << ", equality";
        else if (rep.gap) std::cout << ", gap = " << to_string(*rep.gap);
        std::cout << '\n';
        if (rep.finite) {
            std::cout << "theta = " << vec_text(rep.theta) << '\n';
            std::cout << "dual = " << vec_text(rep.dual) << '\n';
            std::cout << "certificate: " << (check_certificate(rep.lp, rep.lp_result) ? "verified" : "FAILED") << '\n';
        } else {
            std::cout << "improving ray = " << vec_text(rep.lp_result.ray) << '\n';
        }
    }
    emit_json(out, report);
    return kExitOk;
}

// verify ------------------------------------------------------------------

int cmd_verify(const std::string& what, std::size_t max_rank, const Output& out) {
    const bool tables = what == "tables" || what == "all";
    const bool equality = what == "equality" || what == "all";
    if (!tables && !equality) return fail_invalid(out, "verify", "expected tables, equality or all");
    if (max_rank < 1 || max_rank > kMaxPolytopeDim)
        return fail_invalid(out, "verify", "--max-rank must lie in 1.." + std::to_string(kMaxPolytopeDim));

    bool ok = true;
    auto report = make_report("verify", true);
    std::ostringstream text, csv;
    if (tables) {
        const auto rep = verify_tables(max_rank, out.jobs);
        ok = ok && rep.mismatches() == 0;
        report["tables"] = to_json(rep, max_rank);
        csv << to_csv(rep);
        std::map<std::string, std::pair<std::size_t, std::size_t>> groups;
        for (const auto& r : rep.rows) {
            auto& g = groups[r.group];
            ++g.first;
            if (!r.match) {
                ++g.second;
                text << "MISMATCH " << r.spec.label() << " marking " << r.marking << " (" << r.marking_root
                     << "): expected " << (r.expected ? to_string(*r.expected) : "none") << ", computed "
                     << r.report.p_string() << (r.error.empty() ? "" : ", " + r.error) << '\n';
            }
        }
        for (const auto& [name, c] : groups)
            text << name << ": " << c.first << " rows, " << c.second << " mismatches\n";
        text << "tables: " << rep.rows.size() << " rows, " << rep.mismatches() << " mismatches\n";
    }
    if (equality) {
        const auto rep = verify_equality_cases(max_rank, out.jobs);
        ok = ok && rep.failures() == 0;
        report["equality"] = to_json(rep, max_rank);
        if (tables) csv << '\n';
        csv << to_csv(rep);
        for (const auto* v : {&rep.listed, &rep.strict, &rep.pairs})
            for (const auto& r : *v)
                if (!r.pass) {
                    text << "FAIL " << r.spec.label() << " markings";
                    for (auto k : r.markings) text << ' ' << k;
                    text << ": p = " << (r.finite ? to_string(r.p) : "inf") << ", bound = " << r.bound;
                    if (r.listed)
                        text << ", theta feasible " << r.theta_feasible << ", attains " << r.theta_attains
                             << ", vertex " << r.theta_vertex;
                    text << '\n';
                }
        text << "equality: " << rep.listed.size() << " listed cases, " << rep.strict.size()
             << " other single markings, " << rep.pairs.size() << " marking pairs, " << rep.failures()
             << " failures\n";
    }
    report["ok"] = ok;
    if (out.csv) std::cout << csv.str();
    else if (!out.json_stdout()) std::cout << text.str() << (ok ? "verify: OK\n" : "verify: MISMATCH\n");
    emit_json(out, report);
    return ok ? kExitOk : kExitMismatch;
}

// fano --------------------------------------------------------------------

std::string point_list(const VPolytope& p, const std::vector<std::size_t>& idx) {
    std::string s;
    for (auto i : idx) s += (s.empty() ? "" : " ") + vec_text(p.vertices[i]);
    return s;
}

int cmd_fano(const std::string& path, const Output& out) {
    AugmentedDocument doc;
    try {
        doc = augmented_from_json(read_json_file(path));
    } catch (const std::exception& e) {
        return fail_invalid(out, "fano", e.what());
    }
    auto vs = validate(doc.data.skeleton);
    if (vs.empty()) {
        auto more = validate_augmentation(doc.data);
        vs.insert(vs.end(), more.begin(), more.end());
    }
    if (!vs.empty()) return fail_invalid(out, "fano", "invalid augmented data", vs);
    if (!doc.data.coroots && doc.data.skeleton.root_system.rank() > 0) std::cerr << "warning: no coroot table; (a2), (sigma1), (sigma2), (s) not checked\n";

    std::vector<RatVector> qpts;
    if (doc.polytope) {
        qpts = *doc.polytope;
    } else {
        for (std::size_t d = 0; d < doc.data.rho_prime.size(); ++d) qpts.push_back(doc.data.u(d));
    }
    const auto rv = validate_reflexive(doc.data, make_vpolytope(doc.data.lattice_rank, qpts));
    auto report = make_report("fano", rv.empty());
    Json fj;
    fj["reflexive"] = rv.empty();
    fj["violations"] = to_json(rv);
    if (!rv.empty()) {
        fj["Q"] = Json::array();
        for (const auto& v : make_vpolytope(doc.data.lattice_rank, qpts).vertices) fj["Q"].push_back(rational_json(v));
        fj["Qstar"] = Json::array();
        fj["supported"] = Json::array();
        report["fano"] = fj;
        if (!out.json_stdout()) {
            std::cout << "reflexive: no\n";
            for (const auto& v : rv) std::cout << "violation " << v.axiom << ": " << v.witness << '\n';
        }
        emit_json(out, report);
        return kExitInvalid;
    }

    const auto fp = make_fano(doc.data, doc.polytope);
    const auto ids = doc.data.skeleton.delta_ids();
    auto pts = [](const std::vector<RatVector>& vs) {
        Json a = Json::array();
        for (const auto& v : vs) a.push_back(rational_json(v));
        return a;
    };
    fj["Q"] = pts(fp.Q.vertices);
    fj["Qstar"] = pts(fp.Qstar.vertices);
    std::vector<RatVector> sup;
    for (auto i : fp.supported) sup.push_back(fp.Qstar.vertices[i]);
    fj["supported"] = pts(sup);

    std::ostringstream text;
    text << "reflexive: yes\n";
    text << "Q vertices: " << fp.Q.vertices.size() << ", Q* vertices: " << fp.Qstar.vertices.size() << '\n';
    std::vector<std::size_t> all(fp.Qstar.vertices.size());
    std::iota(all.begin(), all.end(), 0);
    text << "Q*: " << point_list(fp.Qstar, all) << '\n';
    text << "supported vertices (" << fp.supported.size() << "): " << point_list(fp.Qstar, fp.supported) << '\n';
    const bool cvc = color_vertex_check(fp);
    fj["color_vertex_check"] = cvc;
    bool ok = true;
    try {
        const auto mk = mukai_check(fp);
        const auto& c = mk.curves;
        Json dv = Json::array(), ed = Json::array();
        for (const auto& d : c.dv_curves) {
            dv.push_back({{"divisor", ids[d.divisor]},
                          {"vertex", rational_json(fp.Qstar.vertices[d.vertex])},
                          {"degree", rational_json(d.degree)}});
            text << "curve C(" << ids[d.divisor] << ", " << vec_text(fp.Qstar.vertices[d.vertex])
                 << "): degree " << to_string(d.degree) << '\n';
        }
        for (const auto& e : c.edge_curves) {
            ed.push_back({{"v", rational_json(fp.Qstar.vertices[e.v])},
                          {"w", rational_json(fp.Qstar.vertices[e.w])},
                          {"chi", e.chi},
                          {"degree", e.degree}});
            text << "edge curve " << vec_text(fp.Qstar.vertices[e.v]) << " -- " << vec_text(fp.Qstar.vertices[e.w])
                 << ": chi = " << vec_text(to_rat(e.chi)) << ", degree " << e.degree << '\n';
        }
        fj["dv_curves"] = dv;
        fj["edge_curves"] = ed;
        fj["iota"] = rational_json(c.iota);
        fj["epsilon"] = rational_json(c.epsilon);
        fj["picard"] = c.picard;
        fj["dim"] = c.dim;
        fj["mukai_lhs"] = rational_json(c.mukai_lhs);
        fj["q_factorial"] = true;
        fj["mukai_holds"] = mk.holds;
        fj["iota_le_epsilon"] = mk.iota_le_epsilon;
        fj["rfs_holds"] = mk.rfs_holds;
        fj["p_polytope"] = mk.p_finite ? rational_json(mk.p_polytope) : Json("inf");
        fj["p_skeleton"] = mk.p_skeleton.p_string();
        fj["p_matches"] = mk.p_matches;
        text << "iota = " << to_string(c.iota) << " (minimum over the curve generators)\n";
        text << "epsilon = " << to_string(c.epsilon) << (mk.iota_le_epsilon ? " (iota <= epsilon)" : " (iota > epsilon!)")
             << '\n';
        text << "picard = " << c.picard << ", dim = " << c.dim << '\n';
        text << "mukai: " << c.picard << "*(" << to_string(c.iota) << "-1) = " << to_string(c.mukai_lhs)
             << (mk.holds ? " <= " : " > ") << c.dim << (mk.holds ? ", holds" : ", VIOLATED") << '\n';
        text << "p(X) = " << (mk.p_finite ? to_string(mk.p_polytope) : "inf") << " on Q* meet cone(Sigma), "
             << mk.p_skeleton.p_string() << " from the skeleton" << (mk.p_matches ? "" : " (MISMATCH)") << '\n';
        ok = mk.holds && mk.iota_le_epsilon && mk.p_matches && cvc;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotQFactorial) fj["q_factorial"] = false;
        fj["error"] = e.what();
        text << e.what() << '\n';
        if (e.code() == ErrorCode::NoSupportedVertices) ok = false;
    }
    text << "color vertex check: " << (cvc ? "yes" : "no") << '\n';
    report["ok"] = ok;
    report["fano"] = fj;
    if (!out.json_stdout()) std::cout << text.str();
    emit_json(out, report);
    return ok ? kExitOk : kExitMismatch;
}

// smoothness ----------------------------------------------------------------

int cmd_smoothness(const std::string& path, const std::string& divisors, const Output& out) {
    SphericalSkeleton sk;
    try {
        sk = skeleton_from_json(read_json_file(path));
    } catch (const std::exception& e) {
        return fail_invalid(out, "smoothness", e.what());
    }
    const auto vs = validate(sk);
    if (!vs.empty()) return fail_invalid(out, "smoothness", "invalid skeleton", vs);
    const auto ids = split_ids(divisors);
    const auto all = sk.delta_ids();
    for (const auto& id : ids)
        if (std::find(all.begin(), all.end(), id) == all.end())
            return fail_invalid(out, "smoothness", "unknown divisor id '" + id + "'");
    SmoothnessResult res;
    try {
        res = smoothness_test(sk, ids);
    } catch (const Error& e) {
        return fail_invalid(out, "smoothness", e.what());
    }
    auto report = make_report("smoothness", true);
    report["smoothness"] = to_json(res, ids);
    if (!out.json_stdout()) {
        std::cout << "localized at {";
        std::size_t i = 0;
        for (const auto& id : ids) std::cout << (i++ ? ", " : "") << id;
        std::cout << "}: root system " << (res.local.root_system.rank() ? res.local.root_system.name() : "(empty)")
                  << ", |Sigma| = " << res.local.sigma.size() << ", |Delta| = " << res.local.delta_size() << '\n';
        std::cout << "p = " << res.report.p_string() << ", local bound = " << res.report.bound << '\n';
        std::cout << (res.smooth ? "smooth" : "not smooth") << '\n';
    }
    emit_json(out, report);
    return kExitOk;
}

// catalog-list --------------------------------------------------------------

int cmd_catalog(std::size_t max_rank, const Output& out) {
    auto report = make_report("catalog-list", true);
    Json rows = Json::array();
    if (out.csv) std::cout << "label,family,params,group,root_system,sigma,bound,printed_bound\n";
    for (const auto& spec : enumerate_specs(max_rank)) {
        const auto sk = generate(spec);
        std::vector<std::string> roots;
        for (const auto& g : sk.sigma) roots.push_back(root_label(g));
        const auto bound = sk.root_system.parabolic_count(sk.sp);
        const auto printed = printed_bound(spec);
        rows.push_back({{"label", spec.label()},
                        {"family", spec.family},
                        {"params", spec.params()},
                        {"group", table_group(spec)},
                        {"root_system", sk.root_system.name()},
                        {"sigma", roots},
                        {"bound", bound},
                        {"printed_bound", printed ? Json(*printed) : Json(nullptr)}});
        std::string joined;
        for (const auto& r : roots) joined += (joined.empty() ? "" : " ") + r;
        if (out.csv) {
            std::cout << csv_escape(spec.label()) << ',' << csv_escape(spec.family) << ',' << csv_escape(spec.params())
                      << ',' << table_group(spec) << ',' << sk.root_system.name() << ',' << csv_escape(joined) << ','
                      << bound << ',' << (printed ? std::to_string(*printed) : "") << '\n';
        } else if (!out.json_stdout()) {
            std::cout << spec.label() << "  " << sk.root_system.name() << "  [" << joined << "]  bound " << bound
                      << '\n';
        }
    }
    report["catalog"] = rows;
    emit_json(out, report);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of spherical skeletons and Gorenstein spherical Fano data"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sphp 1.0.0");

    Output out;
    std::string json_arg;
    std::size_t max_rank = 8;

    ComputeArgs ca;
    auto* cp = app.add_subcommand("compute-p", "Compute p of a skeleton file or a catalog family");
    cp->add_option("path", ca.path, "Skeleton JSON file");
    cp->add_option("--family", ca.family, "Catalog family, e.g. 2:G2 or 3:l=1,m=2");
    cp->add_option("--mark", ca.marks, "Comma-separated 1-based markings of Sigma");
    cp->add_option("--emit-skeleton", ca.emit, "Also write the skeleton as JSON to FILE");
    add_output_flags(cp, out, json_arg, true);

    std::string what;
    auto* vf = app.add_subcommand("verify", "Check the catalog against the reference tables");
    vf->add_option("what", what, "tables, equality or all")->required()->check(CLI::IsMember({"tables", "equality", "all"}));
    vf->add_option("--max-rank", max_rank, "Largest simple factor rank in parametric sweeps")->capture_default_str();
    vf->add_option("--jobs", out.jobs, "Worker threads (0 = available parallelism)");
    add_output_flags(vf, out, json_arg, true);

    std::string fano_path;
    auto* fa = app.add_subcommand("fano", "Validate augmented data and run the pseudo-index and Mukai checks");
    fa->add_option("path", fano_path, "Augmented JSON file")->required();
    add_output_flags(fa, out, json_arg, false);

    std::string sm_path, divisors;
    auto* sm = app.add_subcommand("smoothness", "Smoothness test along the orbit given by a divisor subset");
    sm->add_option("path", sm_path, "Skeleton JSON file")->required();
    sm->add_option("--divisors", divisors, "Comma-separated divisor ids (may be empty)")->required()->expected(0, 1);
    add_output_flags(sm, out, json_arg, false);

    auto* cl = app.add_subcommand("catalog-list", "List the symmetric catalog");
    cl->add_option("--max-rank", max_rank, "Largest simple factor rank")->capture_default_str();
    add_output_flags(cl, out, json_arg, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }
    for (auto* sub : app.get_subcommands())
        if (sub->count("--json")) out.json = json_arg;

    try {
        if (*cp) return cmd_compute_p(ca, out);
        if (*vf) return cmd_verify(what, max_rank, out);
        if (*fa) return cmd_fano(fano_path, out);
        if (*sm) return cmd_smoothness(sm_path, divisors, out);
        if (*cl) return cmd_catalog(max_rank, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
