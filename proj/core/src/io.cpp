#include "sph/io.hpp"

#include <sstream>

namespace sph {

namespace {

Json indices_json(const IndexSet& s) {
    Json a = Json::array();
    for (auto i : s) a.push_back(i + 1);
    return a;
}

IndexSet indices_from(const Json& a, std::size_t n, const std::string& what) {
    IndexSet s;
    for (const auto& x : a) {
        const auto i = x.get<std::size_t>();
        if (i < 1 || i > n) throw Error(ErrorCode::ParseError, what + " index " + std::to_string(i) + " out of range");
        s.insert(i - 1);
    }
    return s;
}

Json p_value_json(bool finite, const Rational& p) { return finite ? rational_json(p) : Json("inf"); }

std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

std::string vec_str(const RatVector& v) {
    std::vector<std::string> xs;
    for (const auto& x : v) xs.push_back(to_string(x));
    return join(xs, ";");
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Json rational_json(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error(ErrorCode::ParseError, "expected a rational, got " + j.dump());
}

Json to_json(const SphericalSkeleton& sk) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["root_system"] = sk.root_system.factor_names();
    Json sigma = Json::array();
    for (const auto& g : sk.sigma) sigma.push_back({{"pattern", pattern_name(g.kind)}, {"coeffs", g.coeffs}});
    j["sigma"] = sigma;
    j["sp"] = indices_json(sk.sp);
    Json colors = Json::array();
    for (const auto& c : sk.colors)
        colors.push_back({{"id", c.id},
                          {"moved_by", indices_json(c.moved_by)},
                          {"kind", to_string(c.kind)},
                          {"pairings", c.pairings},
                          {"m", c.m}});
    j["colors"] = colors;
    Json gamma = Json::array();
    for (const auto& g : sk.gamma) gamma.push_back({{"id", g.id}, {"pairings", g.pairings}});
    j["gamma"] = gamma;
    return j;
}

SphericalSkeleton skeleton_from_json(const Json& j) {
    require_schema("skeleton", j);
    SphericalSkeleton sk;
    sk.root_system = RootSystem::parse(j["root_system"].get<std::vector<std::string>>());
    const auto n = sk.root_system.rank();
    sk.sp = indices_from(j["sp"], n, "sp");
    std::size_t k = 0;
    for (const auto& g : j["sigma"]) {
        ++k;
        const auto kind = parse_pattern(g["pattern"].get<std::string>());
        const auto coeffs = g["coeffs"].get<Root>();
        auto r = recognize(sk.root_system, coeffs, kind, &sk.sp);
        if (!r) r = recognize(sk.root_system, coeffs, kind, nullptr);
        if (!r)
            throw Error(ErrorCode::InvalidSkeleton, "gamma" + std::to_string(k) + " is not a " +
                                                        g["pattern"].get<std::string>() + " root of " +
                                                        sk.root_system.name());
        sk.sigma.push_back(*r);
    }
    for (const auto& c : j["colors"]) {
        Color col;
        col.id = c["id"].get<std::string>();
        col.moved_by = indices_from(c["moved_by"], n, "moved_by");
        col.kind = *parse_color_kind(c["kind"].get<std::string>());
        col.pairings = c["pairings"].get<IntVector>();
        col.m = c["m"].get<std::int64_t>();
        sk.colors.push_back(col);
    }
    for (const auto& g : j["gamma"]) sk.gamma.push_back({g["id"].get<std::string>(), g["pairings"].get<IntVector>()});
    return sk;
}

Json to_json(const AugmentedDocument& doc) {
    const auto& a = doc.data;
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["skeleton"] = to_json(a.skeleton);
    j["lattice_rank"] = a.lattice_rank;
    j["sigma_in_M"] = a.sigma_in_M;
    const auto ids = a.skeleton.delta_ids();
    Json rho = Json::object(), m = Json::object();
    for (std::size_t d = 0; d < ids.size(); ++d) {
        rho[ids[d]] = a.rho_prime[d];
        m[ids[d]] = a.m[d];
    }
    j["rho_prime"] = rho;
    j["m"] = m;
    if (a.coroots) j["coroots"] = *a.coroots;
    if (doc.polytope) {
        Json pts = Json::array();
        for (const auto& p : *doc.polytope) pts.push_back(rational_json(p));
        j["polytope"] = pts;
    }
    return j;
}

AugmentedDocument augmented_from_json(const Json& j) {
    require_schema("augmented", j);
    AugmentedDocument doc;
    auto& a = doc.data;
    a.skeleton = skeleton_from_json(j["skeleton"]);
    a.lattice_rank = j["lattice_rank"].get<std::size_t>();
    a.sigma_in_M = j["sigma_in_M"].get<std::vector<IntVector>>();
    const auto ids = a.skeleton.delta_ids();
    const auto coeffs = a.skeleton.coefficients();
    const std::set<std::string> known(ids.begin(), ids.end());
    for (const auto& [key, _] : j["rho_prime"].items())
        if (!known.count(key)) throw Error(ErrorCode::ParseError, "rho_prime names unknown divisor '" + key + "'");
    if (j.contains("m"))
        for (const auto& [key, _] : j["m"].items())
            if (!known.count(key)) throw Error(ErrorCode::ParseError, "m names unknown divisor '" + key + "'");
    for (std::size_t d = 0; d < ids.size(); ++d) {
        if (!j["rho_prime"].contains(ids[d])) throw Error(ErrorCode::ParseError, "rho_prime missing for " + ids[d]);
        a.rho_prime.push_back(j["rho_prime"][ids[d]].get<IntVector>());
        a.m.push_back(j.contains("m") && j["m"].contains(ids[d]) ? j["m"][ids[d]].get<std::int64_t>() : coeffs[d]);
    }
    if (j.contains("coroots")) a.coroots = j["coroots"].get<std::vector<IntVector>>();
    if (j.contains("polytope")) {
        std::vector<RatVector> pts;
        for (const auto& p : j["polytope"]) {
            RatVector v;
            for (const auto& x : p) v.push_back(rational_from_json(x));
            if (v.size() != a.lattice_rank) throw Error(ErrorCode::ParseError, "polytope point of wrong length");
            pts.push_back(v);
        }
        doc.polytope = pts;
    }
    return doc;
}

Json to_json(const std::vector<Violation>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
    return a;
}

Json to_json(const PInvariantReport& rep, const SphericalSkeleton& sk) {
    Json j;
    j["root_system"] = sk.root_system.name();
    j["delta"] = sk.delta_ids();
    j["finite"] = rep.finite;
    j["p"] = p_value_json(rep.finite, rep.p_value);
    j["bound"] = rep.bound;
    j["gap"] = rep.gap ? rational_json(*rep.gap) : Json(nullptr);
    j["equality"] = rep.is_equality;
    j["theta"] = rational_json(rep.theta);
    j["dual"] = rational_json(rep.dual);
    j["offset"] = rational_json(rep.offset);
    j["certificate"] = rep.finite ? check_certificate(rep.lp, rep.lp_result) : rep.lp_result.status == LpStatus::Unbounded;
    return j;
}

Json to_json(const TablesReport& rep, std::size_t max_rank) {
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        Json row;
        row["group"] = r.group;
        row["family"] = r.spec.family;
        row["params"] = r.spec.params();
        row["marking"] = r.marking;
        row["marking_root"] = r.marking_root;
        row["expected"] = r.expected ? rational_json(*r.expected) : Json(nullptr);
        row["p"] = p_value_json(r.report.finite, r.report.p_value);
        row["bound"] = r.report.bound;
        row["theta"] = rational_json(r.report.theta);
        row["dual"] = rational_json(r.report.dual);
        row["printed_bound"] = r.printed_bound ? Json(*r.printed_bound) : Json(nullptr);
        row["match"] = r.match;
        if (!r.error.empty()) row["error"] = r.error;
        rows.push_back(row);
    }
    return {{"max_rank", max_rank}, {"rows", rows}, {"mismatches", rep.mismatches()}};
}

Json to_json(const EqualityReport& rep, std::size_t max_rank) {
    auto rows = [](const std::vector<EqualityRow>& v) {
        Json a = Json::array();
        for (const auto& r : v) {
            Json row;
            row["family"] = r.spec.family;
            row["params"] = r.spec.params();
            row["markings"] = r.markings;
            row["p"] = p_value_json(r.finite, r.p);
            row["bound"] = r.bound;
            row["listed"] = r.listed;
            if (r.listed) {
                row["theta"] = rational_json(r.theta);
                row["theta_feasible"] = r.theta_feasible;
                row["theta_attains"] = r.theta_attains;
                row["theta_vertex"] = r.theta_vertex;
            }
            row["pass"] = r.pass;
            a.push_back(row);
        }
        return a;
    };
    return {{"max_rank", max_rank},
            {"listed", rows(rep.listed)},
            {"strict", rows(rep.strict)},
            {"pairs", rows(rep.pairs)},
            {"failures", rep.failures()}};
}

Json to_json(const SmoothnessResult& res, const std::set<std::string>& ids) {
    Json j;
    j["divisors"] = std::vector<std::string>(ids.begin(), ids.end());
    j["local_root_system"] = res.local.root_system.name();
    j["local_delta"] = res.local.delta_ids();
    j["p"] = p_value_json(res.report.finite, res.report.p_value);
    j["bound"] = res.report.bound;
    j["smooth"] = res.smooth;
    return j;
}

Json make_report(const std::string& command, bool ok) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["ok"] = ok;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string to_csv(const PInvariantReport& rep) {
    std::ostringstream os;
    os << "p,bound,gap,equality,theta,dual\n";
    os << rep.p_string() << ',' << rep.bound << ',' << (rep.gap ? to_string(*rep.gap) : "") << ','
       << (rep.is_equality ? "true" : "false") << ',' << vec_str(rep.theta) << ',' << vec_str(rep.dual) << '\n';
    return os.str();
}

std::string to_csv(const TablesReport& rep) {
    std::ostringstream os;
    os << "group,family,params,marking,marking_root,expected,p,p_num,p_den,bound,printed_bound,match\n";
    for (const auto& r : rep.rows)
        os << r.group << ',' << csv_escape(r.spec.family) << ',' << csv_escape(r.spec.params()) << ',' << r.marking
           << ',' << r.marking_root << ',' << (r.expected ? to_string(*r.expected) : "") << ',' << r.report.p_string()
           << ',' << (r.report.finite ? r.report.p_value.get_num().get_str() : "inf") << ','
           << (r.report.finite ? r.report.p_value.get_den().get_str() : "") << ',' << r.report.bound << ',' << (r.printed_bound ? std::to_string(*r.printed_bound) : "") << ','
           << (r.match ? "true" : "false") << '\n';
    return os.str();
}

std::string to_csv(const EqualityReport& rep) {
    std::ostringstream os;
    os << "kind,family,params,markings,p,bound,theta,pass\n";
    auto emit = [&](const char* kind, const std::vector<EqualityRow>& v) {
        for (const auto& r : v) {
            std::vector<std::string> ks;
            for (auto k : r.markings) ks.push_back(std::to_string(k));
            os << kind << ',' << csv_escape(r.spec.family) << ',' << csv_escape(r.spec.params()) << ','
               << join(ks, ";") << ',' << (r.finite ? to_string(r.p) : "inf") << ',' << r.bound << ','
               << vec_str(r.theta) << ',' << (r.pass ? "true" : "false") << '\n';
        }
    };
    emit("listed", rep.listed);
    emit("strict", rep.strict);
    emit("pair", rep.pairs);
    return os.str();
}

}  // namespace sph
