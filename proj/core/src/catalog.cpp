#include "sph/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace sph {

namespace {

const std::map<std::string, SimpleType> kFixedType = {
    {"18", {'E', 6}}, {"19", {'E', 6}}, {"20", {'E', 6}}, {"21", {'E', 6}}, {"22", {'E', 7}},
    {"23", {'E', 7}}, {"24", {'E', 7}}, {"25", {'E', 7}}, {"26", {'E', 8}}, {"27", {'E', 8}},
    {"28", {'F', 4}}, {"29", {'F', 4}}, {"30", {'G', 2}},
};

bool uses_l(const std::string& f) { return f == "3" || f == "8" || f == "9" || f == "10/11" || f == "14" || f == "15"; }

bool uses_m(const std::string& f) {
    return f == "3" || f == "4" || f == "5" || f == "6" || f == "9" || f == "10/11" || f == "12" || f == "13" ||
           f == "15" || f == "16/1" || f == "16/2" || f == "17";
}

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

Root coeffs(std::size_t n, const std::map<std::size_t, std::int64_t>& one_based) {
    Root r(n, 0);
    for (auto [i, c] : one_based) r[i - 1] = c;
    return r;
}

IndexSet one_based(std::initializer_list<std::size_t> xs) {
    IndexSet s;
    for (auto x : xs) s.insert(x - 1);
    return s;
}

struct Builder {
    RootSystem rs;
    IndexSet sp;
    std::vector<Root> roots;
    std::vector<Arrow> arrows;

    std::size_t n() const { return rs.rank(); }
    void add(const std::map<std::size_t, std::int64_t>& c) { roots.push_back(coeffs(n(), c)); }
    void simple(std::size_t i) { add({{i, 1}}); }
    void dbl(std::size_t i) { add({{i, 2}}); }
    void sum(std::size_t i, std::size_t j) { add({{i, 1}, {j, 1}}); }
    void d3(std::size_t i) { add({{i, 1}, {i + 1, 2}, {i + 2, 1}}); }
    void arrow(std::size_t alpha, std::size_t target) { arrows.push_back({alpha - 1, target - 1}); }
    void spr(std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i <= hi; ++i) sp.insert(i - 1);
    }

    SphericalSkeleton build() const {
        std::vector<SphericalRoot> sigma;
        for (const auto& c : roots) {
            auto r = recognize(rs, c, std::nullopt, &sp);
            if (!r) throw Error(ErrorCode::InvalidSkeleton, "family root is not spherically closed");
            sigma.push_back(*r);
        }
        return make_skeleton(rs, sigma, sp, arrows);
    }
};

Root d5a(std::size_t n) { return coeffs(n, {{1, 2}, {2, 1}, {3, 2}, {4, 2}, {5, 1}}); }
Root d5b(std::size_t n) { return coeffs(n, {{2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 2}}); }

}  // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {"2",  "3",  "4",  "5",  "6",  "8",  "9",  "10/11", "12",
                                                   "13", "14", "15", "16/1", "16/2", "17", "18", "19", "20",
                                                   "21", "22", "23", "24", "25", "26", "27", "28", "29", "30"};
    return names;
}

std::string FamilySpec::params() const {
    if (family == "2") return type ? type->name() : "";
    std::string s;
    if (l >= 0) s += "l=" + std::to_string(l);
    if (m >= 0) s += (s.empty() ? "" : ",") + std::string("m=") + std::to_string(m);
    return s;
}

std::string FamilySpec::label() const {
    auto p = params();
    return p.empty() ? family : family + ":" + p;
}

FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    auto colon = text.find(':');
    spec.family = text.substr(0, colon);
    if (spec.family == "10" || spec.family == "11") spec.family = "10/11";
    const auto& names = family_names();
    if (std::find(names.begin(), names.end(), spec.family) == names.end())
        throw Error(ErrorCode::ParseError, "unknown family '" + spec.family + "'");
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (spec.family == "2") {
        if (rest.empty()) throw Error(ErrorCode::ParseError, "family 2 needs a type, e.g. 2:A3");
        spec.type = parse_simple_type(rest);
        check_parameters(spec);
        return spec;
    }
    if (kFixedType.count(spec.family)) {
        if (!rest.empty() && rest != kFixedType.at(spec.family).name())
            throw Error(ErrorCode::ParseError, "family " + spec.family + " has type " + kFixedType.at(spec.family).name());
        return spec;
    }
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value in '" + item + "'");
        auto key = item.substr(0, eq);
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad integer in '" + item + "'");
        }
        if (key == "l" && uses_l(spec.family)) spec.l = value;
        else if (key == "m" && uses_m(spec.family)) spec.m = value;
        else throw Error(ErrorCode::ParseError, "family " + spec.family + " has no parameter '" + key + "'");
    }
    check_parameters(spec);
    return spec;
}

void check_parameters(const FamilySpec& s) {
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ParameterOutOfRange, "family " + s.label() + ": " + why);
    };
    const auto& f = s.family;
    if (f == "2") {
        if (!s.type) fail("missing type");
        make_simple_type(s.type->letter, s.type->rank);
        if (s.type->letter == 'D' && s.type->rank < 4) fail("D_n needs n >= 4");
        return;
    }
    if (kFixedType.count(f)) return;
    if (uses_l(f) && s.l < 0) fail("missing l");
    if (uses_m(f) && s.m < 0) fail("missing m");
    const int l = s.l, m = s.m;
    bool ok = true;
    if (f == "3") ok = l >= 1 && m >= 0;
    else if (f == "4") ok = m >= 0;
    else if (f == "5") ok = m >= 2;
    else if (f == "6") ok = m >= 1;
    else if (f == "8") ok = l >= 1;
    else if (f == "9") ok = l >= 1 && m >= 0 && !(l == 1 && m == 0);
    else if (f == "10/11") ok = (l >= 2 && m >= 0) || (l == 1 && m >= 1);
    else if (f == "12" || f == "13") ok = m >= 2;
    else if (f == "14") ok = l >= 2;
    else if (f == "15") ok = l >= 0 && m >= 0 && ((l == 0 && m >= 3) || (l == 1 && m >= 2) || (l == 2 && m >= 1) || l >= 3);
    else if (f == "16/1" || f == "16/2" || f == "17") ok = m >= 1;
    if (!ok) fail("parameters outside the existence conditions");
}

std::size_t family_rank(const FamilySpec& s) {
    const auto& f = s.family;
    const std::size_t l = s.l < 0 ? 0 : static_cast<std::size_t>(s.l);
    const std::size_t m = s.m < 0 ? 0 : static_cast<std::size_t>(s.m);
    if (f == "2") return s.type ? static_cast<std::size_t>(s.type->rank) : 0;
    if (kFixedType.count(f)) return static_cast<std::size_t>(kFixedType.at(f).rank);
    if (f == "3") return 2 * m + l;
    if (f == "4" || f == "6") return 2 * m + 1;
    if (f == "5") return m;
    if (f == "8") return l + 1;
    if (f == "9") return m + l;
    if (f == "10/11") return 2 * m + l + 1;
    if (f == "12" || f == "13") return m + 1;
    if (f == "14") return l + 2;
    if (f == "15") return m + l + 1;
    if (f == "16/1") return 2 * m + 3;
    return 2 * m + 2;  // 16/2, 17
}

SphericalSkeleton generate(const FamilySpec& s) {
    check_parameters(s);
    const auto& f = s.family;
    const std::size_t l = s.l < 0 ? 0 : static_cast<std::size_t>(s.l);
    const std::size_t m = s.m < 0 ? 0 : static_cast<std::size_t>(s.m);
    const std::size_t n = family_rank(s);
    Builder b;
    auto type = [&](char letter) { b.rs = RootSystem({make_simple_type(letter, static_cast<int>(n))}); };

    if (f == "2") {
        b.rs = RootSystem({*s.type, *s.type});
        for (std::size_t i = 1; i <= n; ++i) b.sum(i, i + n);
    } else if (f == "3") {
        type('A');
        for (std::size_t k = 1; k <= m; ++k) b.sum(k, n + 1 - k);
        std::map<std::size_t, std::int64_t> mid;
        for (std::size_t i = m + 1; i <= m + l; ++i) mid[i] = 1;
        b.add(mid);
        if (l >= 3) b.spr(m + 2, m + l - 1);
        if (l == 1 && m >= 1) b.arrow(m + 1, m);
    } else if (f == "4") {
        type('A');
        for (std::size_t k = 1; k <= m; ++k) b.sum(k, n + 1 - k);
        b.dbl(m + 1);
    } else if (f == "5" || f == "13" || f == "21" || f == "25" || f == "27" || f == "29" || f == "30" ||
               (f == "15" && l == 0)) {
        if (kFixedType.count(f)) b.rs = RootSystem({kFixedType.at(f)});
        else type(f == "5" ? 'A' : f == "13" ? 'C' : 'D');
        for (std::size_t i = 1; i <= b.n(); ++i) b.dbl(i);
    } else if (f == "6") {
        type('A');
        for (std::size_t i = 1; i <= m; ++i) b.d3(2 * i - 1);
        for (std::size_t i = 1; i <= n; i += 2) b.sp.insert(i - 1);
    } else if (f == "8") {
        type('B');
        b.simple(1);
        std::map<std::size_t, std::int64_t> c;
        for (std::size_t i = 2; i <= l + 1; ++i) c[i] = 2;
        b.add(c);
        if (l >= 2) b.spr(3, l + 1);
        b.arrow(1, 2);
    } else if (f == "9") {
        type('B');
        for (std::size_t i = 1; i <= m; ++i) b.dbl(i);
        std::map<std::size_t, std::int64_t> c;
        for (std::size_t i = m + 1; i <= n; ++i) c[i] = 2;
        b.add(c);
        if (l >= 2) b.spr(m + 2, n);
    } else if (f == "10/11") {
        type('C');
        for (std::size_t i = 1; i <= m; ++i) b.d3(2 * i - 1);
        for (std::size_t i = 1; i <= 2 * m + 1; i += 2) b.sp.insert(i - 1);
        if (l == 1) {
            b.add({{n - 1, 2}, {n, 2}});
        } else {
            std::map<std::size_t, std::int64_t> c;
            for (std::size_t i = 2 * m + 1; i <= n; ++i) c[i] = 2;
            c[2 * m + 1] = 1;
            c[n] = 1;
            b.add(c);
            if (2 * m + 3 <= n) b.spr(2 * m + 3, n);
        }
    } else if (f == "12") {
        type('C');
        for (std::size_t i = 1; i <= m; ++i) b.dbl(i);
        b.simple(m + 1);
        b.arrow(m + 1, m);
    } else if (f == "14") {
        type('D');
        b.simple(1);
        std::map<std::size_t, std::int64_t> c;
        for (std::size_t i = 2; i <= n - 2; ++i) c[i] = 2;
        c[n - 1] = 1;
        c[n] = 1;
        b.add(c);
        b.spr(3, n);
        b.arrow(1, 2);
    } else if (f == "15") {
        type('D');
        for (std::size_t i = 1; i <= m; ++i) b.dbl(i);
        if (l == 1) {
            b.sum(n - 1, n);
        } else {
            std::map<std::size_t, std::int64_t> c;
            for (std::size_t i = m + 1; i <= n - 2; ++i) c[i] = 2;
            c[n - 1] = 1;
            c[n] = 1;
            b.add(c);
            b.spr(m + 2, n);
        }
    } else if (f == "16/1") {
        type('D');
        for (std::size_t i = 1; i <= m; ++i) b.d3(2 * i - 1);
        b.add({{n - 2, 1}, {n - 1, 1}, {n, 1}});
        for (std::size_t i = 1; i <= 2 * m + 1; i += 2) b.sp.insert(i - 1);
    } else if (f == "16/2" || f == "17") {
        type('D');
        for (std::size_t i = 1; i <= m; ++i) b.d3(2 * i - 1);
        for (std::size_t i = 1; i <= 2 * m + 1; i += 2) b.sp.insert(i - 1);
        if (f == "16/2") {
            b.simple(n);
            b.arrow(n, m);
        } else {
            b.dbl(n);
        }
    } else {
        b.rs = RootSystem({kFixedType.at(f)});
        const std::size_t r = b.n();
        if (f == "18") {
            b.add({{1, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}});
            b.add({{2, 2}, {3, 1}, {4, 2}, {5, 1}});
            b.sp = one_based({3, 4, 5});
        } else if (f == "19") {
            b.roots = {d5a(r), d5b(r)};
            b.sp = one_based({2, 3, 4, 5});
        } else if (f == "20") {
            b.sum(1, 6);
            b.dbl(2);
            b.sum(3, 5);
            b.dbl(4);
        } else if (f == "22" || f == "23") {
            b.roots = {d5a(r), d5b(r)};
            b.sp = one_based({2, 3, 4, 5});
            if (f == "22") {
                b.simple(7);
                b.arrow(7, 2);
            } else {
                b.dbl(7);
            }
        } else if (f == "24") {
            b.dbl(1);
            b.add({{2, 1}, {4, 2}, {5, 1}});
            b.dbl(3);
            b.add({{5, 1}, {6, 2}, {7, 1}});
            b.sp = one_based({2, 5, 7});
        } else if (f == "26") {
            b.roots = {d5a(r), d5b(r)};
            b.dbl(7);
            b.dbl(8);
            b.sp = one_based({2, 3, 4, 5});
        } else if (f == "28") {
            b.add({{1, 1}, {2, 2}, {3, 3}, {4, 2}});
            b.sp = one_based({1, 2, 3});
        }
    }
    return b.build();
}

SphericalSkeleton mark(const FamilySpec& spec, std::size_t gamma_index) {
    auto sk = generate(spec);
    if (gamma_index < 1 || gamma_index > sk.sigma.size())
        throw Error(ErrorCode::ParameterOutOfRange, "marking " + std::to_string(gamma_index) + " outside 1.." +
                                                        std::to_string(sk.sigma.size()));
    return with_markings(sk, {gamma_index - 1});
}

std::vector<FamilySpec> enumerate_specs(std::size_t max_rank) {
    std::vector<FamilySpec> out;
    const int R = static_cast<int>(max_rank);
    auto add = [&](FamilySpec s) {
        try {
            check_parameters(s);
        } catch (const Error&) {
            return;
        }
        if (family_rank(s) >= 1 && static_cast<int>(family_rank(s)) <= R) out.push_back(s);
    };
    for (char t : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
        for (int n = 1; n <= R; ++n) {
            try {
                auto st = make_simple_type(t, n);
                add({"2", st, -1, -1});
            } catch (const Error&) {
            }
        }
    for (const auto& f : family_names()) {
        if (f == "2") continue;
        if (kFixedType.count(f)) {
            out.push_back({f, std::nullopt, -1, -1});
            continue;
        }
        for (int l = uses_l(f) ? 0 : -1; l <= (uses_l(f) ? R : -1); ++l)
            for (int m = uses_m(f) ? 0 : -1; m <= (uses_m(f) ? R : -1); ++m) add({f, std::nullopt, l, m});
    }
    return out;
}

std::optional<std::size_t> printed_bound(const FamilySpec& s) {
    const auto& f = s.family;
    const std::int64_t l = s.l, m = s.m;
    if (f == "2") {
        const std::int64_t n = s.type->rank;
        switch (s.type->letter) {
            case 'A': return n * n + n;
            case 'B':
            case 'C': return 2 * n * n;
            case 'D': return 2 * n * n - 2 * n;
            case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
            case 'F': return 48;
            case 'G': return 12;
            default: return std::nullopt;
        }
    }
    static const std::map<std::string, std::size_t> fixed = {
        {"18", 30}, {"19", 24}, {"20", 36}, {"21", 36}, {"22", 51}, {"23", 51}, {"24", 60},
        {"25", 63}, {"26", 104}, {"27", 120}, {"28", 15}, {"29", 24}, {"30", 6}};
    if (fixed.count(f)) return fixed.at(f);
    std::int64_t v = -1;
    if (f == "3") v = 2 * m * m + 2 * l * m + m + 2 * l - 1;
    else if (f == "4") v = 2 * m * m + 3 * m + 1;
    else if (f == "5") v = (m * m + m) / 2;
    else if (f == "6") v = 2 * m * m + 2 * m;
    else if (f == "8") v = 4 * l;
    else if (f == "9") v = m * m + 2 * l * m + 2 * l - 1;
    else if (f == "10/11") v = 4 * m * m + 4 * l * m + 3 * m + 4 * l - 1;
    else if (f == "12" || f == "13") v = m * m + 2 * m + 1;
    else if (f == "14") v = 4 * l + 2;
    else if (f == "15") v = m * m + 2 * l * m + m + 2 * l;
    else if (f == "16/1") v = 4 * m * m + 8 * m + 5;
    else if (f == "16/2" || f == "17") v = 4 * m * m + 4 * m + 1;
    if (v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
}

std::optional<Rational> expected_p(const FamilySpec& s, std::size_t k1) {
    const auto& f = s.family;
    const std::int64_t l = s.l, m = s.m, k = static_cast<std::int64_t>(k1);
    const Rational h = q(1, 2);
    auto vec = [&](std::initializer_list<Rational> xs) -> std::optional<Rational> {
        std::vector<Rational> v(xs);
        if (k < 1 || k > static_cast<std::int64_t>(v.size())) return std::nullopt;
        return v[static_cast<std::size_t>(k - 1)];
    };
    if (f == "2") {
        const std::int64_t n = s.type->rank;
        if (k < 1 || k > n) return std::nullopt;
        switch (s.type->letter) {
            case 'A': {
                const std::int64_t j = std::min(k, n - k + 1);
                return q(n * n - 2 * j * n + 3 * n + 2 * j * j - 6 * j + 4);
            }
            case 'B':
                if (k == 1) return q(3 * n - 1);
                if (k < n) return q(3 * n + k * k - 2 * k - 4);
                return q(n * n - n);
            case 'C':
                if (k < n) return q(n + k * k - 1);
                return q(n * n + 1);
            case 'D':
                if (k == 1) return q(3 * n - 3);
                if (k <= n - 2) return q(3 * n + k * k - 2 * k - 6);
                return q(n * n - 2 * n + 1);
            case 'E':
                if (n == 6) return vec({q(37, 2), q(16), q(16), q(14), q(16), q(37, 2)});
                if (n == 7) return vec({q(27), q(25), q(25), q(22), q(19), q(19), q(20)});
                return vec({q(38), q(36), q(36), q(32), q(27), q(24), q(22), q(21)});
            case 'F': return vec({q(12), q(10), q(8), q(7)});
            case 'G': return vec({q(2), q(4)});
            default: return std::nullopt;
        }
    }
    if (f == "3") {
        if (k == 1) return q(3 * m + 2 * l - 1);
        if (k <= m) return q(3 * m + 2 * l + k * k - 2 * k - 4);
        if (k == m + 1 && m >= 1) return q(m * m + l * m + l - 2);
        return std::nullopt;
    }
    if (f == "4") {
        if (k >= 1 && k <= m) return q(m + k * k - 1);
        if (k == m + 1) return q(m * m + m + 1);
        return std::nullopt;
    }
    if (f == "5" || f == "6") {
        if (k < 1 || k > m) return std::nullopt;
        const std::int64_t j = std::min(k, m - k + 1);
        if (f == "5") return h * m * m - j * m + q(3, 2) * m + j * j - 4 * j + 3;
        return q(2 * m * m - 4 * j * m + 6 * m + 4 * j * j - 10 * j + 6);
    }
    if (f == "8") return vec({q(2 * l - 2), q(4 * l - 2)});
    if (f == "9") {
        if (k == 1) return q(m + 2 * l - 1);
        if (k < m) return m + 2 * l + h * k * k - h * k - 4;
        if (k == m && m >= 2) return l == 1 ? Rational(h * m * m - 1) : Rational(h * m * m + h * m + 2 * l - 4);
        if (k == m + 1 && m >= 1) return h * m * m + l * m - m + l - q(3, 2);
        return std::nullopt;
    }
    if (f == "10/11") {
        if (k >= 1 && k <= m) return q(3 * m + 2 * l + 2 * k * k - k - 1);
        if (k == m + 1) return l == 1 ? q(2 * m * m + 4 * m + 3) : q(2 * m * m + 2 * l * m + 2 * m + 2 * l);
        return std::nullopt;
    }
    if (f == "12") {
        if (k == 1) return q(m + 1);
        if (k <= m) return m + h * k * k - h * k - 2;
        if (k == m + 1) return h * m * m + h * m - 1;
        return std::nullopt;
    }
    if (f == "13") {
        if (k >= 1 && k <= m) return h * k * k + h * k - 1;
        if (k == m + 1) return h * m * m + h * m + 1;
        return std::nullopt;
    }
    if (f == "14") return vec({q(2 * l - 1), q(4 * l)});
    if (f == "15") {
        if (l == 0 && m >= 1 && (k == m || k == m + 1)) return h * m * m - h * m;
        if (k == 1) return q(m + 2 * l);
        if (k < m) return m + 2 * l + h * k * k - h * k - 3;
        if (k == m && l >= 1 && m >= 2) return h * m * m + h * m + 2 * l - 3;
        if (k == m + 1 && l >= 1 && m >= 1) return h * m * m + l * m - h * m + l - 1;
        return std::nullopt;
    }
    if (f == "16/1") {
        if (k == 1) return q(7 * m + 5);
        if (k <= m) return q(7 * m + 2 * k * k - 5 * k + 2);
        if (k == m + 1) return q(2 * m * m + 4 * m + 1);
        return std::nullopt;
    }
    if (f == "16/2") {
        if (k == 1) return q(7 * m + 1);
        if (k <= m) return q(7 * m + 2 * k * k - 5 * k - 2);
        if (k == m + 1) return q(2 * m * m + 2 * m - 1);
        return std::nullopt;
    }
    if (f == "17") {
        if (k >= 1 && k <= m) return q(3 * m + 2 * k * k - k - 1);
        if (k == m + 1) return q(2 * m * m + 2 * m + 1);
        return std::nullopt;
    }
    // fixed families, sigma ordered by smallest support index
    if (f == "18") return vec({q(13), q(20)});
    if (f == "19") return vec({q(24), q(24)});
    if (f == "20") return vec({q(4), q(7), q(5), q(6)});
    if (f == "21") return vec({q(13, 2), q(5), q(5), q(4), q(5), q(13, 2)});
    if (f == "22") return vec({q(31), q(22), q(23)});
    if (f == "23") return vec({q(14), q(23), q(25)});
    if (f == "24") return vec({q(13), q(11), q(12), q(9)});
    if (f == "25") return vec({q(10), q(9), q(9), q(8), q(6), q(6), q(13, 2)});
    if (f == "26") return vec({q(19), q(23), q(24), q(25)});
    if (f == "27") return vec({q(15), q(14), q(14), q(13), q(10), q(8), q(7), q(13, 2)});
    if (f == "28") return vec({q(10)});
    if (f == "29") return vec({q(4), q(3), q(2), q(3, 2)});
    if (f == "30") return vec({q(0), q(1)});
    return std::nullopt;
}

std::string table_group(const FamilySpec& s) {
    if (s.family == "2") {
        char t = s.type ? s.type->letter : 'A';
        return (t >= 'A' && t <= 'D') ? "classical-group-embeddings" : "exceptional-group-embeddings";
    }
    return kFixedType.count(s.family) ? "exceptional-symmetric" : "classical-symmetric";
}

std::optional<RatVector> equality_vertex(const FamilySpec& s, std::size_t k1) {
    const auto& f = s.family;
    const std::int64_t k = static_cast<std::int64_t>(k1);
    auto series = [](std::int64_t len, bool mirror, auto coeff) {
        RatVector v = zeros(static_cast<std::size_t>(len));
        for (std::int64_t j = 1; j <= len; ++j) v[static_cast<std::size_t>(mirror ? len - j : j - 1)] = coeff(j);
        return v;
    };
    if (f == "2" && s.type && s.type->letter == 'A') {
        const std::int64_t n = s.type->rank;
        if (k == 1 || k == n) return series(n, k == n && n > 1, [](std::int64_t j) { return q(j * j); });
        return std::nullopt;
    }
    if ((f == "3" && s.m == 0) || (f == "4" && s.m == 0) || (f == "9" && s.l >= 2 && s.m == 0) ||
        (f == "15" && s.l >= 3 && s.m == 0)) {
        if (k == 1) return RatVector{q(1)};
        return std::nullopt;
    }
    if (f == "5" || f == "6") {
        const std::int64_t m = s.m;
        if (k != 1 && k != m) return std::nullopt;
        auto c = [&](std::int64_t j) { return f == "5" ? q(j * j + j, 2) : q(2 * j * j - j); };
        return series(m, k == m && m > 1, c);
    }
    if (f == "19") {
        if (k == 1) return RatVector{q(1), q(10)};
        if (k == 2) return RatVector{q(10), q(1)};
    }
    return std::nullopt;
}

std::string root_label(const SphericalRoot& r) {
    std::string s;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        if (r.coeffs[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (r.coeffs[i] != 1) s += std::to_string(r.coeffs[i]);
        s += "a" + std::to_string(i + 1);
    }
    return s;
}

std::size_t TablesReport::mismatches() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return !r.match; }));
}

std::size_t EqualityReport::failures() const {
    std::size_t n = 0;
    for (const auto* v : {&listed, &strict, &pairs})
        for (const auto& r : *v) n += r.pass ? 0 : 1;
    return n;
}

void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs == 0) jobs = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<std::size_t>(n, 1));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

struct Instance {
    FamilySpec spec;
    std::size_t marking;
};

std::vector<Instance> single_markings(std::size_t max_rank) {
    std::vector<Instance> out;
    for (const auto& spec : enumerate_specs(max_rank)) {
        auto sk = generate(spec);
        for (std::size_t k = 1; k <= sk.sigma.size(); ++k) out.push_back({spec, k});
    }
    return out;
}

}  // namespace

TablesReport verify_tables(std::size_t max_rank, std::size_t jobs) {
    auto inst = single_markings(max_rank);
    TablesReport rep;
    rep.rows.resize(inst.size());
    parallel_for(inst.size(), jobs, [&](std::size_t i) {
        TableRow& row = rep.rows[i];
        row.spec = inst[i].spec;
        row.marking = inst[i].marking;
        row.group = table_group(row.spec);
        row.expected = expected_p(row.spec, row.marking);
        row.printed_bound = printed_bound(row.spec);
        try {
            auto sk = mark(row.spec, row.marking);
            row.marking_root = root_label(sk.sigma[row.marking - 1]);
            row.valid = validate(sk).empty();
            row.complete = is_complete(sk);
            row.report = compute_p_unchecked(sk);
            row.match = row.valid && row.complete && row.report.finite && row.expected &&
                        row.report.p_value == *row.expected;
            if (!row.expected) row.error = "no printed value";
        } catch (const Error& e) {
            row.error = e.what();
        }
    });
    return rep;
}

EqualityReport verify_equality_cases(std::size_t max_rank, std::size_t jobs) {
    auto inst = single_markings(max_rank);
    std::vector<EqualityRow> singles(inst.size());
    parallel_for(inst.size(), jobs, [&](std::size_t i) {
        EqualityRow& row = singles[i];
        row.spec = inst[i].spec;
        row.markings = {inst[i].marking};
        auto sk = mark(row.spec, inst[i].marking);
        auto rep = compute_p(sk);
        row.finite = rep.finite;
        row.p = rep.finite ? rep.p_value : Rational(0);
        row.bound = rep.bound;
        auto theta = equality_vertex(row.spec, inst[i].marking);
        row.listed = theta.has_value();
        if (row.listed) {
            row.theta = *theta;
            row.theta_feasible = theta_feasible(sk, row.theta);
            row.theta_attains = row.theta_feasible && p_objective(sk, row.theta) == row.p;
            row.theta_vertex = theta_is_vertex(sk, row.theta);
            row.pass = rep.finite && rep.is_equality && row.theta_feasible && row.theta_attains && row.theta_vertex;
        } else {
            row.pass = rep.finite && row.p < static_cast<long>(row.bound);
        }
    });
    EqualityReport out;
    std::map<std::string, std::vector<std::size_t>> eq_markings;
    std::map<std::string, FamilySpec> specs;
    for (auto& r : singles) {
        if (r.listed) {
            eq_markings[r.spec.label()].push_back(r.markings.front());
            specs[r.spec.label()] = r.spec;
            out.listed.push_back(r);
        } else {
            out.strict.push_back(r);
        }
    }
    for (const auto& [label, ks] : eq_markings) {
        if (ks.size() < 2) continue;
        for (std::size_t a = 0; a < ks.size(); ++a)
            for (std::size_t b = a + 1; b < ks.size(); ++b) {
                EqualityRow row;
                row.spec = specs[label];
                row.markings = {ks[a], ks[b]};
                auto sk = with_markings(generate(row.spec), {ks[a] - 1, ks[b] - 1});
                auto rep = compute_p(sk);
                row.finite = rep.finite;
                row.p = rep.finite ? rep.p_value : Rational(0);
                row.bound = rep.bound;
                row.pass = rep.finite && row.p < static_cast<long>(row.bound);
                out.pairs.push_back(row);
            }
    }
    return out;
}

}  // namespace sph
