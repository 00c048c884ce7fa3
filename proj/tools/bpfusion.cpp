#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpfusion/bp_verlinde.hpp"

using nlohmann::json;
using namespace bpf;

namespace {

struct Options {
    int u = 0, v = 0;
    bool table = false;
    long double tol = kDefaultTol;
    int depth = 0;
    std::string out;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json complex_json(Complex z) { return {{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}}; }

json rationals(const std::vector<Rational>& xs)
{
    json a = json::array();
    for (const auto& x : xs) a.push_back(to_string(x));
    return a;
}

json sum_json(const LevelParams& p, const FormalSum& f)
{
    json a = json::array();
    for (const auto& [l, c] : f.terms()) a.push_back({{"label", to_string(p, l)}, {"coeff", c}});
    return a;
}

json params_json(const LevelParams& p)
{
    return {{"u", p.u},
            {"v", p.v},
            {"k", to_string(p.k)},
            {"kappa", to_string(p.kappa)},
            {"c_bp", to_string(p.c_bp)},
            {"c_w3", to_string(p.c_w3)},
            {"c_pi", to_string(p.c_pi)}};
}

int depth_of(const Options& o, const LevelParams& p) { return o.depth > 0 ? o.depth : default_depth(p); }

std::string cell(const json& j)
{
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void print_table(std::ostream& os, const json& j, const std::string& prefix = "")
{
    if (j.is_array() && !j.empty() && j.front().is_object()) {
        std::vector<std::string> keys;
        for (const auto& [k, _] : j.front().items()) keys.push_back(k);
        std::vector<std::size_t> width(keys.size());
        for (std::size_t c = 0; c < keys.size(); ++c) {
            width[c] = keys[c].size();
            for (const auto& row : j)
                if (row.contains(keys[c])) width[c] = std::max(width[c], cell(row[keys[c]]).size());
        }
        if (!prefix.empty()) os << prefix << ":\n";
        for (std::size_t c = 0; c < keys.size(); ++c) os << std::left << std::setw(width[c] + 2) << keys[c];
        os << "\n";
        for (const auto& row : j) {
            for (std::size_t c = 0; c < keys.size(); ++c)
                os << std::left << std::setw(width[c] + 2) << (row.contains(keys[c]) ? cell(row[keys[c]]) : "");
            os << "\n";
        }
        return;
    }
    if (j.is_object()) {
        for (const auto& [k, val] : j.items()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            if (val.is_object() || (val.is_array() && !val.empty() && val.front().is_object()))
                print_table(os, val, key);
            else
                os << key << "  " << cell(val) << "\n";
        }
        return;
    }
    os << (prefix.empty() ? "" : prefix + "  ") << cell(j) << "\n";
}

void emit(const Options& o, const json& j)
{
    std::ostringstream ss;
    if (o.table)
        print_table(ss, j);
    else
        ss << j.dump(2) << "\n";
    if (o.out.empty()) {
        std::cout << ss.str();
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw DomainError("cannot write " + o.out);
    f << ss.str();
}

json list_modules(const Options& o)
{
    LevelParams p = level_params(o.u, o.v);
    json surv = json::array();
    for (const auto& lam : enumerate_surv(p)) {
        HWData d = hw_data(p, lam);
        surv.push_back({{"label", to_string(p, make_hw(p, lam))},
                        {"weight", to_string(lam)},
                        {"type", orbit_type(p, lam)},
                        {"j", to_string(d.j)},
                        {"delta", to_string(d.delta)},
                        {"j_tw", to_string(d.j_tw)},
                        {"delta_tw", to_string(d.delta_tw)}});
    }
    json orbits = json::array();
    for (const auto& orb : enumerate_infwts(p)) {
        W3Data w = w3_data(p, orb);
        orbits.push_back({{"orbit", to_string(orb)},
                          {"w3_delta", to_string(w.delta)},
                          {"w3_w", static_cast<double>(w.w())},
                          {"gaps_tilde", rationals(gap_set_tilde(p, orb))},
                          {"gaps_twisted", rationals(gap_set_twisted(p, orb))}});
    }
    return {{"params", params_json(p)}, {"highest_weight", surv}, {"standard_families", orbits}};
}

json orbit_cmd(const Options& o, const std::string& text)
{
    LevelParams p = level_params(o.u, o.v);
    std::string t = text;
    if (t.rfind("[[", 0) == 0 || (t.rfind("[", 0) == 0 && in_infwts(p, parse_rslabel(t)) && !in_surv(p, parse_rslabel(t)))) {
        OrbitClass orb = t.rfind("[[", 0) == 0 ? orbit_of(parse_orbit(t).rep) : orbit_of(parse_rslabel(t));
        if (!in_infwts(p, orb.rep)) throw DomainError(to_string(orb) + " is not a standard family");
        json members = json::array();
        for (const auto& m : orb.members) members.push_back(to_string(m));
        return {{"orbit", to_string(orb)},
                {"members", members},
                {"gaps_tilde", rationals(gap_set_tilde(p, orb))},
                {"gaps_twisted", rationals(gap_set_twisted(p, orb))}};
    }
    Label l = t.rfind("[", 0) == 0 ? make_hw(p, parse_rslabel(t)) : parse_label(p, t);
    if (l.kind != LabelKind::HW) {
        json gap = nullptr;
        if (auto m = nonsimple_member(p, l)) gap = sum_json(p, gap_hw_expansion(p, *m, l.ell));
        TwistedStd tw = twisted_from_tilde(p, l);
        return {{"label", to_string(p, l)},
                {"simple", is_simple(p, l)},
                {"charge", to_string(std_charge(p, l))},
                {"twisted", {{"ell", to_string(tw.ell)}, {"j", to_string(tw.j)}}},
                {"gap_expansion", gap}};
    }
    json flows = json::array();
    for (const auto& [m, mu] : hw_flow_maps(p, l.lam)) {
        HWData d = hw_data(p, mu);
        flows.push_back({{"flow", to_string(m)}, {"weight", to_string(mu)}, {"j", to_string(d.j)}, {"delta", to_string(d.delta)}});
    }
    return {{"label", to_string(p, l)},
            {"type", orbit_type(p, l)},
            {"leftmost", to_string(l.lam)},
            {"conjugate", to_string(p, conjugate_hw(p, l))},
            {"orbit", flows}};
}

json smatrix_cmd(const Options& o)
{
    LevelParams p = level_params(o.u, o.v);
    W3SMatrix m = w3_smatrix(p);
    json rows = json::object();
    for (std::size_t i = 0; i < m.orbits.size(); ++i) {
        json row = json::object();
        for (std::size_t j = 0; j < m.orbits.size(); ++j) row[to_string(m.orbits[j])] = complex_json(m.S[i][j]);
        rows[to_string(m.orbits[i])] = row;
    }
    MatrixReport r = w3_matrix_report(m);
    return {{"params", params_json(p)},
            {"S", rows},
            {"residuals",
             {{"symmetry", static_cast<double>(r.symmetry)},
              {"unitarity", static_cast<double>(r.unitarity)},
              {"conjugation", static_cast<double>(r.conjugation)}}}};
}

json kernel_cmd(const Options& o, const std::string& a_text, const std::string& b_text)
{
    LevelParams p = level_params(o.u, o.v);
    Label a = parse_label(p, a_text), b = parse_label(p, b_text);
    SKernelEntry e = a.kind == LabelKind::Std ? standard_kernel(p, a, b) : type3_kernel(p, a, b, o.tol);
    return {{"a", to_string(p, a)},
            {"b", to_string(p, b)},
            {"value", complex_json(e.value)},
            {"w3", complex_json(e.w3)},
            {"phase_exponent", to_string(e.phase_exponent)},
            {"denominator", complex_json(e.denominator)}};
}

json fuse_cmd(const Options& o, const std::string& a_text, const std::string& b_text)
{
    LevelParams p = level_params(o.u, o.v);
    Label a = parse_label(p, a_text), b = parse_label(p, b_text);
    auto is_t3 = [&](const Label& l) { return l.kind == LabelKind::HW && orbit_type(p, l) == 3; };
    FormalSum result;
    if (a.kind == LabelKind::Std && b.kind == LabelKind::Std)
        result = fuse_standard(p, a, b);
    else if (is_t3(a) && b.kind == LabelKind::Std)
        result = fuse_type3_standard(p, a, b);
    else if (is_t3(b) && a.kind == LabelKind::Std)
        result = fuse_type3_standard(p, b, a);
    else if (is_t3(a) && is_t3(b))
        result = fuse_type3_type3(p, a, b);
    else
        result = fuse_general(p, a, b, depth_of(o, p));
    return {{"lhs", to_string(p, a)},
            {"rhs", to_string(p, b)},
            {"result", sum_json(p, result)},
            {"simple_basis", sum_json(p, to_simple_basis(p, result))}};
}

json resolve_cmd(const Options& o, const std::string& text)
{
    LevelParams p = level_params(o.u, o.v);
    Label l = parse_label(p, text);
    int depth = depth_of(o, p);
    Resolution r = resolution(p, l, depth);
    return {{"label", to_string(p, l)},
            {"depth", depth},
            {"terms", sum_json(p, r.terms)},
            {"remainder", {{"label", to_string(p, r.remainder)}, {"coeff", r.remainder_coeff}}}};
}

json currents_cmd(const Options& o)
{
    LevelParams p = level_params(o.u, o.v);
    json a = json::array();
    bool ok = true;
    for (const auto& sc : simple_currents(p, depth_of(o, p))) {
        a.push_back({{"label", to_string(p, sc.label)},
                     {"j", to_string(sc.j)},
                     {"delta", to_string(sc.delta)},
                     {"verified", sc.verified}});
        ok = ok && sc.verified;
    }
    json out = {{"params", params_json(p)}, {"currents", a}};
    if (p.u == 3) out["note"] = "u = 3: the type-3 modules are spectral flows of the vacuum";
    if (!ok) {
        emit(o, out);
        throw VerificationFailure("a simple current failed its fusion check");
    }
    return out;
}

// each suite returns (passed, detail)
using SuiteResult = std::pair<bool, json>;

SuiteResult suite_w3_unitarity(const LevelParams& p, long double tol)
{
    MatrixReport r = w3_matrix_report(w3_smatrix(p));
    bool ok = r.symmetry <= tol && r.unitarity <= tol && r.conjugation <= tol;
    return {ok,
            {{"symmetry", static_cast<double>(r.symmetry)},
             {"unitarity", static_cast<double>(r.unitarity)},
             {"conjugation", static_cast<double>(r.conjugation)}}};
}

SuiteResult suite_w3_alcove(const LevelParams& p, long double tol)
{
    long double a = alcove_vanishing_residual(p), w = weyl_antisymmetry_residual(p);
    return {a <= tol && w <= tol, {{"alcove", static_cast<double>(a)}, {"weyl", static_cast<double>(w)}}};
}

SuiteResult suite_w3_sigma(const LevelParams& p, long double tol)
{
    auto labels = enumerate_infwts_labels(p);
    std::size_t bad = 0;
    for (const auto& a : labels)
        for (const auto& b : labels) bad += !sigma_phase_check(p, a, b, tol);
    return {bad == 0, {{"pairs", labels.size() * labels.size()}, {"failures", bad}}};
}

SuiteResult suite_w3_verlinde(const LevelParams& p, long double)
{
    W3SMatrix m = w3_smatrix(p);
    long double worst = 0;
    std::size_t n = m.orbits.size(), bad = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Complex z = w3_verlinde(m, a, b, c);
                long long expect = w3_fusion(p, m.orbits[a], m.orbits[b], m.orbits[c]);
                long double r = std::abs(z - Complex(expect));
                worst = std::max(worst, r);
                bad += r > 1e-6L;
            }
    return {bad == 0, {{"triples", n * n * n}, {"max_residual", static_cast<double>(worst)}}};
}

std::vector<Label> sample_standards(const LevelParams& p)
{
    std::vector<Label> out;
    for (const auto& orb : enumerate_infwts(p))
        for (Rational j : {Rational(1, 7), Rational(3, 11)}) out.push_back(make_std(p, j, orb.rep));
    return out;
}

SuiteResult suite_bp_oracle(const LevelParams& p, long double)
{
    auto stds = sample_standards(p);
    std::size_t checked = 0, bad = 0;
    for (const auto& a : stds)
        for (const auto& b : stds) {
            FormalSum f = fuse_standard(p, a, b);
            for (const auto& [c, n] : f.terms()) {
                ++checked;
                bad += verlinde_oracle(p, a, b, c) != n;
            }
        }
    return {bad == 0, {{"coefficients", checked}, {"mismatches", bad}}};
}

SuiteResult suite_bp_telescoping(const LevelParams& p, long double)
{
    auto stds = sample_standards(p);
    std::size_t checked = 0, bad = 0;
    for (const auto& lam : enumerate_surv(p)) {
        if (orbit_type(p, lam) != 3) continue;
        Label a = make_hw(p, lam);
        for (const auto& b : stds) {
            ++checked;
            bad += !(fuse_general(p, a, b, default_depth(p)) == to_simple_basis(p, fuse_type3_standard(p, a, b)));
        }
    }
    return {bad == 0, {{"pairs", checked}, {"mismatches", bad}}};
}

SuiteResult suite_subring(const LevelParams& p, long double)
{
    bool ok = subring_iso_check(p, default_depth(p));
    return {ok, {{"isomorphic", ok}}};
}

SuiteResult suite_currents(const LevelParams& p, long double)
{
    bool ok = true;
    json a = json::array();
    for (const auto& sc : simple_currents(p, default_depth(p))) {
        ok = ok && sc.verified;
        a.push_back(to_string(p, sc.label));
    }
    return {ok, {{"currents", a}}};
}

json verify_cmd(const Options& o, const std::string& suite)
{
    LevelParams p = level_params(o.u, o.v);
    const std::vector<std::pair<std::string, SuiteResult (*)(const LevelParams&, long double)>> suites = {
        {"w3-unitarity", suite_w3_unitarity}, {"w3-alcove", suite_w3_alcove},
        {"w3-sigma", suite_w3_sigma},         {"w3-verlinde", suite_w3_verlinde},
        {"bp-oracle", suite_bp_oracle},       {"bp-telescoping", suite_bp_telescoping},
        {"subring", suite_subring},           {"simple-currents", suite_currents}};
    json out = {{"params", params_json(p)}};
    bool ok = true, found = false;
    for (const auto& [name, fn] : suites) {
        if (suite != "all" && suite != name) continue;
        found = true;
        auto [passed, detail] = fn(p, o.tol);
        out["suites"][name] = {{"passed", passed}, {"detail", detail}};
        ok = ok && passed;
    }
    if (!found) throw DomainError("unknown suite '" + suite + "'");
    out["passed"] = ok;
    if (!ok) {
        emit(o, out);
        throw VerificationFailure("verification failed");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    Options o;
    if (const char* env = std::getenv("BPFUSION_TOL")) {
        try {
            o.tol = std::stold(env);
        } catch (const std::exception&) {
            std::cerr << "error: BPFUSION_TOL is not a number\n";
            return 1;
        }
    }

    CLI::App app{"Bershadsky-Polyakov modular data and Grothendieck fusion"};
    app.require_subcommand(1);
    auto* json_flag = app.add_flag("--json", "JSON output (default)");
    auto* table_flag = app.add_flag("--table", o.table, "aligned table output");
    json_flag->excludes(table_flag);
    app.add_option("--tol", o.tol, "numerical tolerance");
    app.add_option("--depth", o.depth, "resolution truncation depth")->check(CLI::PositiveNumber);
    app.add_option("--out", o.out, "write output to a file");

    auto level = [&](CLI::App* sub) {
        sub->add_option("u", o.u)->required();
        sub->add_option("v", o.v)->required();
        sub->fallthrough();
    };
    std::string a, b, suite = "all";

    auto* list = app.add_subcommand("list-modules", "highest-weight labels and standard families");
    level(list);
    auto* orbit = app.add_subcommand("orbit", "spectral flow orbit of a label");
    level(orbit);
    orbit->add_option("label", a)->required();
    auto* smat = app.add_subcommand("smatrix-w3", "W3 minimal model S-matrix");
    level(smat);
    auto* kern = app.add_subcommand("kernel-bp", "BP S-kernel entry");
    level(kern);
    kern->add_option("a", a)->required();
    kern->add_option("b", b)->required();
    auto* fuse = app.add_subcommand("fuse", "Grothendieck fusion product");
    level(fuse);
    fuse->add_option("a", a)->required();
    fuse->add_option("b", b)->required();
    auto* res = app.add_subcommand("resolve", "standard resolution of a highest-weight label");
    level(res);
    res->add_option("label", a)->required();
    auto* cur = app.add_subcommand("simple-currents", "order-3 simple currents");
    level(cur);
    auto* ver = app.add_subcommand("verify", "run verification suites");
    level(ver);
    ver->add_option("--suite", suite, "suite name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        json out;
        if (list->parsed()) out = list_modules(o);
        else if (orbit->parsed()) out = orbit_cmd(o, a);
        else if (smat->parsed()) out = smatrix_cmd(o);
        else if (kern->parsed()) out = kernel_cmd(o, a, b);
        else if (fuse->parsed()) out = fuse_cmd(o, a, b);
        else if (res->parsed()) out = resolve_cmd(o, a);
        else if (cur->parsed()) out = currents_cmd(o);
        else if (ver->parsed()) out = verify_cmd(o, suite);
        emit(o, out);
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const OracleFailure& e) {
        std::cerr << "oracle failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
