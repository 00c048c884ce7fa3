#include "bpfusion/core_weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace bpf {

Rational frac_mod1(const Rational& x)
{
    long long n = x.numerator(), d = x.denominator();
    long long m = ((n % d) + d) % d;
    return Rational(m, d);
}

bool is_integer(const Rational& x) { return x.denominator() == 1; }

long double to_ld(const Rational& x)
{
    return static_cast<long double>(x.numerator()) / static_cast<long double>(x.denominator());
}

std::string to_string(const Rational& x)
{
    if (x.denominator() == 1)
        return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {

long long parse_ll(std::string_view t)
{
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    long long val = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), val);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
        throw DomainError("malformed integer '" + std::string(t) + "'");
    return val;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_ll(text));
    long long den = parse_ll(text.substr(slash + 1));
    if (den == 0)
        throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_ll(text.substr(0, slash)), den);
}

LevelParams level_params(int u, int v)
{
    if (u < 3 || v < 3 || std::gcd(u, v) != 1)
        throw DomainError("(u,v) = (" + std::to_string(u) + "," + std::to_string(v) +
                          ") is not nondegenerate-admissible");
    LevelParams p;
    p.u = u;
    p.v = v;
    p.k = Rational(u, v) - 3;
    p.kappa = Rational(2 * u - 3 * v, 6 * v);
    long long uv = static_cast<long long>(u) * v;
    p.c_bp = Rational(1) - Rational(6LL * (u - 2 * v) * (u - 2 * v), uv);
    p.c_w3 = Rational(2) - Rational(24LL * (u - v) * (u - v), uv);
    p.c_pi = Rational(-1) + Rational(6LL * (3 * u - 4 * v), v);
    return p;
}

std::array<int, 3> sigma3(const std::array<int, 3>& t, int times)
{
    int n = ((times % 3) + 3) % 3;
    std::array<int, 3> out = t;
    for (int i = 0; i < n; ++i)
        out = {out[2], out[0], out[1]};
    return out;
}

RSLabel sigma(const RSLabel& lam, int times)
{
    return {sigma3(lam.r, times), sigma3(lam.s, times)};
}

RSLabel conj_swap(const RSLabel& lam)
{
    return {{lam.r[0], lam.r[2], lam.r[1]}, {lam.s[0], lam.s[2], lam.s[1]}};
}

namespace {

bool r_ok(const LevelParams& p, const RSLabel& lam)
{
    return lam.r[0] >= 0 && lam.r[1] >= 0 && lam.r[2] >= 0 &&
           lam.r[0] + lam.r[1] + lam.r[2] == p.u - 3;
}

}  // namespace

bool in_surv(const LevelParams& p, const RSLabel& lam)
{
    const auto& s = lam.s;
    return r_ok(p, lam) && s[0] >= 0 && s[1] >= -1 && s[2] >= 0 &&
           s[0] + s[1] + s[2] == p.v - 3;
}

bool in_infwts(const LevelParams& p, const RSLabel& lam)
{
    return in_surv(p, lam) && lam.s[1] >= 0;
}

namespace {

std::vector<std::array<int, 3>> level_triples(int level)
{
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a <= level; ++a)
        for (int b = 0; a + b <= level; ++b)
            out.push_back({a, b, level - a - b});
    return out;
}

}  // namespace

std::vector<RSLabel> enumerate_surv(const LevelParams& p)
{
    std::vector<RSLabel> out;
    for (const auto& r : level_triples(p.u - 3))
        for (const auto& f : level_triples(p.v - 1)) {
            if (f[0] == 0) continue;
            out.push_back({r, {f[0] - 1, f[1] - 1, f[2]}});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RSLabel> enumerate_infwts_labels(const LevelParams& p)
{
    std::vector<RSLabel> out;
    for (const auto& lam : enumerate_surv(p))
        if (lam.s[1] >= 0) out.push_back(lam);
    return out;
}

OrbitClass orbit_of(const RSLabel& lam)
{
    OrbitClass o;
    o.members = {lam, sigma(lam, 1), sigma(lam, 2)};
    o.rep = *std::min_element(o.members.begin(), o.members.end());
    return o;
}

std::vector<OrbitClass> enumerate_infwts(const LevelParams& p)
{
    std::vector<OrbitClass> out;
    for (const auto& lam : enumerate_infwts_labels(p)) {
        OrbitClass o = orbit_of(lam);
        if (o.rep == lam) out.push_back(o);
    }
    return out;
}

std::array<Rational, 3> dynkin(const LevelParams& p, const RSLabel& lam)
{
    Rational t(p.u, p.v);
    return {lam.r[0] - t * (lam.s[0] + 1), lam.r[1] - t * (lam.s[1] + 1), lam.r[2] - t * lam.s[2]};
}

Rational j_of(const LevelParams& p, const RSLabel& lam)
{
    auto l = dynkin(p, lam);
    return (l[1] - l[2]) / 3;
}

Rational j_tw_of(const LevelParams& p, const RSLabel& lam) { return j_of(p, lam) + p.kappa; }

HWData hw_data_raw(const LevelParams& p, const RSLabel& lam)
{
    auto l = dynkin(p, lam);
    Rational d = l[1] - l[2], s = l[1] + l[2];
    HWData h;
    h.j = d / 3;
    h.delta = (d * d - 3 * s * (2 * (p.k + 1) - s)) / (12 * (p.k + 3));
    h.j_tw = h.j + p.kappa;
    h.delta_tw = h.delta + d / 6 + p.kappa / 4;
    return h;
}

HWData hw_data(const LevelParams& p, const RSLabel& lam)
{
    if (!in_surv(p, lam))
        throw DomainError("label " + to_string(lam) + " is not in the weight set");
    return hw_data_raw(p, lam);
}

long double W3Data::w() const
{
    return to_ld(w_num) / std::pow(static_cast<long double>(three_uv), 1.5L);
}

W3Data w3_data(const LevelParams& p, const RSLabel& lam)
{
    if (!in_infwts(p, lam))
        throw DomainError("label " + to_string(lam) + " is not a W3 label");
    std::array<long long, 3> x{};
    for (int i = 0; i < 3; ++i)
        x[i] = static_cast<long long>(p.v) * (lam.r[i] + 1) - static_cast<long long>(p.u) * (lam.s[i] + 1);
    long long uv = static_cast<long long>(p.u) * p.v;
    long long sq = x[1] * x[1] + x[2] * x[2] + x[1] * x[2];
    W3Data d;
    d.delta = Rational(sq - 3LL * (p.u - p.v) * (p.u - p.v), 3 * uv);
    d.w_num = Rational((x[0] - x[1]) * (x[0] - x[2]) * (x[1] - x[2]), 3);
    d.three_uv = 3 * uv;
    return d;
}

W3Data w3_data(const LevelParams& p, const OrbitClass& orbit) { return w3_data(p, orbit.rep); }

std::string to_string(const RSLabel& lam)
{
    std::string out = "[";
    for (int i = 0; i < 3; ++i)
        out += std::to_string(lam.r[i]) + (i < 2 ? "," : ";");
    for (int i = 0; i < 3; ++i)
        out += std::to_string(lam.s[i]) + (i < 2 ? "," : "]");
    return out;
}

std::string to_string(const OrbitClass& orbit) { return "[" + to_string(orbit.rep) + "]"; }

RSLabel parse_rslabel(std::string_view text)
{
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw DomainError("malformed label '" + std::string(text) + "'");
    std::string_view body(t);
    body = body.substr(1, body.size() - 2);
    auto semi = body.find(';');
    if (semi == std::string_view::npos)
        throw DomainError("malformed label '" + std::string(text) + "': missing ';'");
    auto triple = [&](std::string_view part) {
        std::array<int, 3> out{};
        for (int i = 0; i < 3; ++i) {
            auto comma = part.find(',');
            if ((i < 2) == (comma == std::string_view::npos))
                throw DomainError("malformed label '" + std::string(text) + "': expected three entries");
            out[i] = static_cast<int>(parse_ll(part.substr(0, comma)));
            if (i < 2) part.remove_prefix(comma + 1);
        }
        return out;
    };
    return {triple(body.substr(0, semi)), triple(body.substr(semi + 1))};
}

OrbitClass parse_orbit(std::string_view text)
{
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    if (t.size() < 4 || t.substr(0, 2) != "[[" || t.substr(t.size() - 2) != "]]")
        throw DomainError("malformed orbit '" + std::string(text) + "'");
    return orbit_of(parse_rslabel(std::string_view(t).substr(1, t.size() - 2)));
}

}  // namespace bpf
