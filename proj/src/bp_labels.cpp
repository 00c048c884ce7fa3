#include "bpfusion/bp_labels.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpf {

int HalfInt::to_int() const
{
    if (!is_integer()) throw DomainError("flow " + to_string(*this) + " is not an integer");
    return twice / 2;
}

std::string to_string(HalfInt h)
{
    if (h.is_integer()) return std::to_string(h.twice / 2);
    return std::to_string(h.twice) + "/2";
}

HalfInt parse_halfint(std::string_view text)
{
    Rational q = parse_rational(text);
    if (q.denominator() != 1 && q.denominator() != 2)
        throw DomainError("flow '" + std::string(text) + "' is not a half-integer");
    return {static_cast<int>(q.numerator() * (2 / q.denominator()))};
}

namespace {

// sigma^{-1}(I[r;s0,s1,0]) = I[r1,r2,r0; s1+1,-1,s0]
RSLabel flow_down(const RSLabel& l)
{
    return {{l.r[1], l.r[2], l.r[0]}, {l.s[1] + 1, -1, l.s[0]}};
}

// sigma(I[r;s0,-1,s2]) = I[r2,r0,r1; s2,s0-1,0]
RSLabel flow_up(const RSLabel& l)
{
    return {{l.r[2], l.r[0], l.r[1]}, {l.s[2], l.s[0] - 1, 0}};
}

void require_surv(const LevelParams& p, const RSLabel& lam)
{
    if (!in_surv(p, lam))
        throw DomainError("label " + to_string(lam) + " is not in the weight set at (" + std::to_string(p.u) +
                          "," + std::to_string(p.v) + ")");
}

}  // namespace

NormalForm normal_form(const LevelParams& p, const RSLabel& lam)
{
    require_surv(p, lam);
    NormalForm nf{lam, 0};
    while (nf.leftmost.s[2] == 0) {
        nf.leftmost = flow_down(nf.leftmost);
        ++nf.shift;
        if (nf.shift > 2) throw std::logic_error("normal form did not terminate");
    }
    return nf;
}

Label make_hw(const LevelParams& p, const RSLabel& lam, HalfInt ell)
{
    NormalForm nf = normal_form(p, lam);
    return {LabelKind::HW, ell + HalfInt::of(nf.shift), nf.leftmost, Rational(0)};
}

Label make_std(const LevelParams& p, const Rational& j, const RSLabel& lam, HalfInt ell)
{
    if (!in_infwts(p, lam))
        throw DomainError("label " + to_string(lam) + " does not label a standard family");
    return {LabelKind::Std, ell, orbit_of(lam).rep, frac_mod1(j)};
}

int orbit_type(const LevelParams& p, const RSLabel& lam)
{
    const RSLabel l = normal_form(p, lam).leftmost;
    if (l.s[1] != -1) return 1;
    if (l.s[2] == p.v - 2) return 3;
    return 2;
}

int orbit_type(const LevelParams& p, const Label& hw)
{
    if (hw.kind != LabelKind::HW) throw DomainError("orbit type needs a highest-weight label");
    return orbit_type(p, hw.lam);
}

std::vector<RSLabel> hw_orbit_members(const LevelParams& p, const RSLabel& lam)
{
    std::vector<RSLabel> out{normal_form(p, lam).leftmost};
    while (out.back().s[1] == -1 && out.size() < 3)
        out.push_back(flow_up(out.back()));
    return out;
}

std::vector<std::pair<HalfInt, RSLabel>> hw_flow_maps(const LevelParams& p, const RSLabel& lam)
{
    int e = normal_form(p, lam).shift;
    auto members = hw_orbit_members(p, lam);
    std::vector<std::pair<HalfInt, RSLabel>> out;
    for (int k = 0; k < static_cast<int>(members.size()); ++k)
        out.push_back({HalfInt::of(k - e), members[k]});
    return out;
}

Display display_form(const LevelParams& p, const Label& hw)
{
    if (orbit_type(p, hw.lam) == 3) return {flow_up(hw.lam), hw.ell - HalfInt::of(1)};
    return {hw.lam, hw.ell};
}

RSLabel type3_middle(const LevelParams& p, const Label& hw)
{
    if (hw.kind != LabelKind::HW || orbit_type(p, hw.lam) != 3)
        throw DomainError("label is not of type 3");
    return flow_up(hw.lam);
}

Label spectral_flow(const Label& l, HalfInt m)
{
    Label out = l;
    out.ell = l.ell + m;
    return out;
}

std::pair<Rational, Rational> flow_weights(const LevelParams& p, const Rational& j, const Rational& delta,
                                           const Rational& m)
{
    return {j + 2 * m * p.kappa, delta + m * j + m * m * p.kappa};
}

Rational std_charge(const LevelParams& p, const Label& s)
{
    return frac_mod1(s.j + 2 * s.ell.to_rational() * p.kappa);
}

Label conjugate_hw(const LevelParams& p, const Label& hw)
{
    if (hw.kind != LabelKind::HW) throw DomainError("conjugate_hw needs a highest-weight label");
    const RSLabel& l = hw.lam;
    RSLabel c{{l.r[0], l.r[2], l.r[1]}, {l.s[0], l.s[2] - 1, l.s[1] + 1}};
    return make_hw(p, c, -hw.ell);
}

Rational gap_charge_tilde(const LevelParams& p, const RSLabel& mu)
{
    return frac_mod1(j_of(p, mu) + 2 * p.kappa);
}

std::vector<Rational> gap_set_tilde(const LevelParams& p, const OrbitClass& o)
{
    std::vector<Rational> out;
    for (const auto& m : o.members) out.push_back(gap_charge_tilde(p, m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> gap_set_twisted(const LevelParams& p, const OrbitClass& o)
{
    std::vector<Rational> out;
    for (const auto& m : o.members) out.push_back(frac_mod1(j_tw_of(p, m)));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<RSLabel> nonsimple_member(const LevelParams& p, const Label& s)
{
    if (s.kind != LabelKind::Std) return std::nullopt;
    std::optional<RSLabel> hit;
    for (const auto& m : orbit_of(s.lam).members)
        if (gap_charge_tilde(p, m) == s.j) {
            if (hit) throw std::logic_error("two gap charges coincide in " + to_string(orbit_of(s.lam)));
            hit = m;
        }
    return hit;
}

bool is_simple(const LevelParams& p, const Label& l)
{
    return l.kind == LabelKind::HW || !nonsimple_member(p, l);
}

Label tilde_from_twisted(const LevelParams& p, const TwistedStd& t)
{
    return make_std(p, t.j + p.kappa, t.lam, t.ell - HalfInt::half(1));
}

TwistedStd twisted_from_tilde(const LevelParams& p, const Label& s)
{
    if (s.kind != LabelKind::Std) throw DomainError("not a standard label");
    return {s.ell + HalfInt::half(1), frac_mod1(s.j - p.kappa), s.lam};
}

void FormalSum::add(const Label& l, long long c)
{
    if (c == 0) return;
    auto it = terms_.find(l);
    if (it == terms_.end()) {
        terms_.emplace(l, c);
    } else if ((it->second += c) == 0) {
        terms_.erase(it);
    }
}

void FormalSum::add(const FormalSum& o, long long scale)
{
    for (const auto& [l, c] : o.terms_) add(l, c * scale);
}

long long FormalSum::coeff(const Label& l) const
{
    auto it = terms_.find(l);
    return it == terms_.end() ? 0 : it->second;
}

FormalSum FormalSum::operator+(const FormalSum& o) const
{
    FormalSum out = *this;
    out.add(o);
    return out;
}

FormalSum FormalSum::operator-(const FormalSum& o) const
{
    FormalSum out = *this;
    out.add(o, -1);
    return out;
}

FormalSum FormalSum::operator-() const
{
    FormalSum out;
    out.add(*this, -1);
    return out;
}

std::string to_string(const LevelParams& p, const Label& l)
{
    if (l.kind == LabelKind::HW) {
        Display d = display_form(p, l);
        return "I" + to_string(d.lam) + "^" + to_string(d.ell);
    }
    return "R~[" + to_string(l.j) + ";" + to_string(orbit_of(l.lam)) + "]^" + to_string(l.ell);
}

std::string to_string(const LevelParams& p, const FormalSum& f)
{
    if (f.empty()) return "0";
    std::string out;
    for (const auto& [l, c] : f.terms()) {
        long long a = c;
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        a = a < 0 ? -a : a;
        if (a != 1) out += std::to_string(a) + "*";
        out += to_string(p, l);
    }
    return out;
}

namespace {

std::string strip(std::string_view t)
{
    std::string out;
    for (char c : t)
        if (c != ' ' && c != '\t' && c != '\n') out += c;
    return out;
}

// position of the bracket closing the one at `open`
std::size_t match_bracket(const std::string& t, std::size_t open)
{
    int depth = 0;
    for (std::size_t i = open; i < t.size(); ++i) {
        if (t[i] == '[') ++depth;
        if (t[i] == ']' && --depth == 0) return i;
    }
    throw DomainError("unbalanced brackets in '" + t + "'");
}

}  // namespace

Label parse_label(const LevelParams& p, std::string_view text)
{
    std::string t = strip(text);
    auto flow_part = [&](std::size_t close) {
        std::string rest = t.substr(close + 1);
        if (rest.empty()) return HalfInt{};
        if (rest[0] != '^') throw DomainError("unexpected trailing text in '" + t + "'");
        return parse_halfint(rest.substr(1));
    };
    if (t.rfind("I[", 0) == 0) {
        std::size_t close = match_bracket(t, 1);
        RSLabel lam = parse_rslabel(t.substr(1, close));
        return make_hw(p, lam, flow_part(close));
    }
    if (t.rfind("R~[", 0) == 0) {
        std::size_t close = match_bracket(t, 2);
        std::string body = t.substr(3, close - 3);
        auto semi = body.find(';');
        if (semi == std::string::npos) throw DomainError("malformed standard label '" + t + "'");
        Rational j = parse_rational(body.substr(0, semi));
        OrbitClass o = parse_orbit(body.substr(semi + 1));
        return make_std(p, j, o.rep, flow_part(close));
    }
    throw DomainError("unknown label '" + std::string(text) + "'");
}

FormalSum parse_formal_sum(const LevelParams& p, std::string_view text)
{
    std::string t = strip(text);
    FormalSum out;
    if (t == "0") return out;
    // split on top-level '+' and on a binary '-' (one following a completed term)
    std::vector<std::pair<int, std::string>> parts;
    int depth = 0, sign = 1;
    std::string cur;
    char prev = 0;
    for (char c : t) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        bool binary_minus = c == '-' && depth == 0 && !cur.empty() && prev != '^' && prev != '*';
        if (depth == 0 && (c == '+' || binary_minus)) {
            if (cur.empty()) throw DomainError("malformed sum '" + t + "'");
            parts.emplace_back(sign, cur);
            cur.clear();
            sign = c == '-' ? -1 : 1;
        } else if (c == '-' && depth == 0 && cur.empty()) {
            sign = -sign;
        } else {
            cur += c;
        }
        prev = c;
    }
    if (cur.empty()) throw DomainError("malformed sum '" + t + "'");
    parts.emplace_back(sign, cur);
    for (const auto& [sg, part] : parts) {
        long long c = 1;
        std::string body = part;
        if (auto star = part.find('*'); star != std::string::npos) {
            Rational q = parse_rational(part.substr(0, star));
            if (!is_integer(q)) throw DomainError("non-integer coefficient in '" + part + "'");
            c = q.numerator();
            body = part.substr(star + 1);
        }
        out.add(parse_label(p, body), sg * c);
    }
    return out;
}

FormalSum gap_hw_expansion(const LevelParams& p, const RSLabel& mu, HalfInt ell)
{
    if (!in_infwts(p, mu)) throw DomainError("gap expansion needs an infinite-type label");
    FormalSum out;
    out.add(make_hw(p, mu, ell + HalfInt::of(1)), 1);
    out.add(make_hw(p, {mu.r, {mu.s[0], mu.s[1] - 1, mu.s[2] + 1}}, ell), 1);
    return out;
}

FormalSum to_simple_basis(const LevelParams& p, const FormalSum& f)
{
    FormalSum out;
    for (const auto& [l, c] : f.terms()) {
        if (auto m = nonsimple_member(p, l))
            out.add(gap_hw_expansion(p, *m, l.ell), c);
        else
            out.add(l, c);
    }
    return out;
}

GapDecomposition gap_decomposition(const LevelParams& p, const RSLabel& lam)
{
    if (!in_infwts(p, lam)) throw DomainError("gap decomposition needs a label with all s_i >= 0");
    GapDecomposition g;
    g.sub = make_hw(p, lam, HalfInt::half(1));
    g.quotient_arg = {{lam.r[0], lam.r[2], lam.r[1]}, {lam.s[0], lam.s[2], lam.s[1]}};
    g.quotient = conjugate_hw(p, make_hw(p, g.quotient_arg, HalfInt::half(1)));
    g.middle = {HalfInt{}, frac_mod1(j_tw_of(p, lam)), orbit_of(lam).rep};
    return g;
}

AtypicalSES atypical_ses(const LevelParams& p, const RSLabel& leftmost)
{
    NormalForm nf = normal_form(p, leftmost);
    if (nf.shift != 0) throw DomainError("label " + to_string(leftmost) + " is not leftmost in its orbit");
    AtypicalSES a;
    a.mu = {leftmost.r, {leftmost.s[0], leftmost.s[1] + 1, leftmost.s[2] - 1}};
    a.sub = make_hw(p, a.mu, HalfInt::of(1));
    a.middle = make_std(p, gap_charge_tilde(p, a.mu), a.mu, HalfInt{});
    a.quotient = make_hw(p, leftmost, HalfInt{});
    a.sub_type = orbit_type(p, a.mu);
    return a;
}

int default_depth(const LevelParams& p) { return 9 * p.v; }

Resolution resolution(const LevelParams& p, const Label& hw, int depth)
{
    if (hw.kind != LabelKind::HW) throw DomainError("resolution needs a highest-weight label");
    if (depth < 1) throw DomainError("resolution depth must be positive");
    Resolution res;
    Label cur = hw;
    long long sign = 1;
    const HalfInt limit = hw.ell + HalfInt::of(depth);
    while (cur.ell <= limit) {
        AtypicalSES ses = atypical_ses(p, cur.lam);
        res.terms.add(spectral_flow(ses.middle, cur.ell), sign);
        cur = spectral_flow(ses.sub, cur.ell);
        sign = -sign;
    }
    res.remainder = cur;
    res.remainder_coeff = sign;
    return res;
}

}  // namespace bpf
