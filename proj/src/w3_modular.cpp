#include "bpfusion/w3_modular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bpf {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
const Complex kI(0, 1);

Weight2 plus_rho(const std::array<int, 3>& t) { return {t[1] + 1, t[2] + 1}; }

Complex weyl_sum(const Weight2& a, const Weight2& b, const Rational& scale)
{
    Complex out = 0;
    for (const auto& w : weyl_group())
        out += static_cast<long double>(w.det) * phase(-scale * inner_q(w.apply(a), b));
    return out;
}

}  // namespace

Complex phase(const Rational& q)
{
    long double x = 2 * kPi * to_ld(frac_mod1(q));
    return {std::cos(x), std::sin(x)};
}

Rational inner_q(const Weight2& a, const Weight2& b)
{
    return Rational(2LL * a[0] * b[0] + a[0] * b[1] + a[1] * b[0] + 2LL * a[1] * b[1], 3);
}

Complex w3_smatrix_entry(const LevelParams& p, const RSLabel& a, const RSLabel& b)
{
    Weight2 r = plus_rho(a.r), s = plus_rho(a.s), rp = plus_rho(b.r), sp = plus_rho(b.s);
    Complex pre = phase(inner_q(r, sp) + inner_q(s, rp));
    Complex val = pre * weyl_sum(r, rp, Rational(p.v, p.u)) * weyl_sum(s, sp, Rational(p.u, p.v));
    return val / (std::sqrt(3.0L) * p.u * p.v);
}

std::size_t W3SMatrix::index_of(const RSLabel& lam) const
{
    OrbitClass o = orbit_of(lam);
    for (std::size_t i = 0; i < orbits.size(); ++i)
        if (orbits[i].rep == o.rep) return i;
    throw DomainError("label " + to_string(lam) + " is not a W3 label at this level");
}

std::size_t W3SMatrix::vacuum_index() const { return index_of(w3_vacuum(params)); }

RSLabel w3_vacuum(const LevelParams& p) { return {{p.u - 3, 0, 0}, {p.v - 3, 0, 0}}; }

W3SMatrix w3_smatrix(const LevelParams& p)
{
    W3SMatrix m;
    m.params = p;
    m.orbits = enumerate_infwts(p);
    std::size_t n = m.orbits.size();
    m.S.assign(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.S[i][j] = w3_smatrix_entry(p, m.orbits[i].rep, m.orbits[j].rep);
    return m;
}

MatrixReport w3_matrix_report(const W3SMatrix& m)
{
    MatrixReport rep;
    std::size_t n = m.orbits.size();
    std::vector<std::size_t> conj(n);
    for (std::size_t i = 0; i < n; ++i) conj[i] = m.index_of(conj_swap(m.orbits[i].rep));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rep.symmetry = std::max(rep.symmetry, std::abs(m.S[i][j] - m.S[j][i]));
            Complex uu = 0, sq = 0;
            for (std::size_t k = 0; k < n; ++k) {
                uu += m.S[i][k] * std::conj(m.S[j][k]);
                sq += m.S[i][k] * m.S[k][j];
            }
            rep.unitarity = std::max(rep.unitarity, std::abs(uu - Complex(i == j ? 1 : 0)));
            rep.conjugation = std::max(rep.conjugation, std::abs(sq - Complex(conj[i] == j ? 1 : 0)));
        }
    return rep;
}

bool sigma_phase_check(const LevelParams& p, const RSLabel& a, const RSLabel& b, long double tol)
{
    Complex s0 = w3_smatrix_entry(p, a, b);
    Complex ph = phase(p.v * j_tw_of(p, b)) * static_cast<long double>(p.v % 2 ? -1 : 1);
    Complex sr = w3_smatrix_entry(p, {sigma3(a.r), a.s}, b);
    Complex ss = w3_smatrix_entry(p, {a.r, sigma3(a.s)}, b);
    Complex both = w3_smatrix_entry(p, sigma(a), b);
    return std::abs(sr - ph * s0) <= tol && std::abs(ss - s0 / ph) <= tol && std::abs(both - s0) <= tol;
}

namespace {

std::vector<std::array<int, 3>> all_triples(int level, int lo)
{
    std::vector<std::array<int, 3>> out;
    for (int a = lo; a <= level - 2 * lo; ++a)
        for (int b = lo; a + b <= level - lo; ++b)
            out.push_back({a, b, level - a - b});
    return out;
}

// shifted action of the affine reflection on a level-l triple
std::array<int, 3> affine_reflect(const std::array<int, 3>& s)
{
    int x0 = s[0] + 1;
    return {-x0 - 1, s[1] + x0, s[2] + x0};
}

}  // namespace

long double alcove_vanishing_residual(const LevelParams& p)
{
    long double worst = 0;
    auto targets = enumerate_infwts_labels(p);
    for (const auto& r : all_triples(p.u - 3, 0))
        for (const auto& s : all_triples(p.v - 3, -1)) {
            if (s[0] != -1 && s[1] != -1 && s[2] != -1) continue;
            for (const auto& b : targets)
                worst = std::max(worst, std::abs(w3_smatrix_entry(p, {r, s}, b)));
        }
    return worst;
}

long double weyl_antisymmetry_residual(const LevelParams& p)
{
    long double worst = 0;
    auto labels = enumerate_infwts_labels(p);
    for (const auto& a : labels)
        for (const auto& b : labels) {
            Complex s0 = w3_smatrix_entry(p, a, b);
            Weight2 sr = plus_rho(a.s);
            for (const auto& w : weyl_group()) {
                Weight2 ws = w.apply(sr);
                RSLabel img{a.r, {p.v - 3 - (ws[0] - 1) - (ws[1] - 1), ws[0] - 1, ws[1] - 1}};
                worst = std::max(worst, std::abs(w3_smatrix_entry(p, img, b) - Complex(w.det) * s0));
            }
            RSLabel img{a.r, affine_reflect(a.s)};
            worst = std::max(worst, std::abs(w3_smatrix_entry(p, img, b) + s0));
        }
    return worst;
}

namespace {

std::array<Complex, 2> xi_of(const LevelParams& p, const RSLabel& b)
{
    Weight2 sp = plus_rho(b.s);
    long double c = 2 * kPi * p.u / static_cast<long double>(p.v);
    return {-kI * c * static_cast<long double>(sp[0]), -kI * c * static_cast<long double>(sp[1])};
}

}  // namespace

bool ratio_weyl_character_check(const LevelParams& p, const RSLabel& a, const RSLabel& b, long double tol)
{
    RSLabel zero{a.r, {p.v - 3, 0, 0}};
    Complex den = w3_smatrix_entry(p, zero, b);
    if (std::abs(den) < tol)
        throw NearZeroDenominator("S entry " + to_string(zero) + " x " + to_string(b) + " vanishes");
    Complex lhs = w3_smatrix_entry(p, a, b) / den;
    Weight2 s{a.s[1], a.s[2]};
    Complex rhs = phase(inner_q(s, plus_rho(b.r))) * weyl_character(s, xi_of(p, b));
    return std::abs(lhs - rhs) <= tol * std::max<long double>(1, std::abs(rhs));
}

bool tensor_sum_check(const LevelParams& p, const RSLabel& a, const Weight2& t, const RSLabel& b, long double tol)
{
    Complex lhs = 0;
    for (const auto& [mu, mult] : weight_multiplicities(t)) {
        RSLabel shifted{a.r, {a.s[0] - mu[0] - mu[1], a.s[1] + mu[0], a.s[2] + mu[1]}};
        lhs += static_cast<long double>(mult) * w3_smatrix_entry(p, shifted, b);
    }
    Complex rhs = phase(inner_q(t, plus_rho(b.r))) * weyl_character(t, xi_of(p, b)) * w3_smatrix_entry(p, a, b);
    return std::abs(lhs - rhs) <= tol * std::max<long double>(1, std::abs(rhs));
}

bool lemma_sum_check(int v, Complex x, Complex X1, Complex X2, Complex X3, long double tol)
{
    Complex lhs = 0;
    for (int m = 0; m <= v - 3; ++m) {
        // h_m(X1,X2,X3)
        Complex h = 0;
        for (int a = 0; a <= m; ++a)
            for (int b = 0; a + b <= m; ++b)
                h += std::pow(X1, a) * std::pow(X2, b) * std::pow(X3, m - a - b);
        lhs += std::pow(x, m) * h;
    }
    Complex rhs = (Complex(1) - std::pow(x, v) * std::pow(X2, v)) /
                  ((Complex(1) - x * X1) * (Complex(1) - x * X2) * (Complex(1) - x * X3));
    return std::abs(lhs - rhs) <= tol * std::max<long double>(1, std::abs(rhs));
}

bool sum_fund_modules_check(const LevelParams& p, const RSLabel& b, long double jp, long double tol)
{
    long double y = jp - to_ld(p.kappa);
    Complex sin_prod = 1;
    for (int i = 0; i < 3; ++i) {
        long double c = y - to_ld(j_tw_of(p, sigma(b, i)));
        if (std::abs(c - std::round(c)) < 1e-7L)
            throw DomainError("charge is singular for " + to_string(b));
        sin_prod *= std::sin(kPi * c);
    }
    // x = -exp(2 pi i (<r'+rho, w2> - y))
    Weight2 rp = plus_rho(b.r);
    long double arg = to_ld(inner_q(rp, {0, 1})) - y;
    Complex x = -std::exp(kI * (2 * kPi * arg));
    auto xi = xi_of(p, b);
    Complex lhs = 0;
    for (int m = 0; m <= p.v - 3; ++m)
        lhs += std::pow(x, m) * weyl_character({0, m}, xi);
    Complex rhs = (Complex(1) - std::exp(kI * (-2 * kPi * p.v * y)) * phase(p.v * j_tw_of(p, b))) *
                  std::exp(kI * (3 * kPi * y)) / (8.0L * sin_prod);
    return std::abs(lhs - rhs) <= tol * std::max<long double>(1, std::abs(rhs));
}

bool in_root_lattice(int t1, int t2) { return ((t1 - t2) % 3 + 3) % 3 == 0; }

RSLabel fusion_representative(const OrbitClass& o, bool use_s)
{
    for (const auto& m : o.members) {
        const auto& t = use_s ? m.s : m.r;
        if (in_root_lattice(t[1], t[2])) return m;
    }
    throw std::logic_error("no root-lattice representative for " + to_string(o));
}

long long w3_fusion_with(const LevelParams& p, const RSLabel& a, const RSLabel& b, const RSLabel& c)
{
    return kac_walton(p.u - 3, a.r, b.r, c.r) * kac_walton(p.v - 3, a.s, b.s, c.s);
}

long long w3_fusion(const LevelParams& p, const OrbitClass& a, const OrbitClass& b, const OrbitClass& c)
{
    bool use_s = p.u % 3 == 0;
    return w3_fusion_with(p, fusion_representative(a, use_s), fusion_representative(b, use_s),
                          fusion_representative(c, use_s));
}

Complex w3_verlinde(const W3SMatrix& m, std::size_t a, std::size_t b, std::size_t c)
{
    std::size_t vac = m.vacuum_index();
    Complex sum = 0;
    for (std::size_t k = 0; k < m.orbits.size(); ++k)
        sum += m.S[a][k] * m.S[b][k] * std::conj(m.S[c][k]) / m.S[vac][k];
    return sum;
}

}  // namespace bpf
