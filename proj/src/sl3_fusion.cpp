#include "bpfusion/sl3_fusion.hpp"

#include <stdexcept>

#include "bpfusion/core_weights.hpp"

namespace bpf {

const std::vector<WeylElement>& weyl_group()
{
    static const std::vector<WeylElement> group = [] {
        // simple reflections on Dynkin labels
        WeylElement id{{{{1, 0}, {0, 1}}}, 1};
        WeylElement w1{{{{-1, 0}, {1, 1}}}, -1};
        WeylElement w2{{{{1, 1}, {0, -1}}}, -1};
        auto mul = [](const WeylElement& a, const WeylElement& b) {
            WeylElement c{};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    c.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
            c.det = a.det * b.det;
            return c;
        };
        auto w12 = mul(w1, w2), w21 = mul(w2, w1);
        return std::vector<WeylElement>{id, w1, w2, w12, w21, mul(w1, w21)};
    }();
    return group;
}

long long sl3_dim(const Weight2& t)
{
    return static_cast<long long>(t[0] + 1) * (t[1] + 1) * (t[0] + t[1] + 2) / 2;
}

WeightMultiplicityMap weight_multiplicities(const Weight2& t)
{
    if (t[0] < 0 || t[1] < 0)
        throw DomainError("weight [" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "] is not dominant");
    // Gelfand-Tsetlin patterns with top row (a+b, b, 0)
    const int a = t[0], b = t[1];
    WeightMultiplicityMap out;
    for (int m1 = b; m1 <= a + b; ++m1)
        for (int m2 = 0; m2 <= b; ++m2)
            for (int p = m2; p <= m1; ++p) {
                int e1 = p, e2 = m1 + m2 - p, e3 = a + 2 * b - m1 - m2;
                ++out[{e1 - e2, e2 - e3}];
            }
    return out;
}

Complex weyl_character(const Weight2& t, const std::array<Complex, 2>& xi)
{
    Complex sum = 0;
    for (const auto& [mu, mult] : weight_multiplicities(t))
        sum += static_cast<long double>(mult) * std::exp(inner(mu, xi));
    return sum;
}

Complex weyl_character_quotient(const Weight2& t, const std::array<Complex, 2>& xi)
{
    Complex num = 0, den = 0;
    Weight2 tr{t[0] + 1, t[1] + 1}, rho{1, 1};
    for (const auto& w : weyl_group()) {
        num += static_cast<long double>(w.det) * std::exp(inner(w.apply(tr), xi));
        den += static_cast<long double>(w.det) * std::exp(inner(w.apply(rho), xi));
    }
    return num / den;
}

namespace {

int height(const Weight2& mu) { return mu[0] + mu[1]; }

}  // namespace

std::map<Weight2, long long> tensor_product(const Weight2& t, const Weight2& tp)
{
    auto ma = weight_multiplicities(t), mb = weight_multiplicities(tp);
    std::map<Weight2, long long> prod;
    for (const auto& [x, cx] : ma)
        for (const auto& [y, cy] : mb)
            prod[{x[0] + y[0], x[1] + y[1]}] += cx * cy;

    std::map<Weight2, long long> out;
    for (;;) {
        const Weight2* top = nullptr;
        long long c = 0;
        for (const auto& [mu, m] : prod) {
            if (m == 0) continue;
            if (!top || height(mu) > height(*top)) {
                top = &mu;
                c = m;
            }
        }
        if (!top) break;
        Weight2 hw = *top;
        if (hw[0] < 0 || hw[1] < 0 || c < 0)
            throw std::logic_error("tensor_product: character peel-off failed");
        out[hw] += c;
        for (const auto& [mu, m] : weight_multiplicities(hw))
            prod[mu] -= c * m;
    }
    return out;
}

long long tensor_coeff(const Weight2& t, const Weight2& tp, const Weight2& tpp)
{
    auto prod = tensor_product(t, tp);
    auto it = prod.find(tpp);
    return it == prod.end() ? 0 : it->second;
}

std::vector<Weight3> integrable_weights(int level)
{
    std::vector<Weight3> out;
    for (int a = level; a >= 0; --a)
        for (int b = level - a; b >= 0; --b)
            out.push_back({a, b, level - a - b});
    return out;
}

bool integrable(int level, const Weight3& t)
{
    return t[0] >= 0 && t[1] >= 0 && t[2] >= 0 && t[0] + t[1] + t[2] == level;
}

Folded fold_to_alcove(int level, const Weight2& mu)
{
    // work with x = mu + rho; the open alcove is x1>0, x2>0, x1+x2<level+3
    const int h = level + 3;
    int x1 = mu[0] + 1, x2 = mu[1] + 1, sign = 1;
    for (;;) {
        int x0 = h - x1 - x2;
        if (x1 == 0 || x2 == 0 || x0 == 0) return {{0, 0}, 0};
        if (x1 < 0) {
            x2 += x1;
            x1 = -x1;
        } else if (x2 < 0) {
            x1 += x2;
            x2 = -x2;
        } else if (x0 < 0) {
            x1 += x0;
            x2 += x0;
        } else {
            return {{x1 - 1, x2 - 1}, sign};
        }
        sign = -sign;
    }
}

std::map<Weight3, long long> sl3_fusion_product(int level, const Weight3& r, const Weight3& rp)
{
    if (!integrable(level, r) || !integrable(level, rp))
        throw DomainError("fusion inputs are not integrable at level " + std::to_string(level));
    std::map<Weight3, long long> out;
    for (const auto& [mu, c] : tensor_product(finite(r), finite(rp))) {
        auto f = fold_to_alcove(level, mu);
        if (f.sign != 0) out[affine(level, f.weight)] += f.sign * c;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second < 0) throw std::logic_error("negative Kac-Walton coefficient");
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

long long kac_walton(int level, const Weight3& r, const Weight3& rp, const Weight3& rpp)
{
    if (!integrable(level, rpp))
        throw DomainError("fusion output is not integrable at level " + std::to_string(level));
    auto prod = sl3_fusion_product(level, r, rp);
    auto it = prod.find(rpp);
    return it == prod.end() ? 0 : it->second;
}

bool sl3_sigma_symmetry_check(int level, const Weight3& r, const Weight3& rp, const Weight3& rpp)
{
    long long n = kac_walton(level, r, rp, rpp);
    return kac_walton(level, sigma3(r), rp, sigma3(rpp)) == n &&
           kac_walton(level, r, sigma3(rp), sigma3(rpp)) == n;
}

}  // namespace bpf
