#pragma once

#include <array>
#include <complex>
#include <map>
#include <vector>

namespace bpf {

using Weight2 = std::array<int, 2>;   // finite Dynkin labels [t1,t2]
using Weight3 = std::array<int, 3>;   // affine labels [t0,t1,t2]
using Complex = std::complex<long double>;
using WeightMultiplicityMap = std::map<Weight2, long long>;

// <a,b> with the quadratic form matrix (1/3)[[2,1],[1,2]] on Dynkin labels
template <typename T>
T inner2(const std::array<T, 2>& a, const std::array<T, 2>& b)
{
    return (T(2) * a[0] * b[0] + a[0] * b[1] + a[1] * b[0] + T(2) * a[1] * b[1]) / T(3);
}
inline long double inner(const Weight2& a, const Weight2& b)
{
    return inner2<long double>({(long double)a[0], (long double)a[1]}, {(long double)b[0], (long double)b[1]});
}
inline Complex inner(const Weight2& a, const std::array<Complex, 2>& b)
{
    return inner2<Complex>({Complex(a[0]), Complex(a[1])}, b);
}

// the six finite Weyl group elements as (matrix on Dynkin labels, det)
struct WeylElement {
    std::array<std::array<int, 2>, 2> m;
    int det;
    Weight2 apply(const Weight2& t) const
    {
        return {m[0][0] * t[0] + m[0][1] * t[1], m[1][0] * t[0] + m[1][1] * t[1]};
    }
};
const std::vector<WeylElement>& weyl_group();

long long sl3_dim(const Weight2& t);
WeightMultiplicityMap weight_multiplicities(const Weight2& t);

// xi in coordinates against the fundamental weights
Complex weyl_character(const Weight2& t, const std::array<Complex, 2>& xi);
// Weyl quotient formula, undefined on its singular set
Complex weyl_character_quotient(const Weight2& t, const std::array<Complex, 2>& xi);

std::map<Weight2, long long> tensor_product(const Weight2& t, const Weight2& tp);
long long tensor_coeff(const Weight2& t, const Weight2& tp, const Weight2& tpp);

std::vector<Weight3> integrable_weights(int level);
bool integrable(int level, const Weight3& t);

// shifted affine Weyl reflection of mu into the level-`level` alcove;
// returns sign 0 when mu+rho is fixed by a reflection
struct Folded {
    Weight2 weight;
    int sign;
};
Folded fold_to_alcove(int level, const Weight2& mu);

long long kac_walton(int level, const Weight3& r, const Weight3& rp, const Weight3& rpp);
std::map<Weight3, long long> sl3_fusion_product(int level, const Weight3& r, const Weight3& rp);
bool sl3_sigma_symmetry_check(int level, const Weight3& r, const Weight3& rp, const Weight3& rpp);

inline Weight2 finite(const Weight3& t) { return {t[1], t[2]}; }
inline Weight3 affine(int level, const Weight2& t) { return {level - t[0] - t[1], t[0], t[1]}; }

}  // namespace bpf
