#ifndef LEVRECON_BOUNDS_HPP
#define LEVRECON_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "levrecon/math.hpp"

namespace levrecon::bounds {

/// Parameter tuple shared by the bound formulas. t is always e + l and is
/// never stored separately.
struct ReconstructionParams {
    int n = 0;
    int e = 0;
    int l = 1;
    std::optional<int> h;
    std::optional<int> a;
    std::optional<int> R;
    std::optional<long> M;

    int t() const { return e + l; }
};

/// Channel count that forces a unique reconstruction (list size 1):
///   sum_{i=0}^{l-1} C(n-2e-1, i) * sum_{k=e+1+i-l}^{t-i} C(2e+1, k)  + 1.
Bigint levenshtein_n1(int n, int e, int l);

enum class NhVariant { Unprimed, Primed };

/// Index tuples (i_1..i_h) of the weight-w layer of the channel-count sum.
/// Unprimed: e+1 >= i_j >= (w+1-l)/2 for every j. Primed: the first index
/// obeys e >= i_1 >= (w-l)/2 instead. Both require sum i_j <= w.
struct IndexTuple {
    std::vector<int> i;
    int w = 0;
};
std::vector<IndexTuple> enumerate_ww(int e, int l, int h, int w, bool primed);

/// The weight-w layer of the N_h channel-count sum:
///   unprimed: sum over W_w of C(n-h(e+1), w - sum i_j) * prod C(e+1, i_j)
///   primed:   sum over W'_w of C(n+1-h(e+1), w - sum i_j) * C(e, i_1) * prod_{j>=2} C(e+1, i_j)
Bigint nh_weight_sum(int n, int e, int l, int h, int w, NhVariant variant);

/// N_h = V(n, l-1) + sum_{w >= l} nh_weight_sum(...). With N > N_h channels
/// the list size drops below h for every e-error-correcting code. Both
/// variants evaluate the same number. Requires l >= 2 and 3 <= h <= l+1.
Bigint channel_count_nh(int n, int e, int l, int h, NhVariant variant);

/// Channel count forcing list size <= l: V(n, l-1) + (e+1)^(l+1) + 1.
/// Equals channel_count_nh(n, e, l, l+1, *) + 1. Requires l >= 3.
Bigint channel_count_for_list_l(int n, int e, int l);

/// Leading term of N_h for fixed e, l and growing n:
///   V(n, l-1) + C(n - h(e+1), l+1-h) * (e+1)^h.
/// The remainder is O(n^(l-h)).
Bigint asymptotic_nh_leading(int n, int e, int l, int h);

/// The list-size-2 channel count evaluated by three routes: the
/// minimum-distance-d quadruple sum at d = 2e+2, the simplified constraint
/// system for e-error-correcting codes, and the d = 2e+1 variant with
/// half-integer index bounds. All three agree with channel_count_nh(.., 3, ..).
struct L2ThreeWays {
    Bigint distance_form_even; // quadruple sum with d = 2e+2
    Bigint simplified;         // |i4 - i3| constraint system
    Bigint distance_form_odd;  // d = 2e+1 with half-integer median bound
};
L2ThreeWays l2_bound_three_ways(int n, int e, int l);

/// The quadruple sum over (i1..i4) for a code of minimum distance d
/// (supported regimes: d = 2e+1 and d = 2e+2 where e = floor((d-1)/2)).
Bigint distance_d_l2_count(int n, int t, int d);

/// Length threshold n(e,l,b) above which the exact channel-count theorems
/// hold: (l-1)^2 (b - e + (e+1)(b - 3e - 2e^2 + eb + C(b-2e-1, 2))) + l - 2.
Bigint n_threshold(int e, int l, int b);

/// b = ceil((2e+2a+2)^(euler * (e+a+1)!)) computed with interval arithmetic
/// at escalating precision until the ceiling is pinned.
Bigint list_iteration_budget(int e, int a);

/// Johnson-type radii:
///   r(n,e,M) = n/2 (1 - sqrt(1 - ((M-1)/M) * 2(2e+1)/n))
///   r(n,e)   = n/2 (1 - sqrt(1 - 2(2e+1)/n))
/// Requires 2e+1 < n/2.
struct JohnsonRadii {
    double r_with_m;
    double r_plain;
};
JohnsonRadii johnson_radii(int n, int e, long M);

/// List bounds derived from the Johnson radii: 2^(t - r(n,e,M)) M and
/// 2^(t - r(n,e) + 1) n, with integerized channel thresholds via
/// a = floor(r) - e (resp. floor(r) - e - 1).
struct JohnsonListBounds {
    JohnsonRadii radii;
    double list_bound_m;     // 2^(t - r(n,e,M)) * M
    double list_bound_plain; // 2^(t - r(n,e) + 1) * n
    int a_m = 0;
    int a_plain = 0;
    Bigint threshold_m;
    Bigint threshold_plain;
    bool applicable_m = false;
    bool applicable_plain = false;
};
JohnsonListBounds section5_corollary_bounds(int n, int e, int l, long M);

/// One row of the generic bound report. Lower bounds describe codes that
/// exist (witnesses), upper bounds hold for every admissible code.
struct BoundEntry {
    std::string name;
    bool is_lower = false;
    std::optional<Bigint> list_bound;
    std::optional<double> list_bound_real;
    std::optional<Bigint> channel_threshold; // N >= threshold activates the bound
    bool applicable = false;                 // parameter ranges satisfied (incl. N when given)
    std::string note;
};

/// Every closed-form list bound evaluable from the parameters, each with an
/// applicability flag; inapplicable bounds are flagged, never raised.
std::vector<BoundEntry> generic_list_bounds(const ReconstructionParams& p,
                                            std::optional<Bigint> channels = std::nullopt);

/// Brute-force ground truth N'(n,l,e,h): the largest output set that keeps
/// h codewords feasible, maximized over admissible codeword configurations
/// (pairwise distance >= 2e+1).
///
/// n <= 10: exhaustive over placements up to coordinate symmetry
/// (configurations enumerated block-wise). n <= 16: restricted to the
/// extremal family with weights in {e, e+1} and disjoint supports, recorded
/// in the result.
struct OracleResult {
    Bigint value;
    bool structured_only = false;
    long configurations = 0;
    std::string note;
};
OracleResult oracle_nprime(int n, int e, int l, int h);

} // namespace levrecon::bounds

#endif
