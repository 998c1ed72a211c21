#include "levrecon/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "levrecon/channels.hpp"
#include "levrecon/errors.hpp"
#include "levrecon/word.hpp"

namespace levrecon::bounds {

Bigint levenshtein_n1(int n, int e, int l) {
    if (l < 1) throw precondition_error("levenshtein_n1 requires l >= 1");
    if (n < 2 * e + 1) throw precondition_error("levenshtein_n1 requires n >= 2e+1");
    const int t = e + l;
    Bigint total = 0;
    for (int i = 0; i <= l - 1; ++i) {
        Bigint inner = 0;
        for (int k = e + 1 + i - l; k <= t - i; ++k) inner += binomial(2 * e + 1, k);
        total += binomial(n - 2 * e - 1, i) * inner;
    }
    return total + 1;
}

// ---------------------------------------------------------------------------
// N_h channel counts

namespace {

// ceil(x/2) for possibly negative x
int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : x / 2; }

/// Walks the index tuples of one weight layer. lo/hi bounds depend on the
/// variant only through the first index.
template <typename F>
void walk_tuples(int e, int l, int h, int w, bool primed, F&& visit) {
    // bounds per position
    const int lo_rest = std::max(0, ceil_half(w + 1 - l));
    const int hi_rest = e + 1;
    const int lo_first = primed ? std::max(0, ceil_half(w - l)) : lo_rest;
    const int hi_first = primed ? e : hi_rest;

    std::vector<int> tuple(static_cast<std::size_t>(h));
    auto rec = [&](auto&& self, int pos, int sum) -> void {
        if (pos == h) {
            visit(tuple, sum);
            return;
        }
        const int lo = pos == 0 ? lo_first : lo_rest;
        const int hi = pos == 0 ? hi_first : hi_rest;
        for (int v = lo; v <= hi && sum + v <= w; ++v) {
            tuple[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, sum + v);
        }
    };
    if (lo_first <= hi_first && lo_rest <= hi_rest) rec(rec, 0, 0);
}

} // namespace

std::vector<IndexTuple> enumerate_ww(int e, int l, int h, int w, bool primed) {
    if (h < 1) throw precondition_error("enumerate_ww requires h >= 1");
    std::vector<IndexTuple> out;
    walk_tuples(e, l, h, w, primed, [&](const std::vector<int>& tuple, int) {
        out.push_back(IndexTuple{tuple, w});
    });
    return out;
}

Bigint nh_weight_sum(int n, int e, int l, int h, int w, NhVariant variant) {
    const bool primed = variant == NhVariant::Primed;
    const long ambient = primed ? n + 1 - static_cast<long>(h) * (e + 1) : n - static_cast<long>(h) * (e + 1);
    Bigint sum = 0;
    walk_tuples(e, l, h, w, primed, [&](const std::vector<int>& tuple, int tuple_sum) {
        Bigint term = binomial(ambient, w - tuple_sum);
        if (term == 0) return;
        for (std::size_t j = 0; j < tuple.size(); ++j) {
            const bool first = j == 0 && primed;
            term *= binomial(first ? e : e + 1, tuple[j]);
            if (term == 0) return;
        }
        sum += term;
    });
    return sum;
}

Bigint channel_count_nh(int n, int e, int l, int h, NhVariant variant) {
    if (l < 2) throw precondition_error("channel_count_nh requires l >= 2");
    if (h < 3 || h > l + 1) throw precondition_error("channel_count_nh requires 3 <= h <= l+1");
    if (e < 0 || n < 1) throw precondition_error("channel_count_nh requires n >= 1, e >= 0");
    Bigint total = ball_volume(n, l - 1);
    // weight layers are empty beyond w = 2e + l + 1
    for (int w = l; w <= 2 * e + l + 1; ++w) total += nh_weight_sum(n, e, l, h, w, variant);
    return total;
}

Bigint channel_count_for_list_l(int n, int e, int l) {
    if (l < 3) throw precondition_error("channel_count_for_list_l requires l >= 3");
    return ball_volume(n, l - 1) + pow_bigint(e + 1, static_cast<unsigned long>(l) + 1) + 1;
}

Bigint asymptotic_nh_leading(int n, int e, int l, int h) {
    if (h < 3 || h > l) throw precondition_error("asymptotic_nh_leading requires 3 <= h <= l");
    return ball_volume(n, l - 1) +
           binomial(n - static_cast<long>(h) * (e + 1), l + 1 - h) * pow_bigint(e + 1, static_cast<unsigned long>(h));
}

// ---------------------------------------------------------------------------
// List-size-2 channel counts, three routes

Bigint distance_d_l2_count(int n, int t, int d) {
    if (d < 1 || t < 1) throw precondition_error("distance_d_l2_count requires d >= 1, t >= 1");
    const int half_up = (d + 1) / 2;   // ceil(d/2)
    const int half_down = d / 2;       // floor(d/2)
    const int three_half = (3 * d + 1) / 2; // ceil(3d/2)
    Bigint total = 0;
    for (int i1 = 0; i1 <= t - half_up; ++i1) {
        const Bigint f1 = binomial(n - three_half, i1);
        if (f1 == 0) continue;
        for (int i4 = std::max(0, i1 + half_down - t); i4 <= std::min(half_down, t - half_up - i1); ++i4) {
            const Bigint f4 = binomial(half_down, i4);
            if (f4 == 0) continue;
            for (int i3 = std::max(0, 2 * half_up - t + i1); i3 <= std::min(half_up, t - i1 - i4); ++i3) {
                const Bigint f3 = binomial(half_up, i3);
                if (f3 == 0) continue;
                const int lo = std::max({0, i1 - i3 - i4 + three_half - t, i1 + i3 + i4 + half_up - t});
                const int hi = std::min(half_up, t - (i1 + i4 + half_up - i3));
                for (int i2 = lo; i2 <= hi; ++i2) total += f1 * binomial(half_up, i2) * f3 * f4;
            }
        }
    }
    return total;
}

L2ThreeWays l2_bound_three_ways(int n, int e, int l) {
    if (l < 2) throw precondition_error("l2_bound_three_ways requires l >= 2");
    const int t = e + l;
    L2ThreeWays out;
    out.distance_form_even = distance_d_l2_count(n, t, 2 * e + 2);
    out.distance_form_odd = distance_d_l2_count(n, t, 2 * e + 1);

    // simplified system: i2 <= l - 1 - i1 - |i4 - i3|
    Bigint total = 0;
    for (int i1 = 0; i1 <= l - 1; ++i1) {
        const Bigint f1 = binomial(n - 3 * e - 3, i1);
        if (f1 == 0) continue;
        for (int i4 = 0; i4 <= l - 1 - i1; ++i4) {
            const Bigint f4 = binomial(e + 1, i4);
            if (f4 == 0) continue;
            for (int i3 = 0; i3 <= l - 1 - i1; ++i3) {
                const Bigint f3 = binomial(e + 1, i3);
                if (f3 == 0) continue;
                const int lo = std::max(0, i1 + i3 + i4 - (l - 1));
                const int hi = std::min(e + 1, l - 1 - i1 - std::abs(i4 - i3));
                for (int i2 = lo; i2 <= hi; ++i2) total += f1 * binomial(e + 1, i2) * f3 * f4;
            }
        }
    }
    out.simplified = total;
    return out;
}

// ---------------------------------------------------------------------------
// Length threshold and the iteration budget b

Bigint n_threshold(int e, int l, int b) {
    const Bigint inner = Bigint(b) - 3 * e - 2 * static_cast<long>(e) * e + static_cast<long>(e) * b +
                         binomial(static_cast<long>(b) - 2 * e - 1, 2);
    const Bigint mid = Bigint(b) - e + Bigint(e + 1) * inner;
    return Bigint(l - 1) * (l - 1) * mid + l - 2;
}

Bigint list_iteration_budget(int e, int a) {
    if (e < 0 || a < 0) throw precondition_error("list_iteration_budget requires e, a >= 0");
    if (e + a > 8) throw budget_error("list_iteration_budget limited to e + a <= 8");
    const unsigned long base = 2ul * static_cast<unsigned long>(e) + 2ul * static_cast<unsigned long>(a) + 2ul;
    unsigned long factorial = 1;
    for (unsigned long i = 2; i <= static_cast<unsigned long>(e + a + 1); ++i) factorial *= i;

    // ceil(base^(euler * factorial)) by interval evaluation at escalating
    // precision; the exponent is irrational so the two roundings eventually
    // agree on the ceiling.
    for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t)1 << 24; prec *= 2) {
        mpfr_t lo, hi, b_lo, b_hi;
        mpfr_inits2(prec, lo, hi, b_lo, b_hi, (mpfr_ptr) nullptr);
        mpfr_set_ui(lo, 1, MPFR_RNDD);
        mpfr_exp(lo, lo, MPFR_RNDD); // e rounded down
        mpfr_set_ui(hi, 1, MPFR_RNDU);
        mpfr_exp(hi, hi, MPFR_RNDU); // e rounded up
        mpfr_mul_ui(lo, lo, factorial, MPFR_RNDD);
        mpfr_mul_ui(hi, hi, factorial, MPFR_RNDU);
        mpfr_set_ui(b_lo, base, MPFR_RNDD);
        mpfr_set_ui(b_hi, base, MPFR_RNDU);
        mpfr_pow(b_lo, b_lo, lo, MPFR_RNDD);
        mpfr_pow(b_hi, b_hi, hi, MPFR_RNDU);
        mpfr_ceil(b_lo, b_lo);
        mpfr_ceil(b_hi, b_hi);
        Bigint lo_z, hi_z;
        mpfr_get_z(lo_z.get_mpz_t(), b_lo, MPFR_RNDN);
        mpfr_get_z(hi_z.get_mpz_t(), b_hi, MPFR_RNDN);
        mpfr_clears(lo, hi, b_lo, b_hi, (mpfr_ptr) nullptr);
        if (lo_z == hi_z) return lo_z;
    }
    throw diagnostic_error("interval evaluation of b did not converge");
}

// ---------------------------------------------------------------------------
// Johnson radii

JohnsonRadii johnson_radii(int n, int e, long M) {
    if (M < 1) throw precondition_error("johnson_radii requires M >= 1");
    if (2 * e + 1 >= n / 2.0) throw precondition_error("johnson_radii requires 2e+1 < n/2");
    const double ratio = 2.0 * (2 * e + 1) / n;
    const double disc_m = 1.0 - (static_cast<double>(M - 1) / M) * ratio;
    const double disc = 1.0 - ratio;
    if (disc_m < 0 || disc < 0) throw precondition_error("johnson radius discriminant negative");
    JohnsonRadii r;
    r.r_with_m = n / 2.0 * (1.0 - std::sqrt(disc_m));
    r.r_plain = n / 2.0 * (1.0 - std::sqrt(disc));
    return r;
}

JohnsonListBounds section5_corollary_bounds(int n, int e, int l, long M) {
    JohnsonListBounds out;
    out.radii = johnson_radii(n, e, M);
    const int t = e + l;
    out.list_bound_m = std::pow(2.0, t - out.radii.r_with_m) * static_cast<double>(M);
    out.list_bound_plain = std::pow(2.0, t - out.radii.r_plain + 1.0) * n;

    // integerized slack a = floor(r) - e keeps the ball radius within the
    // Johnson guarantee
    out.a_m = static_cast<int>(std::floor(out.radii.r_with_m)) - e;
    out.a_plain = static_cast<int>(std::floor(out.radii.r_plain)) - e - 1;
    out.applicable_m =
        out.radii.r_with_m >= 1.0 && out.radii.r_with_m - e >= 0.0 && out.radii.r_with_m - e <= l - 1.0;
    out.applicable_plain =
        out.radii.r_plain >= 2.0 && out.radii.r_plain - e >= 1.0 && out.radii.r_plain - e <= static_cast<double>(l);
    if (out.applicable_m && out.a_m >= 0 && out.a_m <= l - 1)
        out.threshold_m = ball_volume(n, l - out.a_m - 1) + 1;
    else
        out.applicable_m = false;
    if (out.applicable_plain && out.a_plain >= 0 && out.a_plain <= l - 1)
        out.threshold_plain = ball_volume(n, l - out.a_plain - 1) + 1;
    else
        out.applicable_plain = false;
    return out;
}

// ---------------------------------------------------------------------------
// Generic bound report

std::vector<BoundEntry> generic_list_bounds(const ReconstructionParams& p, std::optional<Bigint> channels) {
    const int n = p.n, e = p.e, l = p.l;
    const int t = p.t();
    std::vector<BoundEntry> entries;

    auto meets = [&](const Bigint& threshold) { return !channels || *channels >= threshold; };
    auto at_most = [&](const Bigint& cap) { return !channels || *channels <= cap; };

    {
        BoundEntry b;
        b.name = "levenshtein_N1";
        b.list_bound = 1;
        b.channel_threshold = levenshtein_n1(n, e, l);
        b.applicable = n >= 2 * e + 1 && meets(*b.channel_threshold);
        entries.push_back(std::move(b));
    }
    if (l >= 2) {
        BoundEntry b;
        b.name = "channel_count_N3";
        b.list_bound = 2;
        b.channel_threshold = channel_count_nh(n, e, l, 3, NhVariant::Unprimed) + 1;
        b.applicable = n_threshold(e, l, std::max(3 * t, 4 * e + 4)) <= n && meets(*b.channel_threshold);
        b.note = "exact above the length threshold";
        entries.push_back(std::move(b));
    }
    {
        BoundEntry b;
        b.name = "central_binomial";
        b.list_bound = binomial(2 * l, l);
        b.channel_threshold = ball_volume(n, l - 1) + 1;
        b.applicable = n >= 2 * l - 1 && meets(*b.channel_threshold);
        entries.push_back(std::move(b));
    }
    {
        BoundEntry b;
        b.name = "two_pow_l";
        b.list_bound = Bigint(1) << l;
        b.channel_threshold = ball_volume(n, l - 1) + 1;
        b.applicable = n >= l && meets(*b.channel_threshold);
        entries.push_back(std::move(b));
    }
    {
        BoundEntry b;
        b.name = "linear_list_lower";
        b.is_lower = true;
        b.list_bound = Bigint(n / (e + 1));
        b.applicable = at_most(ball_volume(n, l - 1));
        b.note = "some code reaches this list size when N <= V(n, l-1)";
        entries.push_back(std::move(b));
    }
    {
        BoundEntry b;
        b.name = "l_plus_one";
        b.list_bound = Bigint(l + 1);
        b.channel_threshold = ball_volume(n, l - 1) + 1;
        b.applicable =
            Bigint(n) >= n_threshold(e, l, std::max(3 * t, 4 * e + 4)) && meets(*b.channel_threshold);
        entries.push_back(std::move(b));
    }
    {
        BoundEntry b;
        b.name = "l_plus_one_lower";
        b.is_lower = true;
        b.list_bound = Bigint(l + 1);
        b.applicable = n >= l + l * e + e && at_most(ball_volume(n, l - 1) + 1);
        entries.push_back(std::move(b));
    }
    if (l >= 3) {
        BoundEntry b;
        b.name = "list_le_l";
        b.list_bound = Bigint(l);
        b.channel_threshold = channel_count_for_list_l(n, e, l);
        b.applicable =
            Bigint(n) >= n_threshold(e, l, std::max(3 * t, 4 * e + 4)) && meets(*b.channel_threshold);
        entries.push_back(std::move(b));
    }
    if (p.h && l >= 2 && *p.h >= 3 && *p.h <= l + 1) {
        BoundEntry b;
        b.name = "channel_count_Nh";
        b.note = "h = " + std::to_string(*p.h);
        b.list_bound = Bigint(*p.h - 1);
        b.channel_threshold = channel_count_nh(n, e, l, *p.h, NhVariant::Unprimed) + 1;
        b.applicable =
            Bigint(n) >= n_threshold(e, l, std::max(3 * t, 4 * e + 4)) && meets(*b.channel_threshold);
        entries.push_back(std::move(b));
    }
    if (p.a && p.M) {
        const int a = *p.a;
        BoundEntry b;
        b.name = "shatter_with_ball_bound";
        b.note = "a = " + std::to_string(a) + ", M = " + std::to_string(*p.M);
        if (a >= 0 && a <= l - 1) {
            b.list_bound = (Bigint(1) << (l - a)) * Bigint(*p.M);
            b.channel_threshold = ball_volume(n, l - a - 1) + 1;
            b.applicable = meets(*b.channel_threshold);
        }
        entries.push_back(std::move(b));
    }
    if (p.M && 2 * e + 1 < n / 2.0) {
        const JohnsonListBounds jb = section5_corollary_bounds(n, e, l, *p.M);
        BoundEntry b1;
        b1.name = "johnson_radius_M";
        b1.list_bound_real = jb.list_bound_m;
        if (jb.applicable_m) {
            b1.channel_threshold = jb.threshold_m;
            b1.applicable = meets(jb.threshold_m);
        }
        entries.push_back(std::move(b1));
        BoundEntry b2;
        b2.name = "johnson_radius_plain";
        b2.list_bound_real = jb.list_bound_plain;
        if (jb.applicable_plain) {
            b2.channel_threshold = jb.threshold_plain;
            b2.applicable = meets(jb.threshold_plain);
        }
        entries.push_back(std::move(b2));
    }
    if (p.a && p.M && *p.a >= 1 && *p.a <= l - 1 && e + *p.a <= 8) {
        const int a = *p.a;
        const Bigint b_budget = list_iteration_budget(e, a);
        BoundEntry b;
        b.name = "iterated_central_word";
        b.note = "a = " + std::to_string(a) + ", b has " + std::to_string(mpz_sizeinbase(b_budget.get_mpz_t(), 2)) +
                 " bits";
        Bigint ratio;
        mpz_cdiv_q_ui(ratio.get_mpz_t(), b_budget.get_mpz_t(), 2ul * e + 2ul * a + 2ul);
        Bigint bound = Bigint(t + 1) * Bigint(*p.M);
        if (ratio > bound) bound = ratio;
        b.list_bound = bound;
        b.channel_threshold = ball_volume(n, l - a - 1) + 1;
        // the length threshold n >= (l-a-1)^2 2^b + l-a-2 involves 2^b with an
        // astronomically large b; it collapses only when l - a - 1 == 0
        b.applicable = (l - a - 1 == 0) && meets(*b.channel_threshold);
        if (l - a - 1 != 0) b.note += "; below the doubly-exponential length threshold";
        entries.push_back(std::move(b));
    }
    return entries;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

struct BlockState {
    std::vector<int> sizes;             // ordered blocks partitioning [1..n]
    std::vector<std::vector<int>> bits; // per codeword: constant bit per block
};

long intersection_count(const BlockState& st, int n, int t) {
    // materialize codewords: block b occupies a contiguous coordinate range
    std::vector<Word> words;
    for (const auto& bits : st.bits) {
        Word w(n);
        int coord = 1;
        for (std::size_t b = 0; b < st.sizes.size(); ++b) {
            for (int j = 0; j < st.sizes[b]; ++j, ++coord)
                if (bits[b]) w.set(coord, true);
        }
        words.push_back(w);
    }
    return static_cast<long>(adversarial_intersection(words, t).size());
}

void search_configurations(BlockState& st, int n, int t, int min_d, int codewords_left, long& best,
                           long& configs) {
    if (codewords_left == 0) {
        ++configs;
        best = std::max(best, intersection_count(st, n, t));
        return;
    }
    const std::size_t blocks = st.sizes.size();
    const std::size_t prev = st.bits.size();
    std::vector<int> counts(blocks, 0);
    // distance of the new word to each previous word as a function of counts
    auto place = [&](auto&& self, std::size_t b, std::vector<int>& dist) -> void {
        if (b == blocks) {
            for (std::size_t i = 0; i < prev; ++i)
                if (dist[i] < min_d || dist[i] > 2 * t) return;
            // refine blocks and recurse
            BlockState next;
            for (std::size_t blk = 0; blk < blocks; ++blk) {
                const int ones = counts[blk];
                const int zeros = st.sizes[blk] - ones;
                if (ones > 0) next.sizes.push_back(ones);
                if (zeros > 0) next.sizes.push_back(zeros);
            }
            next.bits.reserve(prev + 1);
            for (std::size_t i = 0; i <= prev; ++i) next.bits.emplace_back();
            for (std::size_t blk = 0; blk < blocks; ++blk) {
                const int ones = counts[blk];
                const int zeros = st.sizes[blk] - ones;
                for (std::size_t i = 0; i < prev; ++i) {
                    if (ones > 0) next.bits[i].push_back(st.bits[i][blk]);
                    if (zeros > 0) next.bits[i].push_back(st.bits[i][blk]);
                }
                if (ones > 0) next.bits[prev].push_back(1);
                if (zeros > 0) next.bits[prev].push_back(0);
            }
            search_configurations(next, n, t, min_d, codewords_left - 1, best, configs);
            return;
        }
        for (int c = 0; c <= st.sizes[b]; ++c) {
            counts[b] = c;
            std::vector<int> next_dist = dist;
            bool feasible = true;
            for (std::size_t i = 0; i < prev; ++i) {
                next_dist[i] += st.bits[i][b] ? (st.sizes[b] - c) : c;
                if (next_dist[i] > 2 * t) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) self(self, b + 1, next_dist);
        }
        counts[b] = 0;
    };
    std::vector<int> dist(prev, 0);
    place(place, 0, dist);
}

long structured_intersection(int n, int e, int t, int h, bool first_weight_e) {
    std::vector<Word> words;
    int coord = 1;
    for (int i = 0; i < h; ++i) {
        const int weight = (i == 0 && first_weight_e) ? e : e + 1;
        Word w(n);
        for (int j = 0; j < weight; ++j) w.set(coord + j, true);
        coord += weight;
        words.push_back(w);
    }
    return static_cast<long>(adversarial_intersection(words, t).size());
}

} // namespace

OracleResult oracle_nprime(int n, int e, int l, int h) {
    if (h < 1) throw precondition_error("oracle_nprime requires h >= 1");
    if (l < 1 || e < 0) throw precondition_error("oracle_nprime requires l >= 1, e >= 0");
    const int t = e + l;
    if (t > n) throw precondition_error("oracle_nprime requires t <= n");

    OracleResult result;
    if (h == 1) {
        result.value = ball_volume(n, t);
        result.note = "single ball";
        return result;
    }

    if (n <= 10) {
        if (h > 5) throw budget_error("full oracle enumeration limited to h <= 5");
        BlockState st;
        st.sizes = {n};
        st.bits = {{0}}; // first codeword fixed to the all-zero word
        long best = 0, configs = 0;
        search_configurations(st, n, t, 2 * e + 1, h - 1, best, configs);
        result.value = best;
        result.configurations = configs;
        result.note = "exhaustive over placements up to coordinate symmetry";
        return result;
    }
    if (n <= 16) {
        const bool fits_all = static_cast<long>(h) * (e + 1) <= n;
        const bool fits_one_light = e + static_cast<long>(h - 1) * (e + 1) <= n;
        if (!fits_all && !fits_one_light)
            throw precondition_error("structured configurations do not fit in length n");
        long best = 0;
        long configs = 0;
        if (fits_all) {
            best = std::max(best, structured_intersection(n, e, t, h, false));
            ++configs;
        }
        if (fits_one_light && e >= 0) {
            best = std::max(best, structured_intersection(n, e, t, h, true));
            ++configs;
        }
        result.value = best;
        result.structured_only = true;
        result.configurations = configs;
        result.note = "restricted to weights in {e, e+1} with disjoint supports";
        return result;
    }
    throw budget_error("oracle_nprime budget is n <= 16");
}

} // namespace levrecon::bounds
