#include "levrecon/majority.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "levrecon/errors.hpp"

namespace levrecon {

int TernaryWord::tie_count() const {
    int c = 0;
    for (Trit s : symbols_)
        if (s == Trit::Tie) ++c;
    return c;
}

Word TernaryWord::resolve(bool tie_value) const {
    Word w(length());
    for (int i = 1; i <= length(); ++i) {
        const Trit s = get(i);
        if (s == Trit::One || (s == Trit::Tie && tie_value)) w.set(i, true);
    }
    return w;
}

std::string TernaryWord::to_string() const {
    std::string s(symbols_.size(), '0');
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        s[i] = symbols_[i] == Trit::Zero ? '0' : (symbols_[i] == Trit::One ? '1' : '?');
    return s;
}

TernaryWord TernaryWord::from_string(const std::string& s) {
    TernaryWord z(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            z.symbols_[i] = Trit::One;
        else if (s[i] == '?')
            z.symbols_[i] = Trit::Tie;
        else if (s[i] != '0')
            throw precondition_error("ternary word string must contain only '0'/'1'/'?'");
    }
    return z;
}

int pessimistic_distance(const Word& x, const TernaryWord& z) {
    if (x.length() != z.length()) throw precondition_error("length mismatch");
    int d = 0;
    for (int i = 1; i <= x.length(); ++i) {
        const Trit s = z.get(i);
        if (s == Trit::Tie || (s == Trit::One) != x.get(i)) ++d;
    }
    return d;
}

int optimistic_distance(const Word& x, const TernaryWord& z) {
    if (x.length() != z.length()) throw precondition_error("length mismatch");
    int d = 0;
    for (int i = 1; i <= x.length(); ++i) {
        const Trit s = z.get(i);
        if (s != Trit::Tie && (s == Trit::One) != x.get(i)) ++d;
    }
    return d;
}

MajorityResult majority_vote(const std::vector<Word>& outputs) {
    if (outputs.empty()) throw precondition_error("majority vote needs at least one output");
    const int n = outputs.front().length();
    const int N = static_cast<int>(outputs.size());
    std::vector<int> ones(static_cast<std::size_t>(n), 0);
    for (const Word& y : outputs) {
        if (y.length() != n) throw precondition_error("output length mismatch");
        for (int b = 0; b < y.block_count(); ++b) {
            std::uint64_t blk = y.block(b);
            while (blk) {
                ones[static_cast<std::size_t>(b * 64 + std::countr_zero(blk))] += 1;
                blk &= blk - 1;
            }
        }
    }
    MajorityResult r;
    r.N = N;
    r.z = TernaryWord(n);
    r.zero_counts.resize(static_cast<std::size_t>(n));
    r.minority_counts.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int m1 = ones[static_cast<std::size_t>(i)];
        const int m0 = N - m1;
        r.zero_counts[static_cast<std::size_t>(i)] = m0;
        r.minority_counts[static_cast<std::size_t>(i)] = std::min(m0, m1);
        r.z.set(i + 1, m0 > m1 ? Trit::Zero : (m0 < m1 ? Trit::One : Trit::Tie));
    }
    return r;
}

MajorityResult majority_vote(const OutputBatch& y) { return majority_vote(y.outputs); }

std::optional<int> verify_radius(const MajorityResult& result, int t) {
    const int n = static_cast<int>(result.minority_counts.size());
    const int N = result.N;
    if (t < 0) throw precondition_error("t must be nonnegative");
    std::vector<int> sorted = result.minority_counts;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::vector<long> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + sorted[static_cast<std::size_t>(i)];
    const long total = prefix[static_cast<std::size_t>(n)];
    for (int k = 1; k <= n; ++k) {
        const int head = std::min(k + 1, n); // indices beyond n contribute nothing
        const long lhs = static_cast<long>(head) * N - 2 * prefix[static_cast<std::size_t>(head)] + total;
        if (lhs > static_cast<long>(t) * N) return k;
    }
    return std::nullopt;
}

VerifiedDecode verified_decode(const Code& c, const OutputBatch& y, int t) {
    if (y.n != c.length()) throw precondition_error("batch length does not match code length");
    const MajorityResult vote = majority_vote(y);
    VerifiedDecode out;
    out.z = vote.z;
    const std::optional<int> k = verify_radius(vote, t);
    if (!k) {
        out.outcome = VerifiedDecode::Outcome::Unverified;
        return out;
    }
    out.k = k;
    const Word z0 = vote.z.resolve(false); // ties to 0; the certificate is resolution-independent
    const int e = c.capability();
    if (*k <= e) {
        const auto unique = decode_unique(c, z0, e);
        if (!unique)
            throw diagnostic_error("verified radius k <= e but no codeword within e of z; "
                                   "channel contract violated");
        out.outcome = VerifiedDecode::Outcome::UniqueVerified;
        out.unique = unique;
    } else {
        out.outcome = VerifiedDecode::Outcome::ListVerified;
        out.list = list_in_ball(c, z0, *k);
    }
    return out;
}

ErrorDistribution error_distribution(int n, int t) {
    if (t < 0 || t > n) throw precondition_error("error_distribution requires 0 <= t <= n");
    const Bigint volume = ball_volume(n, t);
    ErrorDistribution d;
    d.n = n;
    d.t = t;
    Rational mu(0), second(0);
    for (int r = 0; r <= t; ++r) {
        const Rational pr(binomial(n, r), volume);
        d.p.push_back(to_double(pr));
        mu += Rational(r) * pr;
        second += Rational(static_cast<long>(r) * r) * pr;
    }
    d.mu = to_double(mu);
    d.sigma2 = to_double(second - mu * mu);
    return d;
}

// ---------------------------------------------------------------------------
// Collision probability bounds

namespace {

Rational clamp01(Rational v) {
    if (v < 0) return Rational(0);
    if (v > 1) return Rational(1);
    return v;
}

struct CtKey {
    int t, n, q, s;
    bool operator<(const CtKey& o) const {
        return std::tie(t, n, q, s) < std::tie(o.t, o.n, o.q, o.s);
    }
};

Rational pr_ct_recursive(int n, int q, int s, int t, std::map<CtKey, Rational>& memo) {
    if (t == 0 || q < s) return Rational(0);
    const CtKey key{t, n, q, s};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // (t^s / n^(s-1)) sum_{i=s}^{q} C(i-1, s-1) ((n-t)/n)^(i-s) (1 - P(t-1, n-1, i-1, s))
    const Rational shrink(n - t, n);
    Rational power(1);
    Rational sum(0);
    for (int i = s; i <= q; ++i) {
        const Rational inner = pr_ct_recursive(n - 1, i - 1, s, t - 1, memo);
        sum += Rational(binomial(i - 1, s - 1)) * power * (Rational(1) - inner);
        power *= shrink;
    }
    Rational factor(pow_bigint(t, static_cast<unsigned long>(s)),
                    pow_bigint(n, static_cast<unsigned long>(s - 1)));
    factor.canonicalize();
    const Rational result = clamp01(factor * sum);
    memo.emplace(key, result);
    return result;
}

} // namespace

double pr_ct_upper(int n, int q, int s, int t, CtMethod method) {
    if (!(2 <= s)) throw precondition_error("pr_ct_upper requires s >= 2");
    if (t < 0 || t > n) throw precondition_error("pr_ct_upper requires 0 <= t <= n");
    if (q < s) return 0.0;
    if (method == CtMethod::Simple) {
        Rational v(pow_bigint(t, static_cast<unsigned long>(s)) * binomial(q, s),
                   pow_bigint(n, static_cast<unsigned long>(s - 1)));
        v.canonicalize();
        return to_double(clamp01(v));
    }
    std::map<CtKey, Rational> memo;
    return to_double(pr_ct_recursive(n, q, s, t, memo));
}

double majority_success_lb(int n, int t, int N, CtMethod method) {
    const int s = (N + 1) / 2;
    const double p = pr_ct_upper(n, N, s, t, method);
    return std::min(1.0, std::max(0.0, 1.0 - p));
}

double clt_confidence(int h_conf) {
    if (h_conf < 1) throw precondition_error("confidence multiplier must be positive");
    return std::erf(h_conf / std::sqrt(2.0));
}

long alpha_min(int n, int t, int k, int N, int h_conf) {
    if (k < 1 || N < 1) throw precondition_error("alpha_min requires k >= 1 and N >= 1");
    const ErrorDistribution dist = error_distribution(n, t);
    const int parity = N % 2;
    const double numerator = (t - dist.mu) * N + h_conf * std::sqrt(dist.sigma2) * std::sqrt(static_cast<double>(N)) +
                             1.0 + parity * (k + 1);
    return static_cast<long>(std::ceil(numerator / (2.0 * (k + 1))));
}

VerifiableLowerBound verifiable_success_lb(int n, int t, int k, int N, int h_conf) {
    VerifiableLowerBound out;
    out.alpha = alpha_min(n, t, k, N, h_conf);
    const int half = (N + 1) / 2; // ceil(N/2)
    if (out.alpha < 1) throw precondition_error("alpha must be positive");
    if (out.alpha >= half) throw precondition_error("alpha must be smaller than ceil(N/2)");

    // per-coordinate part: Pr[no coordinate collects ceil(N/2) - alpha + 1 errors]
    const int s = half - static_cast<int>(out.alpha) + 1;
    out.pr_ct_part = std::max(0.0, 1.0 - pr_ct_upper(n, N, s, t, CtMethod::Simple));
    // total-error part: CLT confidence mass (approximate, by construction of alpha)
    out.pr_er_part = clt_confidence(h_conf);
    out.lower_bound = std::max(0.0, out.pr_ct_part + out.pr_er_part - 1.0);

    const ErrorDistribution dist = error_distribution(n, t);
    const double slack = (k - (t - dist.mu)) / (k + 1);
    out.asymptotic_regime =
        (t - dist.mu < k) && slack > 0 && n > 2.0 * t * std::exp(1.0) / slack;
    return out;
}

double exact_error_sum_tail(int n, int t, int N, long r) {
    if (t < 0 || t > n || N < 1) throw precondition_error("exact_error_sum_tail parameter violation");
    if (static_cast<long>(N) * t * N > 10'000'000L) throw budget_error("convolution budget exceeded");
    const Bigint volume = ball_volume(n, t);
    std::vector<Rational> weight(static_cast<std::size_t>(t) + 1);
    for (int i = 0; i <= t; ++i) weight[static_cast<std::size_t>(i)] = Rational(binomial(n, i), volume);
    std::vector<Rational> dist{Rational(1)};
    for (int channel = 0; channel < N; ++channel) {
        std::vector<Rational> next(dist.size() + static_cast<std::size_t>(t), Rational(0));
        for (std::size_t v = 0; v < dist.size(); ++v) {
            if (dist[v] == 0) continue;
            for (int add = 0; add <= t; ++add) next[v + static_cast<std::size_t>(add)] += dist[v] * weight[static_cast<std::size_t>(add)];
        }
        dist = std::move(next);
    }
    Rational tail(0);
    const std::size_t start = r <= 0 ? 0 : static_cast<std::size_t>(r);
    for (std::size_t v = start; v < dist.size(); ++v) tail += dist[v];
    return to_double(clamp01(tail));
}

} // namespace levrecon
