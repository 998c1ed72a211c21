#ifndef LEVRECON_MAJORITY_HPP
#define LEVRECON_MAJORITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "levrecon/channels.hpp"
#include "levrecon/codes.hpp"
#include "levrecon/math.hpp"

namespace levrecon {

enum class Trit : std::uint8_t { Zero = 0, One = 1, Tie = 2 };

/// Per-coordinate vote outcome over {0, 1, ?}. '?' appears exactly where
/// the zero and one counts tie (possible only for even N).
class TernaryWord {
public:
    TernaryWord() = default;
    explicit TernaryWord(int n) : symbols_(static_cast<std::size_t>(n), Trit::Zero) {}

    int length() const { return static_cast<int>(symbols_.size()); }
    Trit get(int i) const { return symbols_[static_cast<std::size_t>(i - 1)]; }
    void set(int i, Trit v) { symbols_[static_cast<std::size_t>(i - 1)] = v; }

    int tie_count() const;
    /// Binary word with every '?' replaced by the given symbol.
    Word resolve(bool tie_value) const;
    std::string to_string() const; // "01?0..."
    static TernaryWord from_string(const std::string& s);

    bool operator==(const TernaryWord&) const = default;

private:
    std::vector<Trit> symbols_;
};

/// Mismatch count against a binary word counting every '?' as a mismatch;
/// reporting-only (certificates never use it).
int pessimistic_distance(const Word& x, const TernaryWord& z);
/// Mismatch count over determined coordinates only.
int optimistic_distance(const Word& x, const TernaryWord& z);

struct MajorityResult {
    TernaryWord z;
    std::vector<int> zero_counts;     // m_{i,0}
    std::vector<int> minority_counts; // m_i = min(m_{i,0}, m_{i,1})
    int N = 0;
};

MajorityResult majority_vote(const std::vector<Word>& outputs);
MajorityResult majority_vote(const OutputBatch& y);

/// Smallest positive k <= n such that, with the minority counts sorted
/// descending as m', sum_{i<=k+1} (N - m'_i) + sum_{i>k+1} m'_i > tN.
/// Any such k certifies that the transmitted word is within k of z.
std::optional<int> verify_radius(const MajorityResult& result, int t);

struct VerifiedDecode {
    enum class Outcome { UniqueVerified, ListVerified, Unverified };
    Outcome outcome = Outcome::Unverified;
    TernaryWord z;
    std::optional<int> k;
    std::optional<Word> unique;
    std::vector<Word> list;
};

/// Resolve ties to 0, then: k <= e gives the unique codeword within e of z;
/// e < k gives the codeword list within k of z; no k leaves z unverified.
VerifiedDecode verified_decode(const Code& c, const OutputBatch& y, int t);

/// Error-count distribution of one channel drawing uniformly from B_t(x):
/// p_r = C(n,r)/V(n,t) with exact-rational mean and variance.
struct ErrorDistribution {
    int n = 0;
    int t = 0;
    std::vector<double> p;
    double mu = 0.0;
    double sigma2 = 0.0;
};
ErrorDistribution error_distribution(int n, int t);

enum class CtMethod { Recursive, Simple };

/// Upper bound on the probability that q throws of t balls (distinct
/// buckets within a throw) leave some of the n buckets holding at least s
/// balls. Simple: (t^s / n^(s-1)) C(q,s). Recursive subtracts the
/// lower-order collision mass level by level and memoizes on (t,n,q,s).
/// Exact rational arithmetic, clamped to [0,1], converted at return.
double pr_ct_upper(int n, int q, int s, int t, CtMethod method);

/// Lower bound on Pr[majority vote returns the transmitted word]:
/// 1 - pr_ct_upper(n, N, ceil(N/2), t, method).
double majority_success_lb(int n, int t, int N, CtMethod method);

/// Normal confidence mass Phi(h) - Phi(-h).
double clt_confidence(int h_conf);

/// Smallest alpha making the total-error tail condition line up with the
/// h-sigma confidence interval:
/// ceil(((t-mu)N + h sigma sqrt(N) + 1 + parity(N)(k+1)) / (2(k+1))).
long alpha_min(int n, int t, int k, int N, int h_conf);

struct VerifiableLowerBound {
    double lower_bound = 0.0; // max(0, pr_ct_part + pr_er_part - 1)
    long alpha = 0;
    double pr_ct_part = 0.0; // >= Pr[every coordinate stays below ceil(N/2) - alpha]
    double pr_er_part = 0.0; // CLT confidence mass standing in for Pr[Er]
    bool asymptotic_regime = false; // t - mu < k and n > 2 t euler / A
};

/// Lower bound on the probability that some k' <= k satisfies the
/// verifiability inequality. The error-sum factor uses the central limit
/// approximation (labelled as such); the per-coordinate factor is the
/// closed-form collision bound.
VerifiableLowerBound verifiable_success_lb(int n, int t, int k, int N, int h_conf);

/// Exact Pr[S_N >= r] for the sum of N i.i.d. per-channel error counts, by
/// convolution of the error distribution. Micro-scale comparison partner
/// for the CLT figure; budget N * t * N <= 10^7.
double exact_error_sum_tail(int n, int t, int N, long r);

} // namespace levrecon

#endif
