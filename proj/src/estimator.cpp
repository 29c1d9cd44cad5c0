#include "egk/estimator.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace egk {
namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();
constexpr long double kLn2 = 0.69314718055994530941723212145817656808L;
// screening margin for log-domain feasibility tests; anything closer than
// this to the boundary is re-decided with exact integers
constexpr long double kMargin = 1e-6L;

long long ceil_div(long long a, long long b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

long long floor_div(long long a, long long b) {
    return a >= 0 ? a / b : -(((-a) + b - 1) / b);
}

long double lg(long double x) { return std::log2(x); }

long double lg_factorial(long long x) {
    return std::lgamma(static_cast<long double>(x) + 1.0L) / kLn2;
}

// ---- exact natural-number arithmetic for constraint replay ----

struct Big {
    std::vector<uint64_t> w;  // little endian, trimmed
    Big() = default;
    explicit Big(uint64_t v) {
        if (v != 0) w.push_back(v);
    }
    bool zero() const { return w.empty(); }
    void trim() {
        while (!w.empty() && w.back() == 0) w.pop_back();
    }
};

int big_cmp(const Big& a, const Big& b) {
    if (a.w.size() != b.w.size()) return a.w.size() < b.w.size() ? -1 : 1;
    for (size_t i = a.w.size(); i-- > 0;)
        if (a.w[i] != b.w[i]) return a.w[i] < b.w[i] ? -1 : 1;
    return 0;
}

Big big_add(Big a, const Big& b) {
    if (a.w.size() < b.w.size()) a.w.resize(b.w.size(), 0);
    unsigned __int128 carry = 0;
    for (size_t i = 0; i < a.w.size(); ++i) {
        unsigned __int128 s = carry + a.w[i] + (i < b.w.size() ? b.w[i] : 0);
        a.w[i] = static_cast<uint64_t>(s);
        carry = s >> 64;
    }
    if (carry != 0) a.w.push_back(static_cast<uint64_t>(carry));
    return a;
}

Big big_sub(Big a, const Big& b) {  // requires a >= b
    unsigned __int128 borrow = 0;
    for (size_t i = 0; i < a.w.size(); ++i) {
        unsigned __int128 take = borrow + (i < b.w.size() ? b.w[i] : 0);
        if (a.w[i] >= take) {
            a.w[i] -= static_cast<uint64_t>(take);
            borrow = 0;
        } else {
            a.w[i] = static_cast<uint64_t>((static_cast<unsigned __int128>(1) << 64) + a.w[i] - take);
            borrow = 1;
        }
    }
    assert(borrow == 0);
    a.trim();
    return a;
}

Big big_mul_u64(Big a, uint64_t v) {
    if (v == 0) return Big{};
    unsigned __int128 carry = 0;
    for (auto& word : a.w) {
        unsigned __int128 p = static_cast<unsigned __int128>(word) * v + carry;
        word = static_cast<uint64_t>(p);
        carry = p >> 64;
    }
    if (carry != 0) a.w.push_back(static_cast<uint64_t>(carry));
    return a;
}

Big big_div_u64(Big a, uint64_t v) {  // floor
    unsigned __int128 rem = 0;
    for (size_t i = a.w.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | a.w[i];
        a.w[i] = static_cast<uint64_t>(cur / v);
        rem = cur % v;
    }
    a.trim();
    return a;
}

Big big_mul(const Big& a, const Big& b) {
    if (a.zero() || b.zero()) return Big{};
    Big r;
    r.w.assign(a.w.size() + b.w.size(), 0);
    for (size_t i = 0; i < a.w.size(); ++i) {
        unsigned __int128 carry = 0;
        for (size_t j = 0; j < b.w.size(); ++j) {
            unsigned __int128 cur =
                static_cast<unsigned __int128>(a.w[i]) * b.w[j] + r.w[i + j] + carry;
            r.w[i + j] = static_cast<uint64_t>(cur);
            carry = cur >> 64;
        }
        r.w[i + b.w.size()] = static_cast<uint64_t>(carry);
    }
    r.trim();
    return r;
}

long double big_lg(const Big& a) {
    if (a.zero()) return -kInf;
    size_t i = a.w.size() - 1;
    long double top = static_cast<long double>(a.w[i]);
    if (i == 0) return lg(top);
    top = top * 18446744073709551616.0L + static_cast<long double>(a.w[i - 1]);
    return lg(top) + 64.0L * static_cast<long double>(i - 1);
}

Big big_binom(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return Big{};
    if (b > a - b) b = a - b;
    Big r{1};
    for (long long i = 1; i <= b; ++i) {
        r = big_mul_u64(std::move(r), static_cast<uint64_t>(a - i + 1));
        r = big_div_u64(std::move(r), static_cast<uint64_t>(i));
    }
    return r;
}

// a >= b + 1 on naturals, i.e. a >= b - 1 with the -1 folded to the left
bool big_ge_minus_one(const Big& lhs, const Big& rhs) {
    return big_cmp(big_add(lhs, Big{1}), rhs) >= 0;
}

// ---- report plumbing ----

using Params = std::vector<std::pair<std::string, long long>>;

AttackReport na_report(const char* name, std::string why) {
    AttackReport r;
    r.attack = name;
    r.applicable = false;
    r.note = std::move(why);
    return r;
}

AttackReport ok_report(const char* name, long double bits, Params params,
                       std::string note = {}) {
    AttackReport r;
    r.attack = name;
    r.applicable = true;
    if (bits < 0.0L || std::isnan(bits)) {
        note = note.empty() ? std::string("negative exponent clipped to 0 bits")
                            : note + "; negative exponent clipped to 0 bits";
        bits = 0.0L;
    }
    r.bits = bits;
    r.params = std::move(params);
    r.note = std::move(note);
    return r;
}

long double lse_add(long double acc, long double x) {
    if (x == -kInf) return acc;
    if (acc == -kInf) return x;
    if (acc < x) std::swap(acc, x);
    return acc + lg(1.0L + std::exp2(x - acc));
}

// single-error problems bound the weight by the vector length; the
// support-learning ones only by the extension degree, since the support is
// shared across many columns
void check_rank_instance(const ProblemInstance& inst, bool weight_by_length = true) {
    if (inst.q < 2 || inst.m <= 0 || inst.n <= 0 || inst.k < 0 || inst.k > inst.n ||
        inst.r < 0 || inst.r > inst.m || (weight_by_length && inst.r > inst.n))
        throw std::invalid_argument("estimator: malformed instance");
}

void check_blocks(const ProblemInstance& inst, size_t blocks, size_t weights) {
    if (inst.eta.size() != blocks || inst.rho.size() != weights)
        throw std::invalid_argument("estimator: mismatched eta/rho");
    if (std::accumulate(inst.eta.begin(), inst.eta.end(), 0LL) != inst.n)
        throw std::invalid_argument("estimator: block lengths do not sum to n");
    for (int e : inst.eta)
        if (e <= 0) throw std::invalid_argument("estimator: empty block");
    for (int w : inst.rho)
        if (w < 0) throw std::invalid_argument("estimator: negative block weight");
}

}  // namespace

long double log2_binomial(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return -kInf;
    return (std::lgamma(static_cast<long double>(a) + 1.0L) -
            std::lgamma(static_cast<long double>(b) + 1.0L) -
            std::lgamma(static_cast<long double>(a - b) + 1.0L)) /
           kLn2;
}

// ------------------------------------------------------------------
// RSD: single support, single block
// ------------------------------------------------------------------

std::vector<AttackReport> estimate_rsd(const ProblemInstance& inst,
                                       const EstimatorOptions& opt) {
    check_rank_instance(inst);
    const long double w = opt.omega;
    const long double lgq = lg(static_cast<long double>(inst.q));
    const long long m = inst.m, n = inst.n, k = inst.k, t = inst.r;
    std::vector<AttackReport> out;

    {
        long double ca = 3 * lg(static_cast<long double>(m)) +
                         3 * lg(static_cast<long double>(t)) +
                         static_cast<long double>((t - 1) * (k + 1)) * lgq;
        long double cb = 3 * lg(static_cast<long double>(k + t)) +
                         3 * lg(static_cast<long double>(t)) +
                         static_cast<long double>((t - 1) * (m - t)) * lgq;
        out.push_back(ok_report("rsd-oj-comb", std::min(ca, cb),
                                {{"branch", ca <= cb ? 1 : 2}}));
    }
    {
        long double pre = 3 * lg(static_cast<long double>(n - k)) +
                          3 * lg(static_cast<long double>(m));
        long long e1 = t * ceil_div(m * k, n);
        long long e2 = (t - 1) * ceil_div(m * (k + 1), n);
        out.push_back(ok_report("rsd-grs", pre + static_cast<long double>(std::min(e1, e2)) * lgq,
                                {{"branch", e1 <= e2 ? 1 : 2}}));
        out.push_back(ok_report(
            "rsd-aght", pre + static_cast<long double>(t * ceil_div(m * (k + 1), n) - m) * lgq,
            {}));
    }

    // modelling as bilinear/minor equations; the regime splits on whether the
    // plain system is already overdetermined
    const Big eqs = big_mul_u64(big_binom(n - k - 1, t), static_cast<uint64_t>(m));
    const bool over = big_ge_minus_one(eqs, big_binom(n, t));

    if (over) {
        long double bits =
            t == 0 ? 0.0L
                   : w * (static_cast<long double>(t) * lg(static_cast<long double>((m + n) * t)) -
                          lg_factorial(t));
        out.push_back(ok_report("rsd-mm-over", bits, {}));

        long long p = 0;
        bool found = false;
        for (long long i = 1; i <= n; ++i) {
            if (big_ge_minus_one(eqs, big_binom(n - i, t))) {
                p = i;
                found = true;
                break;
            }
        }
        long double peq = log2_binomial(n - p - k - 1, t);
        if (!found || std::isinf(peq)) {
            out.push_back(na_report("rsd-mm-over-punct", "puncturing loses all equations"));
        } else {
            out.push_back(ok_report("rsd-mm-over-punct",
                                    lg(static_cast<long double>(m)) + peq +
                                        (w - 1) * log2_binomial(n - p, t),
                                    {{"p", p}}));
        }
        out.push_back(na_report("rsd-mm-under", "system is overdetermined"));
        out.push_back(na_report("rsd-mm-hybrid", "system is overdetermined"));
        out.push_back(na_report("rsd-support-minors", "system is overdetermined"));
        return out;
    }

    out.push_back(na_report("rsd-mm-over", "system is underdetermined"));
    out.push_back(na_report("rsd-mm-over-punct", "system is underdetermined"));
    out.push_back(ok_report(
        "rsd-mm-under",
        w * (static_cast<long double>(t + 1) * lg(static_cast<long double>((m + n) * t)) -
             lg_factorial(t + 1)),
        {}));

    if (eqs.zero()) {
        out.push_back(na_report("rsd-mm-hybrid", "no syndrome equations"));
    } else {
        long long a = n;
        for (long long i = 1; i <= n; ++i) {
            if (big_ge_minus_one(eqs, big_binom(n - i, t))) {
                a = i;
                break;
            }
        }
        long double mon = log2_binomial(n - a, t);
        std::string note;
        if (std::isinf(mon)) {
            mon = 0.0L;
            note = "guessing empties the monomial support";
        }
        out.push_back(ok_report("rsd-mm-hybrid",
                                static_cast<long double>(a * t) * lgq +
                                    lg(static_cast<long double>(m)) +
                                    log2_binomial(n - k - 1, t) + (w - 1) * mon,
                                {{"a", a}}, note));
    }

    {
        // incremental A_b, B_b, C_b; the alternating sum C_b is carried as
        // (positive, negative) parts so every comparison stays on naturals
        const uint64_t mk1 = static_cast<uint64_t>(m) * static_cast<uint64_t>(k) + 1;
        const Big cn_t = big_binom(n, t);
        const Big beq = eqs;
        Big A, B, Cpos, Cneg;
        long long b = -1;
        Big Ab, Bb, Cpb, Cnb;
        for (long long j = 1; j <= t + 1; ++j) {
            Big cj = big_binom(static_cast<long long>(mk1), j);
            A = big_add(std::move(A), big_mul(cn_t, cj));
            B = big_add(std::move(B), big_mul(beq, cj));
            for (long long i = 1; i <= j; ++i) {
                Big term = big_mul(big_binom(n, t + i), big_binom(m + i - 1, i));
                term = big_mul(term, big_binom(static_cast<long long>(mk1), j - i));
                if (i % 2 == 1)
                    Cpos = big_add(std::move(Cpos), term);
                else
                    Cneg = big_add(std::move(Cneg), term);
            }
            // A_j - 1 <= B_j + C_j, rearranged onto naturals
            if (big_cmp(big_add(A, Cneg), big_add(big_add(B, Cpos), Big{1})) <= 0) {
                b = j;
                Ab = A;
                Bb = B;
                Cpb = Cpos;
                Cnb = Cneg;
                break;
            }
        }
        if (b < 0) {
            out.push_back(na_report("rsd-support-minors", "no working expansion degree"));
        } else {
            Big scale = big_mul_u64(Big{mk1}, static_cast<uint64_t>(t + 1));
            Big num = big_add(big_mul(Bb, big_binom(k + t + 1, t)), big_mul(Cpb, scale));
            Big numsub = big_mul(Cnb, scale);
            Big den = big_add(Bb, Cpb);
            if (big_cmp(num, numsub) <= 0 || big_cmp(den, Cnb) <= 0) {
                out.push_back(na_report("rsd-support-minors", "degenerate operation count"));
            } else {
                num = big_sub(std::move(num), numsub);
                den = big_sub(std::move(den), Cnb);
                out.push_back(ok_report("rsd-support-minors",
                                        big_lg(num) - big_lg(den) + 2 * big_lg(Ab),
                                        {{"b", b}}));
            }
        }
    }
    return out;
}

// ------------------------------------------------------------------
// BRD: one support per block
// ------------------------------------------------------------------

std::vector<AttackReport> estimate_brd(const ProblemInstance& inst,
                                       const EstimatorOptions& opt) {
    if (inst.eta.size() != inst.rho.size())
        throw std::invalid_argument("estimator: mismatched eta/rho");
    if (inst.eta.size() <= 1) {
        if (inst.eta.size() == 1 && (inst.eta[0] != inst.n || inst.rho[0] != inst.r))
            throw std::invalid_argument("estimator: single block must cover the instance");
        ProblemInstance flat = inst;
        flat.problem = ProblemKind::rsd;
        return estimate_rsd(flat, opt);
    }
    check_rank_instance(inst);
    check_blocks(inst, inst.eta.size(), inst.eta.size());
    const size_t l = inst.eta.size();
    if (std::accumulate(inst.rho.begin(), inst.rho.end(), 0LL) != inst.r)
        throw std::invalid_argument("estimator: block weights do not sum to r");
    for (size_t i = 0; i < l; ++i)
        if (inst.rho[i] > inst.eta[i] || inst.rho[i] > inst.m)
            throw std::invalid_argument("estimator: block weight exceeds its block");

    const long double w = opt.omega;
    const long double lgq = lg(static_cast<long double>(inst.q));
    const long long m = inst.m, n = inst.n, k = inst.k, r = inst.r;
    std::vector<AttackReport> out;

    if (m <= n) {
        out.push_back(ok_report(
            "brd-aght-low",
            w * lg(static_cast<long double>((n - k - 1) * m)) +
                static_cast<long double>(r * ceil_div((k + 1) * m, n) - m) * lgq,
            {}));
        out.push_back(na_report("brd-aght-high", "requires m > n"));
    } else {
        out.push_back(na_report("brd-aght-low", "requires m <= n"));
        out.push_back(ok_report("brd-aght-high",
                                w * lg(static_cast<long double>(n - k - 1)) +
                                    2 * lg(static_cast<long double>(m)) +
                                    static_cast<long double>(r * (k + 1)) * lgq,
                                {}));
    }

    {
        // guess one superspace per block inside F_{q^m}
        long long sum_r = r, sum_nr = 0;
        for (size_t i = 0; i < l; ++i) sum_nr += inst.eta[i] * static_cast<long long>(inst.rho[i]);
        if (n - k - 1 < 0 || sum_r > m || sum_nr > m * (n - k - 1)) {
            out.push_back(na_report("brd-prr-support", "constraint set infeasible"));
        } else {
            long long best = -1;
            std::vector<long long> t(l), best_t;
            auto rec = [&](auto&& self, size_t idx, long long st, long long snt,
                           long long obj) -> void {
                if (idx == l) {
                    if (obj > best) {
                        best = obj;
                        best_t = t;
                    }
                    return;
                }
                long long tail_t = 0, tail_nt = 0;
                for (size_t j = idx + 1; j < l; ++j) {
                    tail_t += inst.rho[j];
                    tail_nt += inst.eta[j] * static_cast<long long>(inst.rho[j]);
                }
                for (long long ti = inst.rho[idx]; ti <= m; ++ti) {
                    if (st + ti + tail_t > m) break;
                    if (snt + inst.eta[idx] * ti + tail_nt > m * (n - k - 1)) break;
                    t[idx] = ti;
                    self(self, idx + 1, st + ti, snt + inst.eta[idx] * ti,
                         obj + inst.rho[idx] * ti);
                }
            };
            rec(rec, 0, 0, 0, 0);
            if (best < 0) {
                out.push_back(na_report("brd-prr-support", "constraint set infeasible"));
            } else {
                Params params;
                long long expo = -m;
                for (size_t i = 0; i < l; ++i) {
                    expo += inst.rho[i] * (m - best_t[i]);
                    params.emplace_back("t" + std::to_string(i + 1), best_t[i]);
                }
                out.push_back(ok_report("brd-prr-support",
                                        w * lg(static_cast<long double>(m * (n - k - 1))) +
                                            static_cast<long double>(expo) * lgq,
                                        std::move(params)));
            }
        }
    }
    {
        // guess coordinate subspaces block by block
        const long long budget = n - k - 1;
        long long sum_r = r;
        if (budget < 0 || sum_r > budget) {
            out.push_back(na_report("brd-prr-coords", "constraint set infeasible"));
        } else {
            long long best = -1;
            std::vector<long long> t(l), best_t;
            auto rec = [&](auto&& self, size_t idx, long long st, long long obj) -> void {
                if (idx + 1 == l) {
                    long long ti = std::min<long long>(inst.eta[idx], budget - st);
                    if (ti < inst.rho[idx]) return;
                    if (obj + inst.rho[idx] * ti > best) {
                        best = obj + inst.rho[idx] * ti;
                        t[idx] = ti;
                        best_t = t;
                    }
                    return;
                }
                long long tail = 0;
                for (size_t j = idx + 1; j < l; ++j) tail += inst.rho[j];
                for (long long ti = inst.rho[idx];
                     ti <= std::min<long long>(inst.eta[idx], budget - st - tail); ++ti) {
                    t[idx] = ti;
                    self(self, idx + 1, st + ti, obj + inst.rho[idx] * ti);
                }
            };
            rec(rec, 0, 0, 0);
            if (best < 0) {
                out.push_back(na_report("brd-prr-coords", "constraint set infeasible"));
            } else {
                Params params;
                long long expo = 0;
                for (size_t i = 0; i < l; ++i) {
                    expo += inst.rho[i] * (inst.eta[i] - best_t[i]);
                    params.emplace_back("tp" + std::to_string(i + 1), best_t[i]);
                }
                out.push_back(ok_report("brd-prr-coords",
                                        w * lg(static_cast<long double>(n - k - 1)) +
                                            2 * lg(static_cast<long double>(m)) +
                                            static_cast<long double>(expo) * lgq,
                                        std::move(params)));
            }
        }
    }

    {
        const long long n1 = inst.eta[0], r1 = inst.rho[0], r2 = inst.rho[1];
        long long gamma = 0;
        for (size_t i = 1; i < l; ++i) gamma = std::max<long long>(gamma, inst.rho[i]);
        out.push_back(ok_report("brd-oj-basis",
                                w * lg(static_cast<long double>(k * r + r)) +
                                    static_cast<long double>((m - r) * (r - 1)) * lgq,
                                {}));
        const bool mid = n1 - 1 <= k && k < n1 + r2 - 1;
        const bool low = r1 - 1 <= k && k <= n1 - 1;
        const bool tiny = 1 <= k && k <= r1 - 1;
        std::string overlap = mid && low ? "overlaps the adjacent branch at k = n1-1" : "";
        if (mid)
            out.push_back(ok_report(
                "brd-oj-mid",
                w * lg(static_cast<long double>(m * (r - 1) + (n1 - r1))) +
                    static_cast<long double>((r1 - 1) * (n1 - r1) + gamma) * lgq,
                {}, overlap));
        else
            out.push_back(na_report("brd-oj-mid", "requires n1-1 <= k < n1+r2-1"));
        if (low)
            out.push_back(ok_report(
                "brd-oj-low",
                w * lg(static_cast<long double>(m * (r - 1) + (k + 1 - r1))) +
                    static_cast<long double>((r1 - 1) * (k + 1 - r1) + gamma) * lgq,
                {}, overlap));
        else
            out.push_back(na_report("brd-oj-low", "requires r1-1 <= k <= n1-1"));
        if (tiny)
            out.push_back(ok_report("brd-oj-tiny",
                                    w * lg(static_cast<long double>(m * (r - 1))) +
                                        static_cast<long double>(gamma) * lgq,
                                    {}));
        else
            out.push_back(na_report("brd-oj-tiny", "requires 1 <= k <= r1-1"));
    }

    {
        // linearize over the block with the best trade-off
        long double best = kInf;
        long long best_v = -1, best_e = 0;
        for (size_t v = 0; v < l; ++v) {
            if (inst.rho[v] == 0) continue;
            long long rv = inst.rho[v], nv = inst.eta[v];
            long long e = rv * ceil_div((k + 1) * (rv + 1) - (nv + 1), rv);
            long double c = w * lg(static_cast<long double>(rv * k)) +
                            static_cast<long double>(e) * lgq;
            if (c < best) {
                best = c;
                best_v = static_cast<long long>(v) + 1;
                best_e = e;
            }
        }
        if (best_v < 0)
            out.push_back(na_report("brd-ap-lin", "no block with positive weight"));
        else
            out.push_back(ok_report("brd-ap-lin", best,
                                    {{"v", best_v}, {"exponent", best_e}}));
    }
    if (opt.d_reg) {
        long long d = *opt.d_reg;
        long double best = kInf;
        long long best_v = -1;
        for (size_t v = 0; v < l; ++v) {
            long double c = lg(static_cast<long double>(inst.eta[v])) +
                            w * log2_binomial(inst.rho[v] + k + d - 1, d);
            if (c < best) {
                best = c;
                best_v = static_cast<long long>(v) + 1;
            }
        }
        out.push_back(ok_report("brd-ap-groebner", best, {{"v", best_v}, {"d_reg", d}}));
    } else {
        out.push_back(na_report("brd-ap-groebner",
                                "degree of regularity not supplied; excluded from minima"));
    }

    const Big eqs = big_mul_u64(big_binom(n - k - 1, r), static_cast<uint64_t>(m));
    Big mono{1};
    for (size_t i = 0; i < l; ++i) mono = big_mul(mono, big_binom(inst.eta[i], inst.rho[i]));
    const bool over = big_ge_minus_one(eqs, mono);

    if (over) {
        // puncture the last block as far as the equation count allows
        const long long nl = inst.eta[l - 1], rl = inst.rho[l - 1];
        Big head{1};
        for (size_t i = 0; i + 1 < l; ++i)
            head = big_mul(head, big_binom(inst.eta[i], inst.rho[i]));
        long long p = -1;
        for (long long i = 0; i <= std::min(nl - rl, n - k - 1); ++i) {
            Big lhs = big_mul_u64(big_binom(n - i - k - 1, r), static_cast<uint64_t>(m));
            if (big_ge_minus_one(lhs, big_mul(head, big_binom(nl - i, rl)))) p = i;
        }
        long double peq = log2_binomial(n - p - k - 1, r);
        if (p < 0 || std::isinf(peq)) {
            out.push_back(na_report("brd-mm-over", "puncturing loses all equations"));
        } else {
            long double mons = log2_binomial(nl - p, rl);
            for (size_t i = 0; i + 1 < l; ++i)
                mons += log2_binomial(inst.eta[i], inst.rho[i]);
            out.push_back(ok_report(
                "brd-mm-over",
                lg(static_cast<long double>(m)) + peq + (w - 1) * mons, {{"p", p}}));
        }
        out.push_back(na_report("brd-mm-under", "system is overdetermined"));
    } else {
        out.push_back(na_report("brd-mm-over", "system is underdetermined"));
        // hybrid: guess a_i columns of each support before linearizing
        std::vector<std::vector<long double>> lgC(l);
        std::vector<long long> cap(l);
        for (size_t i = 0; i < l; ++i) {
            cap[i] = std::min<long long>(inst.eta[i] - inst.rho[i],
                                         inst.rho[i] > 0 ? 512 / inst.rho[i] : 0);
            lgC[i].resize(cap[i] + 1);
            for (long long a = 0; a <= cap[i]; ++a)
                lgC[i][a] = log2_binomial(inst.eta[i] - a, inst.rho[i]);
        }
        const long double lhs_lg = big_lg(eqs);
        const long double base = lg(static_cast<long double>(m)) + log2_binomial(n - k - 1, r);
        long double best = kInf;
        std::vector<long long> a(l), best_a;
        auto exact_feasible = [&](const std::vector<long long>& av) {
            Big prod{1};
            for (size_t i = 0; i < l; ++i)
                prod = big_mul(prod, big_binom(inst.eta[i] - av[i], inst.rho[i]));
            return big_ge_minus_one(eqs, prod);
        };
        auto rec = [&](auto&& self, size_t idx, long double lgmono, long double acost) -> void {
            if (idx == l) {
                long double delta = lhs_lg - lgmono;
                bool feas = delta > kMargin || (delta >= -kMargin && exact_feasible(a));
                if (!feas) return;
                long double c = acost + base + (w - 1) * lgmono;
                if (c < best) {
                    best = c;
                    best_a = a;
                }
                return;
            }
            for (long long ai = 0; ai <= cap[idx]; ++ai) {
                a[idx] = ai;
                self(self, idx + 1, lgmono + lgC[idx][ai],
                     acost + static_cast<long double>(ai * inst.rho[idx]) * lgq);
            }
        };
        if (eqs.zero()) {
            out.push_back(na_report("brd-mm-under", "no syndrome equations"));
        } else {
            rec(rec, 0, 0.0L, 0.0L);
            if (best == kInf) {
                out.push_back(na_report("brd-mm-under",
                                        "no guess inside the search caps reaches "
                                        "an overdetermined system"));
            } else {
                Params params;
                for (size_t i = 0; i < l; ++i)
                    params.emplace_back("a" + std::to_string(i + 1), best_a[i]);
                out.push_back(ok_report("brd-mm-under", best, std::move(params)));
            }
        }
    }

    {
        // combined puncture-and-guess ray search: per-block column removals
        // c_i are placed greedily (exact for equal block weights, which is
        // every shape the reductions produce), the puncture share p is the
        // largest feasible, and the remainder is paid for as guesses
        const long long pcap = n - k - 1 - r;
        bool unequal = false;
        for (size_t i = 1; i < l; ++i) unequal |= inst.rho[i] != inst.rho[0];
        if (pcap < 0) {
            out.push_back(na_report("brd-bp-mm", "no equations at any puncture count"));
        } else {
            std::vector<long double> lgEq(pcap + 1);
            for (long long p = 0; p <= pcap; ++p)
                lgEq[p] = lg(static_cast<long double>(m)) + log2_binomial(n - p - k - 1, r);
            std::vector<std::vector<long double>> lgC(l);
            std::vector<long long> cap(l);
            long long tmax = 0;
            for (size_t i = 0; i < l; ++i) {
                cap[i] = inst.eta[i] - inst.rho[i];
                tmax += cap[i];
                lgC[i].resize(cap[i] + 1);
                for (long long c = 0; c <= cap[i]; ++c)
                    lgC[i][c] = log2_binomial(inst.eta[i] - c, inst.rho[i]);
            }
            std::vector<size_t> by_weight(l);
            for (size_t i = 0; i < l; ++i) by_weight[i] = i;
            std::stable_sort(by_weight.begin(), by_weight.end(),
                             [&](size_t x, size_t y) { return inst.rho[x] > inst.rho[y]; });

            std::vector<long long> c(l, 0);
            long double msum = 0;
            for (size_t i = 0; i < l; ++i) msum += lgC[i][0];
            long double best = kInf;
            std::vector<long long> best_c, best_p;
            long long best_total_p = -1;

            for (long long T = 0; T <= tmax; ++T) {
                if (T > 0) {
                    size_t pick = l;
                    long double gain = -1;
                    for (size_t i = 0; i < l; ++i) {
                        if (c[i] >= cap[i]) continue;
                        long double g = lgC[i][c[i]] - lgC[i][c[i] + 1];
                        if (g > gain) {
                            gain = g;
                            pick = i;
                        }
                    }
                    if (pick == l) break;
                    msum -= lgC[pick][c[pick]];
                    ++c[pick];
                    msum += lgC[pick][c[pick]];
                }
                if (lgEq[0] < msum - kMargin) continue;
                long long lo = 0, hi = std::min<long long>(pcap, T);
                while (lo < hi) {  // largest p with lgEq[p] >= msum
                    long long mid = (lo + hi + 1) / 2;
                    if (lgEq[mid] >= msum - kMargin)
                        lo = mid;
                    else
                        hi = mid - 1;
                }
                long long p = lo;
                std::vector<long long> palloc(l, 0);
                long long left = p;
                long double acost = 0;
                for (size_t i : by_weight) {
                    palloc[i] = std::min(left, c[i]);
                    left -= palloc[i];
                }
                for (size_t i = 0; i < l; ++i)
                    acost += static_cast<long double>((c[i] - palloc[i]) * inst.rho[i]) * lgq;
                long double cost = acost + lgEq[p] + (w - 1) * msum;
                if (cost < best) {
                    best = cost;
                    best_c = c;
                    best_p = palloc;
                    best_total_p = p;
                }
            }
            if (best == kInf) {
                out.push_back(na_report("brd-bp-mm", "never reaches an overdetermined system"));
            } else {
                // exact replay; walk the puncture count down on a boundary miss
                Big prod{1};
                for (size_t i = 0; i < l; ++i)
                    prod = big_mul(prod, big_binom(inst.eta[i] - best_c[i], inst.rho[i]));
                long long p = best_total_p;
                while (p >= 0) {
                    Big lhs = big_mul_u64(big_binom(n - p - k - 1, r), static_cast<uint64_t>(m));
                    if (big_cmp(lhs, prod) >= 0) break;
                    --p;
                }
                if (p < 0) {
                    out.push_back(na_report("brd-bp-mm",
                                            "never reaches an overdetermined system"));
                } else {
                    if (p != best_total_p) {
                        std::vector<long long> palloc(l, 0);
                        long long left = p;
                        for (size_t i : by_weight) {
                            palloc[i] = std::min(left, best_c[i]);
                            left -= palloc[i];
                        }
                        best_p = palloc;
                    }
                    long double acost = 0, msum2 = 0;
                    Params params;
                    for (size_t i = 0; i < l; ++i) {
                        acost += static_cast<long double>((best_c[i] - best_p[i]) * inst.rho[i]) *
                                 lgq;
                        msum2 += lgC[i][best_c[i]];
                    }
                    for (size_t i = 0; i < l; ++i)
                        params.emplace_back("a" + std::to_string(i + 1),
                                            best_c[i] - best_p[i]);
                    for (size_t i = 0; i < l; ++i)
                        params.emplace_back("p" + std::to_string(i + 1), best_p[i]);
                    params.emplace_back("p", p);
                    out.push_back(ok_report(
                        "brd-bp-mm", acost + lgEq[p] + (w - 1) * msum2, std::move(params),
                        unequal ? "greedy removal ray; exact for equal block weights" : ""));
                }
            }
        }
    }
    return out;
}

// ------------------------------------------------------------------
// NHRSD: outer blocks share one support, the middle block has its own
// ------------------------------------------------------------------

std::vector<AttackReport> estimate_nhrsd(const ProblemInstance& inst,
                                         const EstimatorOptions& opt) {
    check_rank_instance(inst);
    check_blocks(inst, 3, 2);
    const long double w = opt.omega;
    const long double lgq = lg(static_cast<long double>(inst.q));
    const long long m = inst.m;
    const long long w1 = inst.rho[0], w2 = inst.rho[1];
    if (inst.r != w1 + w2)
        throw std::invalid_argument("estimator: r must equal w1 + w2");
    std::vector<AttackReport> out;

    {
        // guess a superspace of dim rr for the outer support and an extension
        // of dim pp catching the middle one
        long long best_e = 0, best_r = -1, best_p = -1;
        bool found = false;
        for (long long rr = w1; rr <= m - 1; ++rr) {
            for (long long pp = w2; pp <= m - 1 - rr; ++pp) {
                long long e = (w1 + w2) * (m - rr) - w2 * pp - m;
                if (!found || e < best_e) {
                    found = true;
                    best_e = e;
                    best_r = rr;
                    best_p = pp;
                }
            }
        }
        if (!found)
            out.push_back(na_report("nhrsd-comb", "support dimensions exceed m"));
        else
            out.push_back(ok_report("nhrsd-comb", static_cast<long double>(best_e) * lgq,
                                    {{"r", best_r}, {"rho", best_p}},
                                    "polynomial prefactor taken as 1"));
    }

    if (inst.eta[0] != inst.eta[2]) {
        out.push_back(na_report("nhrsd-alg", "requires equal outer blocks"));
        return out;
    }
    {
        const long long pn = inst.eta[0], pn1 = inst.eta[1], wt = w1 + w2;
        Big nq;
        for (long long i = w2; i <= wt; ++i)
            nq = big_add(std::move(nq), big_mul(big_binom(pn1 - 1, i), big_binom(pn, wt - i)));
        nq = big_mul_u64(std::move(nq), static_cast<uint64_t>(m));
        Big v = big_mul(big_binom(pn1 - 1, w2 - 1), big_binom(pn - 1, w1));
        v = big_mul_u64(std::move(v), static_cast<uint64_t>(m));
        if (nq.zero()) {
            out.push_back(na_report("nhrsd-alg", "no syndrome equations"));
            return out;
        }
        long long a = -1;
        Big tot, ma;
        for (long long i = 0; i <= 2 * pn + pn1; ++i) {
            Big mi;
            for (long long j = 0; j <= w2 - 1; ++j)
                mi = big_add(std::move(mi),
                             big_mul(big_binom(pn1, j), big_binom(2 * pn - i, wt - j)));
            Big ti = big_binom(2 * pn + pn1 - i, wt);
            Big lhs = big_add(big_add(nq, mi), big_add(v, Big{1}));
            if (big_cmp(lhs, ti) >= 0) {
                a = i;
                tot = std::move(ti);
                ma = std::move(mi);
                break;
            }
        }
        if (a < 0) {
            out.push_back(na_report("nhrsd-alg", "never reaches an overdetermined system"));
            return out;
        }
        Big sub = big_add(ma, v);
        std::string note;
        long double lgd;
        if (big_cmp(tot, sub) <= 0) {
            lgd = 0.0L;
            note = "monomial support exhausted";
        } else {
            lgd = big_lg(big_sub(std::move(tot), sub));
        }
        out.push_back(ok_report("nhrsd-alg",
                                static_cast<long double>(a * w1) * lgq + big_lg(nq) +
                                    (w - 1) * lgd,
                                {{"a", a}}, std::move(note)));
    }
    return out;
}

std::vector<AttackReport> estimate_nhrd_bp(const ProblemInstance& inst,
                                           const EstimatorOptions& opt) {
    check_rank_instance(inst);
    check_blocks(inst, 3, 2);
    const long double w = opt.omega;
    const long double lgq = lg(static_cast<long double>(inst.q));
    const long long m = inst.m, n = inst.n, k = inst.k;
    const long long r1 = inst.rho[0], r2 = inst.rho[1], r = r1 + r2;
    if (inst.r != r) throw std::invalid_argument("estimator: r must equal w1 + w2");
    std::vector<AttackReport> out;

    const long long b0 = inst.eta[0] + inst.eta[2];  // outer columns, jointly
    const long long m0 = inst.eta[1];
    const long long pcap = n - k - 1 - r;
    if (pcap < 0) {
        out.push_back(na_report("nhrd-bp", "no equations at any puncture count"));
        return out;
    }
    const long long acap =
        std::min<long long>(inst.eta[2], r1 > 0 ? 512 / r1 : inst.eta[2]);
    if ((b0 + 1) * (m0 + 1) * (acap + 1) > 50'000'000LL) {
        out.push_back(na_report("nhrd-bp", "instance exceeds the bounded search space"));
        return out;
    }

    // U counts monomials by middle-block occupancy; computed exactly
    std::vector<std::vector<int>> ubranch(b0 + 1, std::vector<int>(m0 + 1, 0));
    std::vector<std::vector<Big>> umemo(b0 + 1, std::vector<Big>(m0 + 1));
    std::vector<std::vector<bool>> uset(b0 + 1, std::vector<bool>(m0 + 1, false));
    auto u_of = [&](long long B, long long M2) -> std::pair<const Big*, int> {
        auto& slot = umemo[B][M2];
        if (!uset[B][M2]) {
            uset[B][M2] = true;
            if (M2 < r2) {
                ubranch[B][M2] = 0;
            } else if (M2 > r2 && B >= r1) {
                Big u = big_binom(B + M2, r);
                Big s;
                for (long long i = 0; i <= r2 - 1; ++i)
                    s = big_add(std::move(s), big_mul(big_binom(M2, i), big_binom(B, r - i)));
                slot = big_cmp(u, s) >= 0 ? big_sub(std::move(u), s) : Big{};
                ubranch[B][M2] = 1;
            } else if (M2 == r2 && B >= r1) {
                slot = big_mul(big_binom(M2, r2), big_binom(B, r1));
                ubranch[B][M2] = 2;
            } else if (M2 > r2) {  // B <= r1
                Big s;
                for (long long i = 0; i <= B; ++i)
                    s = big_add(std::move(s), big_mul(big_binom(M2, r - i), big_binom(B, i)));
                slot = std::move(s);
                ubranch[B][M2] = 3;
            } else {
                ubranch[B][M2] = 0;
            }
        }
        return {&slot, ubranch[B][M2]};
    };

    std::vector<Big> eqs(pcap + 1);
    std::vector<long double> lgEq(pcap + 1);
    for (long long p = 0; p <= pcap; ++p) {
        eqs[p] = big_mul_u64(big_binom(n - p - k - 1, r), static_cast<uint64_t>(m));
        lgEq[p] = big_lg(eqs[p]);
    }

    long double best = kInf;
    long long ba = -1, bo = -1, bp2 = -1;
    int bbr = 0;
    for (long long a = 0; a <= acap; ++a) {
        long double floor_cost = static_cast<long double>(a * r1) * lgq;
        if (floor_cost >= best) break;
        for (long long o = 0; o <= b0 - a; ++o) {
            long long B = b0 - a - o;
            for (long long p2 = 0; p2 <= m0 - r2; ++p2) {
                long long p = o + p2;
                if (p > pcap) break;
                auto [u, br] = u_of(B, m0 - p2);
                if (br == 0 || u->zero()) continue;
                if (big_cmp(eqs[p], *u) < 0) continue;
                long double cost = floor_cost + lgEq[p] + (w - 1) * big_lg(*u);
                if (cost < best) {
                    best = cost;
                    ba = a;
                    bo = o;
                    bp2 = p2;
                    bbr = br;
                }
            }
        }
    }
    if (best == kInf) {
        out.push_back(na_report("nhrd-bp", "never reaches an overdetermined system"));
        return out;
    }
    long long p1 = std::min<long long>(bo, inst.eta[0]);
    out.push_back(ok_report("nhrd-bp", best,
                            {{"a1", 0},
                             {"a2", 0},
                             {"a3", ba},
                             {"p1", p1},
                             {"p2", bp2},
                             {"p3", bo - p1},
                             {"u_branch", bbr}}));
    return out;
}

// ------------------------------------------------------------------
// RSL / NHRSL: many syndromes of one error support
// ------------------------------------------------------------------

namespace {

struct RslPick {
    long double bits = kInf;
    long long delta = 0, a = 0, b = 0, aR = 0, al = 0;
    int variant = 0;
};

// shared grid for the fixed-support minor modelling, at support reduction
// delta (0 means none); a and Np follow from the printed defining equalities
void rsl_scan(const ProblemInstance& inst, const EstimatorOptions& opt, long long delta,
              long long a, long long np, RslPick& best) {
    const long double w = opt.omega;
    const long double lgq = lg(static_cast<long double>(inst.q));
    const long long m = inst.m, n = inst.n, k = inst.k, r = inst.r;
    const long long rd = r - delta;

    for (long long b = 1; b <= r + 1; ++b) {
        for (long long aR = 0; aR < n - a - r; ++aR) {
            long double lg_cols = log2_binomial(n - a - aR, rd);
            if (std::isinf(lg_cols)) continue;
            for (long long al = 0; al < np - b; ++al) {
                long double lgM = -kInf;
                for (long long i = 1; i <= b; ++i)
                    lgM = lse_add(lgM, log2_binomial(np - al, i));
                lgM += lg_cols;
                long double lgN = -kInf;
                for (long long i = 1; i <= b; ++i)
                    for (long long d = 1; d <= i; ++d)
                        for (long long j = 1; j <= n - k; ++j) {
                            long double term = log2_binomial(j - 1, d - 1) +
                                               log2_binomial(n - k - j, rd - d + 1) +
                                               log2_binomial(np - al - j, i - d);
                            lgN = lse_add(lgN, term);
                        }
                if (lgN == -kInf) continue;
                long double delta_f = lg(static_cast<long double>(m)) + lgN - lgM;
                bool feas = delta_f > kMargin;
                if (!feas && delta_f >= -kMargin) {
                    // exact boundary decision
                    Big M = big_binom(n - a - aR, rd), s;
                    for (long long i = 1; i <= b; ++i)
                        s = big_add(std::move(s), big_binom(np - al, i));
                    M = big_mul(M, s);
                    Big N;
                    for (long long i = 1; i <= b; ++i)
                        for (long long d = 1; d <= i; ++d)
                            for (long long j = 1; j <= n - k; ++j) {
                                Big t = big_mul(big_binom(j - 1, d - 1),
                                                big_binom(n - k - j, rd - d + 1));
                                t = big_mul(t, big_binom(np - al - j, i - d));
                                N = big_add(std::move(N), t);
                            }
                    feas = big_ge_minus_one(big_mul_u64(std::move(N), static_cast<uint64_t>(m)),
                                            M);
                }
                if (!feas) continue;
                long double guess = static_cast<long double>(r * aR + al) * lgq;
                long double t1 = guess + lg(static_cast<long double>(m)) + lgN + (w - 1) * lgM;
                long double t2_tail = log2_binomial(k - a + 1 + r, r);
                long double t2 = std::isinf(t2_tail)
                                     ? kInf
                                     : guess + lg(static_cast<long double>(np - al)) + t2_tail +
                                           2 * lgM;
                long double c = std::min(t1, t2);
                if (c < best.bits) {
                    best = {c, delta, a, b, aR, al, t1 <= t2 ? 1 : 2};
                }
            }
        }
    }
}

}  // namespace

std::vector<AttackReport> estimate_rsl(const ProblemInstance& inst,
                                       const EstimatorOptions& opt) {
    check_rank_instance(inst, /*weight_by_length=*/false);
    if (inst.N < 0) throw std::invalid_argument("estimator: negative syndrome count");
    const long double lgq = lg(static_cast<long double>(inst.q));
    const long long m = inst.m, n = inst.n, k = inst.k, r = inst.r, N = inst.N;
    std::vector<AttackReport> out;

    if (r < 1) {
        out.push_back(na_report("rsl-comb", "zero weight"));
    } else if (N >= k * r) {
        out.push_back(na_report("rsl-comb", "requires N < kr"));
    } else {
        long long a = N / r;
        if (n - a <= 0) {
            out.push_back(na_report("rsl-comb", "degenerate column count"));
        } else {
            long long inner = floor_div(m * (n - k) - N, n - a);
            out.push_back(ok_report("rsl-comb",
                                    static_cast<long double>(r * (m - inner)) * lgq,
                                    {{"a", a}}));
        }
    }

    {
        RslPick best;
        if (r >= 1 && N >= 1) {
            long long a = (N - 1) / r;
            rsl_scan(inst, opt, 0, a, a * r + 1, best);
        }
        if (best.bits == kInf)
            out.push_back(na_report("rsl-alg-d0", "grid empty or never overdetermined"));
        else
            out.push_back(ok_report("rsl-alg-d0", best.bits,
                                    {{"a", best.a},
                                     {"b", best.b},
                                     {"alpha_R", best.aR},
                                     {"alpha_lambda", best.al},
                                     {"variant", best.variant}}));
    }
    {
        RslPick best;
        for (long long delta = 1; delta < r; ++delta) {
            long long base = delta * (n - r + delta);
            if (N < base) continue;
            long long a = (N - base) / (r - delta);
            rsl_scan(inst, opt, delta, a, base + a * (r - delta), best);
        }
        if (best.bits == kInf)
            out.push_back(na_report("rsl-alg-dpos", "grid empty or never overdetermined"));
        else
            out.push_back(ok_report("rsl-alg-dpos", best.bits,
                                    {{"delta", best.delta},
                                     {"a", best.a},
                                     {"b", best.b},
                                     {"alpha_R", best.aR},
                                     {"alpha_lambda", best.al},
                                     {"variant", best.variant}}));
    }
    return out;
}

std::vector<AttackReport> estimate_nhrsl(const ProblemInstance& inst,
                                         const EstimatorOptions& opt) {
    (void)opt;
    check_rank_instance(inst, /*weight_by_length=*/false);
    check_blocks(inst, 3, 2);
    if (inst.N < 0) throw std::invalid_argument("estimator: negative syndrome count");
    const long double lgq = lg(static_cast<long double>(inst.q));
    const long long m = inst.m, n = inst.n, z = inst.k, N = inst.N;
    const long long w1 = inst.rho[0], w2 = inst.rho[1];
    std::vector<AttackReport> out;
    if (w1 <= 0 || w2 <= 0) {
        out.push_back(na_report("nhrsl-comb", "requires positive block weights"));
        return out;
    }

    // split the N syndromes between the two support-learning phases, then
    // guess dims (rr, pp) as in the plain non-homogeneous search
    bool found = false;
    long long best_e = 0, bn1 = -1, brr = -1, bpp = -1, bA = -1, bB = -1;
    for (long long n1 = 0; n1 <= N; ++n1) {
        long long n2 = N - n1;
        long long a = n1 / w1, b = n2 / w2;
        if (a > n - 2 * z || b > 2 * z) continue;
        for (long long rr = w1; rr <= m - 1; ++rr) {
            for (long long pp = std::max<long long>(w2 - w1, 0); pp <= m - 1 - rr; ++pp) {
                long long lhs = m * (n - z);
                long long rhs = (n - 2 * z - b) * (rr + pp) + (2 * z - a) * rr + N;
                if (lhs < rhs) continue;
                long long e = w2 * (m - rr) - (w2 - w1) * pp;
                if (!found || e < best_e) {
                    found = true;
                    best_e = e;
                    bn1 = n1;
                    brr = rr;
                    bpp = pp;
                    bA = a;
                    bB = b;
                }
            }
        }
    }
    if (!found) {
        out.push_back(na_report("nhrsl-comb", "constraint set infeasible"));
    } else {
        out.push_back(ok_report("nhrsl-comb", static_cast<long double>(best_e) * lgq,
                                {{"N1", bn1},
                                 {"N2", N - bn1},
                                 {"a", bA},
                                 {"b", bB},
                                 {"r", brr},
                                 {"rho", bpp}},
                                "polynomial prefactor taken as 1"));
    }
    return out;
}

// ------------------------------------------------------------------
// dispatch and the scheme reductions
// ------------------------------------------------------------------

std::vector<AttackReport> estimate_instance(const ProblemInstance& inst,
                                            const EstimatorOptions& opt) {
    switch (inst.problem) {
        case ProblemKind::rsd:
            return estimate_rsd(inst, opt);
        case ProblemKind::brd:
            return estimate_brd(inst, opt);
        case ProblemKind::nhrsd: {
            auto reports = estimate_nhrsd(inst, opt);
            auto bp = estimate_nhrd_bp(inst, opt);
            reports.insert(reports.end(), std::make_move_iterator(bp.begin()),
                           std::make_move_iterator(bp.end()));
            return reports;
        }
        case ProblemKind::rsl:
            return estimate_rsl(inst, opt);
        case ProblemKind::nhrsl:
            return estimate_nhrsl(inst, opt);
    }
    throw std::invalid_argument("estimator: unknown problem kind");
}

SecuritySummary scheme_security(const SchemeParams& p, const EstimatorOptions& opt) {
    validate_params(p);
    SecuritySummary s;
    auto add = [&](std::string tag, ProblemInstance inst) {
        s.instances.push_back({std::move(tag), inst, estimate_instance(inst, opt)});
    };

    switch (p.scheme) {
        case SchemeKind::bwe: {
            ProblemInstance two;
            two.problem = ProblemKind::brd;
            two.m = p.m;
            two.n = 2 * p.n;
            two.k = p.n;
            two.r = p.wx + p.wy;
            two.eta = {p.n, p.n};
            two.rho = {p.wx, p.wy};
            add("2-IBRSD", two);
            ProblemInstance three;
            three.problem = ProblemKind::brd;
            three.m = p.m;
            three.n = 3 * p.n;
            three.k = p.n;
            three.r = p.wx + p.we + p.wy;
            three.eta = {p.n, p.n, p.n};
            three.rho = {p.wx, p.we, p.wy};
            add("3-IBRSD", three);
            break;
        }
        case SchemeKind::multi_nh: {
            ProblemInstance key;
            key.problem = ProblemKind::rsd;
            key.m = p.m;
            key.n = 2 * p.n2;
            key.k = p.n2;
            key.r = p.wx + p.wy;
            add("2-IRSD", key);
            ProblemInstance msg;
            msg.problem = ProblemKind::nhrsl;
            msg.m = p.m;
            msg.n = 3 * p.n2;
            msg.k = p.n2;
            msg.r = p.w1 + p.w2;
            msg.eta = {p.n2, p.n2, p.n2};
            msg.rho = {p.w1, p.w2};
            msg.N = p.n1;
            add("NHRSL", msg);
            break;
        }
        case SchemeKind::multi_ur: {
            ProblemInstance key;
            key.problem = ProblemKind::rsl;
            key.m = p.m;
            key.n = 2 * p.z;
            key.k = p.z;
            key.r = p.wx + p.wy;
            key.N = p.n1;
            add("RSL", key);
            ProblemInstance msg;
            msg.problem = ProblemKind::nhrsl;
            msg.m = p.m;
            msg.n = 2 * p.z + p.n1;
            msg.k = p.z;
            msg.r = p.w1 + p.w2;
            msg.eta = {p.z, p.n1, p.z};
            msg.rho = {p.w1, p.w2};
            msg.N = p.n2;
            add("NHRSL", msg);
            break;
        }
    }

    s.bits = kInf;
    for (const auto& ir : s.instances)
        for (const auto& rep : ir.reports)
            if (rep.applicable) s.bits = std::min(s.bits, rep.bits);
    return s;
}

}  // namespace egk
