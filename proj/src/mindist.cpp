#include "dlcodes/mindist.hpp"

#include <bit>
#include <climits>
#include <random>

namespace dlcodes::mindist {

using bundle_codes::LinearCode;

long long representative_count(long long q, int k) {
    long long pw = 1;
    for (int i = 0; i < k; ++i) {
        if (pw > (LLONG_MAX - 1) / q) return LLONG_MAX;
        pw *= q;
    }
    return (pw - 1) / (q - 1);
}

namespace {

// Loopless reflected mixed-radix Gray walk over `len` digits of radix q.
// step() advances one digit by +-1 and reports which; returns false when the
// walk is complete.
class GrayWalk {
  public:
    GrayWalk(int len, int q) : q_(q), a_(static_cast<size_t>(len), 0), o_(static_cast<size_t>(len), 1) {
        f_.resize(static_cast<size_t>(len) + 1);
        for (size_t i = 0; i < f_.size(); ++i) f_[i] = static_cast<int>(i);
    }

    bool step(int* digit_index, int* old_value, int* new_value) {
        const int j = f_[0];
        f_[0] = 0;
        if (j == static_cast<int>(a_.size())) return false;
        *digit_index = j;
        *old_value = a_[static_cast<size_t>(j)];
        a_[static_cast<size_t>(j)] += o_[static_cast<size_t>(j)];
        *new_value = a_[static_cast<size_t>(j)];
        if (a_[static_cast<size_t>(j)] == 0 || a_[static_cast<size_t>(j)] == q_ - 1) {
            o_[static_cast<size_t>(j)] = -o_[static_cast<size_t>(j)];
            f_[static_cast<size_t>(j)] = f_[static_cast<size_t>(j) + 1];
            f_[static_cast<size_t>(j) + 1] = j + 1;
        }
        return true;
    }

  private:
    int q_;
    std::vector<int> a_;
    std::vector<int> o_;
    std::vector<int> f_;
};

// Exhaustive walk for GF(2): codewords packed into 64-bit words.
void walk_gf2(const LinearCode& code, long long& min_weight,
              std::map<long long, long long>* dist, long long& visited) {
    const int n = code.n, k = code.k;
    const int words = (n + 63) / 64;
    std::vector<uint64_t> rows(static_cast<size_t>(k) * static_cast<size_t>(words), 0);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c)
            if (code.gen.at(r, c)) rows[static_cast<size_t>(r) * words + static_cast<size_t>(c / 64)] |= 1ULL << (c % 64);

    std::vector<uint64_t> cw(static_cast<size_t>(words));
    for (int lead = 0; lead < k; ++lead) {
        for (int w = 0; w < words; ++w) cw[static_cast<size_t>(w)] = rows[static_cast<size_t>(lead) * words + static_cast<size_t>(w)];
        auto visit = [&] {
            long long wt = 0;
            for (int w = 0; w < words; ++w) wt += std::popcount(cw[static_cast<size_t>(w)]);
            if (wt < min_weight) min_weight = wt;
            if (dist) ++(*dist)[wt];
            ++visited;
        };
        visit();
        GrayWalk walk(k - lead - 1, 2);
        int j, oldv, newv;
        while (walk.step(&j, &oldv, &newv)) {
            const size_t r = static_cast<size_t>(lead + 1 + j) * words;
            for (int w = 0; w < words; ++w) cw[static_cast<size_t>(w)] ^= rows[r + static_cast<size_t>(w)];
            visit();
        }
    }
}

// General walk: one scaled row addition per step, weight tallied in the same
// pass.
void walk_generic(const LinearCode& code, long long& min_weight,
                  std::map<long long, long long>* dist, long long& visited) {
    const gf::Field& f = *code.field;
    const int n = code.n, k = code.k;
    const int q = static_cast<int>(f.q());
    std::vector<uint8_t> cw(static_cast<size_t>(n));
    for (int lead = 0; lead < k; ++lead) {
        std::copy(code.gen.row(lead), code.gen.row(lead) + n, cw.begin());
        long long wt = 0;
        for (int c = 0; c < n; ++c) wt += cw[static_cast<size_t>(c)] != 0;
        auto visit = [&] {
            if (wt < min_weight) min_weight = wt;
            if (dist) ++(*dist)[wt];
            ++visited;
        };
        visit();
        GrayWalk walk(k - lead - 1, q);
        int j, oldv, newv;
        while (walk.step(&j, &oldv, &newv)) {
            // Message digit j (ordinal) moved by one; fold the difference of
            // the two field elements into the codeword.
            const int delta = f.sub(f.code_at(newv), f.code_at(oldv));
            const uint8_t* row = code.gen.row(lead + 1 + j);
            for (int c = 0; c < n; ++c) {
                const int add = f.mul(delta, row[c]);
                if (add == 0) continue;
                uint8_t& x = cw[static_cast<size_t>(c)];
                const bool was = x != 0;
                x = static_cast<uint8_t>(f.add(x, add));
                wt += (x != 0) - was;
            }
            visit();
        }
    }
}

}  // namespace

WeightReport exact_min_distance(const LinearCode& code, long long budget, bool want_distribution) {
    if (code.k <= 0) throw IndexOutOfRange("code has no rows");
    const long long reps = representative_count(code.field->q(), code.k);
    if (reps > budget)
        throw BudgetExceeded("representative count " + std::to_string(reps) +
                             " exceeds budget " + std::to_string(budget));

    WeightReport rep;
    rep.method = "exhaustive";
    rep.min_weight = code.n + 1;
    std::map<long long, long long> dist;
    long long visited = 0;
    if (code.field->q() == 2)
        walk_gf2(code, rep.min_weight, want_distribution ? &dist : nullptr, visited);
    else
        walk_generic(code, rep.min_weight, want_distribution ? &dist : nullptr, visited);
    rep.enumerated = visited;

    if (want_distribution) {
        // Scalar classes have q-1 members of equal weight; the zero word
        // completes the count to q^k.
        std::map<long long, long long> full;
        for (const auto& [w, c] : dist) full[w] = c * (code.field->q() - 1);
        full[0] += 1;
        rep.distribution = std::move(full);
    }
    return rep;
}

WeightReport sampled_min_weight(const LinearCode& code, long long trials, uint64_t seed,
                                std::optional<long long> claimed_lower) {
    if (trials < 1) throw IndexOutOfRange("sampled_min_weight needs trials >= 1");
    if (code.k <= 0) throw IndexOutOfRange("code has no rows");
    const gf::Field& f = *code.field;
    const uint64_t q = static_cast<uint64_t>(f.q());
    std::mt19937_64 rng(seed);
    // Unbiased digit draw by rejection; avoids distribution objects whose
    // algorithms vary across standard libraries.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % q;
    auto draw = [&]() -> int {
        uint64_t v;
        do {
            v = rng();
        } while (v >= limit);
        return static_cast<int>(v % q);
    };

    WeightReport rep;
    rep.method = "sampled";
    rep.samples = trials;
    rep.min_weight = code.n + 1;

    std::vector<int> msg(static_cast<size_t>(code.k));
    std::vector<uint8_t> cw(static_cast<size_t>(code.n));
    for (long long t = 0; t < trials; ++t) {
        bool nonzero = false;
        do {
            nonzero = false;
            for (int i = 0; i < code.k; ++i) {
                msg[static_cast<size_t>(i)] = draw();
                nonzero = nonzero || msg[static_cast<size_t>(i)] != 0;
            }
        } while (!nonzero);
        std::fill(cw.begin(), cw.end(), 0);
        for (int i = 0; i < code.k; ++i) {
            const int c = msg[static_cast<size_t>(i)];
            if (c == 0) continue;
            const uint8_t* row = code.gen.row(i);
            for (int j = 0; j < code.n; ++j)
                cw[static_cast<size_t>(j)] = static_cast<uint8_t>(f.add(cw[static_cast<size_t>(j)], f.mul(c, row[j])));
        }
        long long wt = 0;
        for (int j = 0; j < code.n; ++j) wt += cw[static_cast<size_t>(j)] != 0;
        if (wt < rep.min_weight) rep.min_weight = wt;
    }
    if (claimed_lower) rep.verified_bound = std::make_pair(*claimed_lower, rep.min_weight >= *claimed_lower);
    return rep;
}

VerifyEvidence verify_bound(const LinearCode& code, long long d_lower, long long budget,
                            long long trials, uint64_t seed) {
    if (code.k <= 0) throw IndexOutOfRange("code has no rows");
    VerifyEvidence ev;
    if (representative_count(code.field->q(), code.k) <= budget) {
        ev.report = exact_min_distance(code, budget, false);
        ev.report.verified_bound = std::make_pair(d_lower, ev.report.min_weight >= d_lower);
    } else {
        ev.report = sampled_min_weight(code, trials, seed, d_lower);
    }
    ev.pass = ev.report.verified_bound->second;
    return ev;
}

}  // namespace dlcodes::mindist
