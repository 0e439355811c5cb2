#include "tn3/intmat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace tn3 {

IntMat2 IntMat2::inverse() const {
    long long D = det();
    if (D != 1 && D != -1)
        throw std::domain_error("not invertible over integers");
    // adj / det with det = +-1
    return {d * D, -b * D, -c * D, a * D};
}

long long IntMat2::max_abs() const {
    return std::max({std::llabs(a), std::llabs(b), std::llabs(c), std::llabs(d)});
}

std::string IntMat2::to_string() const {
    std::ostringstream os;
    os << "(" << a << "," << b << ";" << c << "," << d << ")";
    return os.str();
}

std::pair<Rat, Rat> apply(const IntMat2& m, const Rat& x, const Rat& y) {
    return {Rat(m.a) * x + Rat(m.b) * y, Rat(m.c) * x + Rat(m.d) * y};
}

std::optional<int> finite_order(const IntMat2& m) {
    IntMat2 p = m;
    for (int k = 1; k <= 12; ++k) {
        if (p == IntMat2::identity()) return k;
        p = p * m;
    }
    return std::nullopt;
}

namespace {

long long content3(long long x, long long y, long long z, long long w) {
    long long g = std::gcd(std::gcd(std::llabs(x), std::llabs(y)),
                           std::gcd(std::llabs(z), std::llabs(w)));
    return g;
}

// Parabolic invariant: m = I + n*N0 with N0 primitive nilpotent conjugate
// to (0 1; 0 0). The sign of n is read off the upper off-diagonal entry
// (or minus the lower one when that vanishes).
long long parabolic_twist(const IntMat2& m) {
    IntMat2 n{m.a - 1, m.b, m.c, m.d - 1};
    long long g = content3(n.a, n.b, n.c, n.d);
    long long sgn;
    if (n.b != 0) sgn = n.b > 0 ? 1 : -1;
    else sgn = -n.c > 0 ? 1 : -1;
    return sgn * g;
}

} // namespace

NtType nt_type(const IntMat2& m) {
    if (m.det() != 1)
        throw std::domain_error("orientation-reversing class: NT typing undefined here");
    long long tr = m.trace();
    NtType out;
    out.trace = tr;
    if (m == IntMat2::identity() || m == -IntMat2::identity() || std::llabs(tr) < 2) {
        out.kind = NtType::Kind::Periodic;
        out.order = *finite_order(m);
        return out;
    }
    if (std::llabs(tr) == 2) {
        out.kind = NtType::Kind::Reducible;
        out.sign = tr > 0 ? +1 : -1;
        out.twist = parabolic_twist(out.sign > 0 ? m : -m);
        return out;
    }
    out.kind = NtType::Kind::Anosov;
    double t = static_cast<double>(std::llabs(tr));
    out.lambda = (t + std::sqrt(t * t - 4.0)) / 2.0;
    return out;
}

ReversingClassInfo reversing_class_info(const IntMat2& m) {
    if (m.det() != -1)
        throw std::domain_error("reversing_class_info expects det = -1");
    ReversingClassInfo info;
    info.trace = m.trace();
    info.finite_order = (info.trace == 0);
    info.content_plus =
        info.finite_order ? content3(m.a + 1, m.b, m.c, m.d + 1) : 0;
    return info;
}

QuadExt quadext(Rat p, Rat q, long long disc) { return QuadExt{p, q, disc}; }

QuadExt QuadExt::operator+(const QuadExt& o) const { return {p + o.p, q + o.q, disc}; }
QuadExt QuadExt::operator-(const QuadExt& o) const { return {p - o.p, q - o.q, disc}; }
QuadExt QuadExt::operator*(const QuadExt& o) const {
    return {p * o.p + q * o.q * Rat(disc), p * o.q + q * o.p, disc};
}
double QuadExt::to_double() const {
    return boost::rational_cast<double>(p) +
           boost::rational_cast<double>(q) * std::sqrt(static_cast<double>(disc));
}

AnosovEigen anosov_eigen(const IntMat2& m) {
    NtType t = nt_type(m);
    if (t.kind != NtType::Kind::Anosov)
        throw std::domain_error("anosov_eigen: matrix is not Anosov");
    long long tr = std::llabs(m.trace());
    long long disc = tr * tr - 4;
    AnosovEigen e;
    e.disc = disc;
    e.lambda = quadext(Rat(tr, 2), Rat(1, 2), disc);
    e.lambda_inv = quadext(Rat(tr, 2), Rat(-1, 2), disc);
    // Work with the positive-trace representative; its eigenvectors are
    // also eigenvectors of m (for the eigenvalues +-lambda).
    IntMat2 n = m.trace() > 0 ? m : -m;
    auto from_int = [disc](long long v) { return quadext(Rat(v), Rat(0), disc); };
    if (n.b != 0) {
        e.v1 = {from_int(n.b), e.lambda - from_int(n.a)};
        e.v2 = {from_int(n.b), e.lambda_inv - from_int(n.a)};
    } else if (n.c != 0) {
        e.v1 = {e.lambda - from_int(n.d), from_int(n.c)};
        e.v2 = {e.lambda_inv - from_int(n.d), from_int(n.c)};
    } else {
        throw std::domain_error("anosov_eigen: diagonal matrix cannot be Anosov");
    }
    return e;
}

namespace {

constexpr IntMat2 kR{1, 1, 0, 1};
constexpr IntMat2 kL{1, 0, 1, 1};

bool nonneg(const IntMat2& m) { return m.a >= 0 && m.b >= 0 && m.c >= 0 && m.d >= 0; }

long long abs_sum(const IntMat2& m) {
    return std::llabs(m.a) + std::llabs(m.b) + std::llabs(m.c) + std::llabs(m.d);
}

// Conjugate m toward the totally non-negative cone: greedy descent on the
// entry-abs sum over conjugations by R, L and their inverses, with a BFS
// fallback (iterative deepening on the entry cap) for plateaus.
IntMat2 reduce_to_nonneg(IntMat2 m) {
    const IntMat2 gens[4] = {kR, kR.inverse(), kL, kL.inverse()};
    for (int step = 0; step < 4096 && !nonneg(m); ++step) {
        IntMat2 best = m;
        long long best_sum = abs_sum(m);
        for (const auto& g : gens) {
            IntMat2 cand = g.inverse() * m * g;
            if (abs_sum(cand) < best_sum) { best_sum = abs_sum(cand); best = cand; }
        }
        if (best == m) break;
        m = best;
    }
    if (nonneg(m)) return m;

    for (long long cap = std::max<long long>(8, 2 * m.max_abs());; cap *= 2) {
        std::unordered_set<IntMat2, IntMat2Hash> seen;
        std::queue<IntMat2> queue;
        queue.push(m);
        seen.insert(m);
        while (!queue.empty()) {
            IntMat2 cur = queue.front();
            queue.pop();
            if (nonneg(cur)) return cur;
            for (const auto& g : gens) {
                IntMat2 next = g.inverse() * cur * g;
                if (next.max_abs() > cap) continue;
                if (seen.insert(next).second) queue.push(next);
            }
        }
        if (cap > (1ll << 40))
            throw std::runtime_error("rl reduction failed to reach the non-negative cone");
    }
}

std::vector<std::pair<int, int>> min_rotation(std::vector<std::pair<int, int>> runs) {
    std::vector<std::pair<int, int>> best = runs;
    for (size_t i = 1; i < runs.size(); ++i) {
        std::rotate(runs.begin(), runs.begin() + 1, runs.end());
        if (runs < best) best = runs;
    }
    return best;
}

} // namespace

RlWord rl_canonical_form(const IntMat2& m) {
    if (m.det() != 1 || std::llabs(m.trace()) <= 2)
        throw std::domain_error("no RL factorization");
    RlWord word;
    word.negated = m.trace() < 0;
    IntMat2 cur = reduce_to_nonneg(word.negated ? -m : m);

    // Peel letters from the left: exactly one of R^-1 cur, L^-1 cur stays
    // in the non-negative cone until the identity is reached.
    std::vector<char> letters;
    while (cur != IntMat2::identity()) {
        if (cur.a >= cur.c && cur.b >= cur.d) {
            letters.push_back('R');
            cur = kR.inverse() * cur;
        } else {
            letters.push_back('L');
            cur = kL.inverse() * cur;
        }
        if (letters.size() > 4096)
            throw std::runtime_error("rl peeling failed to terminate");
    }

    // Group the cyclic letter string into (R-run, L-run) pairs, starting
    // at a cyclic run boundary (an R preceded by an L).
    size_t n = letters.size();
    size_t start = 0;
    while (!(letters[start] == 'R' && letters[(start + n - 1) % n] == 'L')) ++start;
    std::vector<std::pair<int, int>> runs;
    size_t i = 0;
    while (i < n) {
        int r = 0, l = 0;
        while (i < n && letters[(start + i) % n] == 'R') { ++r; ++i; }
        while (i < n && letters[(start + i) % n] == 'L') { ++l; ++i; }
        runs.emplace_back(r, l);
    }
    word.runs = min_rotation(std::move(runs));
    return word;
}

RlWord rl_swap_letters(const RlWord& w) {
    // R^r L^l ... -> L^r R^l ...; rotate back into (R,L) pair form.
    RlWord out;
    out.negated = w.negated;
    size_t k = w.runs.size();
    std::vector<std::pair<int, int>> runs(k);
    for (size_t i = 0; i < k; ++i)
        runs[i] = {w.runs[i].second, w.runs[(i + 1) % k].first};
    out.runs = min_rotation(std::move(runs));
    return out;
}

RlWord rl_reverse_swap(const RlWord& w) {
    RlWord out;
    out.negated = w.negated;
    std::vector<std::pair<int, int>> runs(w.runs.rbegin(), w.runs.rend());
    for (auto& run : runs) std::swap(run.first, run.second);
    out.runs = min_rotation(std::move(runs));
    return out;
}

std::string RlWord::to_string() const {
    std::ostringstream os;
    if (negated) os << "-";
    for (const auto& [r, l] : runs) os << "R" << r << "L" << l;
    return os.str();
}

} // namespace tn3
