#include "tn3/conjugacy.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tn3 {

namespace {

std::string runs_string(const RlWord& w) { return w.to_string(); }

// Minimal word over the move closure: letter swap realizes conjugation by
// the det -1 swap matrix, reverse+swap realizes inversion.
std::string hyperbolic_token(const IntMat2& m, ConjGroup group, bool allow_inverse) {
    RlWord base = rl_canonical_form(m);
    std::set<std::string> seen{runs_string(base)};
    std::vector<RlWord> frontier{base};
    while (!frontier.empty()) {
        RlWord cur = frontier.back();
        frontier.pop_back();
        std::vector<RlWord> next;
        if (group == ConjGroup::GL) next.push_back(rl_swap_letters(cur));
        if (allow_inverse) next.push_back(rl_reverse_swap(cur));
        for (auto& w : next)
            if (seen.insert(runs_string(w)).second) frontier.push_back(w);
    }
    std::ostringstream os;
    os << (m.trace() > 0 ? '+' : '-') << *seen.begin();
    return os.str();
}

std::string reversing_token(const IntMat2& m, bool allow_inverse) {
    // det -1: SL- and GL-conjugacy coincide (m lies in its own
    // centralizer and has det -1, so conjugator determinants can be
    // flipped at will).
    ReversingClassInfo info = reversing_class_info(m);
    std::ostringstream os;
    if (info.finite_order) {
        os << "rev:invol:c" << info.content_plus;
        return os.str();
    }
    // trace != 0: y = h m h^{-1} iff traces agree and y^2 = h m^2 h^{-1}
    // (m^2 = tr(m) m + I, so any conjugator of the squares conjugates the
    // originals). m^2 is hyperbolic with trace tr^2 + 2 > 2.
    IntMat2 rep = (allow_inverse && info.trace < 0) ? m.inverse() : m;
    long long tr = rep.trace();
    os << "rev:t" << (allow_inverse ? std::llabs(tr) : tr) << ":"
       << hyperbolic_token(rep * rep, ConjGroup::GL, false);
    return os.str();
}

} // namespace

std::string conjugacy_token(const IntMat2& m, ConjGroup group, bool allow_inverse) {
    if (!m.unimodular())
        throw std::domain_error("conjugacy requires unimodular matrices");
    if (m.det() == -1) return reversing_token(m, allow_inverse);

    long long tr = m.trace();
    std::ostringstream os;
    if (m == IntMat2::identity()) return "center:+I";
    if (m == -IntMat2::identity()) return "center:-I";
    if (std::llabs(tr) < 2) {
        // Elliptic: trace plus rotation direction; the direction (sign of
        // the lower-left entry, never zero here) flips under both the
        // det -1 conjugation and inversion.
        os << "ell:t" << tr;
        if (group == ConjGroup::SL && !allow_inverse)
            os << ":c" << (m.c > 0 ? '+' : '-');
        return os.str();
    }
    if (std::llabs(tr) == 2) {
        NtType t = nt_type(m);
        long long n = t.twist;
        bool merge_sign = (group == ConjGroup::GL) || allow_inverse;
        os << "par:s" << (t.sign > 0 ? '+' : '-') << ":n"
           << (merge_sign ? std::llabs(n) : n);
        return os.str();
    }
    return std::string("hyp:") + hyperbolic_token(m, group, allow_inverse);
}

bool conj_equivalent(const IntMat2& x, const IntMat2& y, ConjGroup group,
                     bool allow_inverse) {
    if (!x.unimodular() || !y.unimodular())
        throw std::domain_error("conjugacy requires unimodular matrices");
    if (x.det() != y.det()) return false;
    return conjugacy_token(x, group, allow_inverse) ==
           conjugacy_token(y, group, allow_inverse);
}

std::vector<IntMat2> unimodular_range(int bound, ConjGroup group) {
    std::vector<IntMat2> out;
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b)
            for (int c = -bound; c <= bound; ++c)
                for (int d = -bound; d <= bound; ++d) {
                    long long det = static_cast<long long>(a) * d -
                                    static_cast<long long>(b) * c;
                    if (det == 1 || (det == -1 && group == ConjGroup::GL))
                        out.push_back({a, b, c, d});
                }
    return out;
}

bool brute_conjugacy_oracle(const IntMat2& x, const IntMat2& y, int bound,
                            bool allow_inverse, ConjGroup group) {
    IntMat2 xi = allow_inverse ? x.inverse() : IntMat2::identity();
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b)
            for (int c = -bound; c <= bound; ++c)
                for (int d = -bound; d <= bound; ++d) {
                    long long det = static_cast<long long>(a) * d -
                                    static_cast<long long>(b) * c;
                    if (det != 1 && !(det == -1 && group == ConjGroup::GL)) continue;
                    IntMat2 h{a, b, c, d};
                    IntMat2 hinv = h.inverse();
                    if (h * x * hinv == y) return true;
                    if (allow_inverse && h * xi * hinv == y) return true;
                }
    return false;
}

} // namespace tn3
