#include "tn3/affine.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tn3 {

Rat parse_rat(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            size_t used = 0;
            long long n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Rat(n);
        }
        size_t used = 0;
        long long num = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(text);
        long long den = std::stoll(text.substr(slash + 1), &used);
        if (used != text.size() - slash - 1 || den == 0)
            throw std::invalid_argument(text);
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

std::pair<Rat, Rat> AffineTorusMap::apply_point(const Rat& x, const Rat& y) const {
    auto [lx, ly] = apply(linear, x, y);
    return {mod1(lx + tx), mod1(ly + ty)};
}

AffineTorusMap AffineTorusMap::inverse() const {
    IntMat2 li = linear.inverse();
    auto [ix, iy] = apply(li, tx, ty);
    return {li, -ix, -iy};
}

std::string AffineTorusMap::to_string() const {
    std::ostringstream os;
    os << linear.to_string() << "+(" << rat_to_string(tx) << ","
       << rat_to_string(ty) << ")";
    return os.str();
}

AffineTorusMap affine_compose(const AffineTorusMap& f, const AffineTorusMap& g) {
    auto [gx, gy] = apply(f.linear, g.tx, g.ty);
    return {f.linear * g.linear, gx + f.tx, gy + f.ty};
}

AffineTorusMap affine_conjugate(const AffineTorusMap& h, const AffineTorusMap& f) {
    return affine_compose(h, affine_compose(f, h.inverse()));
}

bool torus_congruence_solvable(const IntMat2& M, const Rat& rhs_x, const Rat& rhs_y) {
    long long det = M.det();
    if (det != 0) return true;  // M surjective over R^2
    bool zero = M.a == 0 && M.b == 0 && M.c == 0 && M.d == 0;
    if (zero) return is_integer(rhs_x) && is_integer(rhs_y);
    // rank 1: image is the line spanned by the columns; solvable iff the
    // primitive left-kernel covector n satisfies n.rhs in Z (n.k sweeps
    // all of Z over integer k since n is primitive).
    long long n1, n2;
    if (M.a != 0 || M.c != 0) { n1 = M.c; n2 = -M.a; }
    else { n1 = M.d; n2 = -M.b; }
    long long g = std::gcd(std::llabs(n1), std::llabs(n2));
    n1 /= g; n2 /= g;
    Rat dot = Rat(n1) * rhs_x + Rat(n2) * rhs_y;
    return is_integer(dot);
}

InvolutionCheck involution_check(const AffineTorusMap& f) {
    InvolutionCheck out{false, false};
    AffineTorusMap sq = affine_compose(f, f);
    out.is_involution = (sq == AffineTorusMap::identity());
    IntMat2 M{f.linear.a - 1, f.linear.b, f.linear.c, f.linear.d - 1};
    bool has_fixed = torus_congruence_solvable(M, -f.tx, -f.ty);
    out.fixed_point_free = !has_fixed;
    return out;
}

} // namespace tn3
