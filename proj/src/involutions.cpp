#include "tn3/involutions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tn3 {

Surface Surface::genus_g(int g) {
    if (g < 2) throw std::domain_error("OrientableGenus requires g >= 2");
    return {Tag::OrientableGenus, g};
}

std::string Surface::name() const {
    switch (tag) {
        case Tag::Sphere: return "2-sphere";
        case Tag::RP2: return "RP^2";
        case Tag::Torus: return "Torus";
        case Tag::KleinBottle: return "Klein bottle";
        case Tag::OrientableGenus: {
            std::ostringstream os;
            os << "genus-" << genus << " surface";
            return os.str();
        }
    }
    return "?";
}

std::string to_string(SphereClass c) {
    return c == SphereClass::Identity ? "identity" : "antipodal";
}
std::string to_string(KleinClass c) {
    switch (c) {
        case KleinClass::Identity: return "identity";
        case KleinClass::DehnTwist: return "dehn_twist";
        case KleinClass::Y: return "y";
        case KleinClass::DehnTwistY: return "dehn_twist_y";
    }
    return "?";
}
std::string to_string(DeclaredNt c) {
    switch (c) {
        case DeclaredNt::Periodic: return "periodic";
        case DeclaredNt::Reducible: return "reducible";
        case DeclaredNt::PseudoAnosov: return "pseudo_anosov";
    }
    return "?";
}

std::string MappingClassRep::name() const {
    if (auto* s = std::get_if<SphereClass>(&data)) return to_string(*s);
    if (std::get_if<Rp2Class>(&data)) return "identity";
    if (auto* m = std::get_if<IntMat2>(&data)) return m->to_string();
    if (auto* k = std::get_if<KleinClass>(&data)) return to_string(*k);
    return to_string(std::get<DeclaredNt>(data));
}

std::string InvolutionRep::name() const {
    if (auto* f = std::get_if<AffineTorusMap>(&data)) return f->to_string();
    if (std::get_if<SphereAntipodal>(&data)) return "antipodal";
    if (std::get_if<KleinSigmaK>(&data)) return "sigma_K";
    return std::get<DeclaredGenus>(data).label;
}

std::string to_string(InvolutionClass c) {
    switch (c) {
        case InvolutionClass::Antipodal_S2: return "antipodal";
        case InvolutionClass::SigmaPlus_T2: return "sigma+";
        case InvolutionClass::SigmaMinus_T2: return "sigma-";
        case InvolutionClass::SigmaK_K: return "sigma_K";
    }
    return "?";
}

namespace {

// Primitive integer kernel vector of a rank-deficient integer matrix M
// (solves M v = 0, v != 0).
std::pair<long long, long long> primitive_kernel(const IntMat2& M) {
    long long v1, v2;
    if (M.a != 0 || M.b != 0) { v1 = -M.b; v2 = M.a; }
    else if (M.c != 0 || M.d != 0) { v1 = -M.d; v2 = M.c; }
    else return {1, 0};  // M = 0: any direction
    long long g = std::gcd(std::llabs(v1), std::llabs(v2));
    return {v1 / g, v2 / g};
}

NormalizedInvolution normalize_torus(const AffineTorusMap& f) {
    auto chk = involution_check(f);
    if (!chk.is_involution || !chk.fixed_point_free)
        throw std::domain_error("not a fixed-point-free involution");

    NormalizedInvolution out;
    if (f.linear.det() == 1) {
        // Orientation-preserving: forcibly a half-lattice translation
        // (I, b) with 2b = 0, b != 0. Conjugate sigma+ by a linear H whose
        // first column is congruent to 2b mod 2.
        out.cls = InvolutionClass::SigmaPlus_T2;
        long long p = f.tx == Rat(1, 2) ? 1 : 0;
        long long q = f.ty == Rat(1, 2) ? 1 : 0;
        IntMat2 H;
        if (p == 1 && q == 0) H = IntMat2::identity();
        else if (p == 0 && q == 1) H = {0, -1, 1, 0};
        else H = {1, 0, 1, 1};  // b = (1/2, 1/2)
        out.conjugator = AffineTorusMap{H, Rat(0), Rat(0)};
        return out;
    }

    // Orientation-reversing: linear part is an involution with +1 and -1
    // eigenvectors v, w forming a unimodular basis. In that basis the map
    // is (diag(1,-1), (1/2, beta2)); a translation conjugation kills beta2.
    out.cls = InvolutionClass::SigmaMinus_T2;
    const IntMat2& A = f.linear;
    auto [v1, v2] = primitive_kernel({A.a - 1, A.b, A.c, A.d - 1});
    auto [w1, w2] = primitive_kernel({A.a + 1, A.b, A.c, A.d + 1});
    IntMat2 H{v1, w1, v2, w2};
    if (H.det() == -1) { H.b = -H.b; H.d = -H.d; }
    if (H.det() != 1)
        throw std::domain_error("involution linear part has no unimodular eigenbasis");
    IntMat2 Hinv = H.inverse();
    auto [b1, b2] = apply(Hinv, f.tx, f.ty);
    // b1 = 1/2 mod 1 is forced by fixed-point-freeness.
    Rat gamma2 = mod1(b2) / 2;
    auto [c1, c2] = apply(H, Rat(0), gamma2);
    out.conjugator = AffineTorusMap{H, c1, c2};
    return out;
}

} // namespace

NormalizedInvolution normalize_involution(const InvolutionRep& sigma) {
    if (auto* f = std::get_if<AffineTorusMap>(&sigma.data)) return normalize_torus(*f);
    if (std::get_if<InvolutionRep::SphereAntipodal>(&sigma.data))
        return {InvolutionClass::Antipodal_S2, AffineTorusMap::identity()};
    if (std::get_if<InvolutionRep::KleinSigmaK>(&sigma.data))
        return {InvolutionClass::SigmaK_K, AffineTorusMap::identity()};
    throw std::domain_error("no normal form for declared genus >= 2 involutions");
}

IntMat2 klein_pair_matrix(const IntMat2& h) {
    if (h.det() != 1) throw std::domain_error("klein_pair_matrix requires det(h) = 1");
    long long s = h.a * h.d + h.b * h.c;
    IntMat2 A{s, -2 * h.a * h.b, -2 * h.c * h.d, s};
    return A;
}

} // namespace tn3
