#ifndef TN3_INVOLUTIONS_HPP
#define TN3_INVOLUTIONS_HPP

#include <string>
#include <variant>

#include "tn3/affine.hpp"
#include "tn3/surfaces.hpp"

namespace tn3 {

/// Fixed-point-free involution of a closed surface. Torus involutions are
/// stored affinely with exact rationals; the sphere and Klein bottle have
/// a single conjugacy class each and are stored as canonical tags with an
/// optional declared conjugator class. Genus >= 2 data is opaque.
struct InvolutionRep {
    struct SphereAntipodal { bool operator==(const SphereAntipodal&) const = default; };
    struct KleinSigmaK { bool operator==(const KleinSigmaK&) const = default; };
    struct DeclaredGenus {
        int genus = 2;
        std::string label;
        bool operator==(const DeclaredGenus&) const = default;
    };

    Surface surface;
    std::variant<AffineTorusMap, SphereAntipodal, KleinSigmaK, DeclaredGenus> data;

    static InvolutionRep torus(const AffineTorusMap& f) {
        return {Surface::torus(), f};
    }
    static InvolutionRep antipodal() {
        return {Surface::sphere(), SphereAntipodal{}};
    }
    static InvolutionRep sigma_k() {
        return {Surface::klein_bottle(), KleinSigmaK{}};
    }
    static InvolutionRep declared(int g, std::string label) {
        return {Surface::genus_g(g), DeclaredGenus{g, std::move(label)}};
    }

    bool is_torus_affine() const {
        return std::holds_alternative<AffineTorusMap>(data);
    }
    const AffineTorusMap& affine() const { return std::get<AffineTorusMap>(data); }

    bool operator==(const InvolutionRep&) const = default;
    std::string name() const;
};

enum class InvolutionClass { Antipodal_S2, SigmaPlus_T2, SigmaMinus_T2, SigmaK_K };

std::string to_string(InvolutionClass c);

struct NormalizedInvolution {
    InvolutionClass cls;
    /// Affine conjugator realizing sigma = h sigma_0 h^{-1}; identity for
    /// the canonical non-torus tags.
    AffineTorusMap conjugator;
};

/// Classify a fixed-point-free involution up to conjugacy and produce a
/// conjugator from the canonical model. Throws std::domain_error if the
/// input fails involution_check.
NormalizedInvolution normalize_involution(const InvolutionRep& sigma);

/// Linear part of sigma- . h sigma- h^{-1} for h in SL(2,Z):
/// (h11 h22 + h12 h21, -2 h11 h12; -2 h21 h22, h11 h22 + h12 h21).
/// Throws std::domain_error when det(h) != 1. The result has det 1.
IntMat2 klein_pair_matrix(const IntMat2& h);

} // namespace tn3

#endif
