#ifndef TN3_DESCRIPTOR_HPP
#define TN3_DESCRIPTOR_HPP

#include <string>
#include <variant>
#include <vector>

#include "tn3/involutions.hpp"
#include "tn3/surfaces.hpp"

namespace tn3 {

enum class BundleKind { PointDisk3, SolidTorus, SolidKlein };

std::string to_string(BundleKind b);

/// Toric type: mapping torus of a closed surface; no singular foils.
struct ToricData {
    Surface foil;
    MappingClassRep monodromy;
    bool operator==(const ToricData&) const = default;
};

/// Klein-bottled type: two SR-foils; the descriptor carries the two
/// fixed-point-free involutions acting on a DR-foil.
struct KleinBottledData {
    Surface foil;
    InvolutionRep sigma1, sigma2;
    bool operator==(const KleinBottledData&) const = default;
};

/// Spherical type: two S-foils; both linear disk bundles have the same
/// kind. The solid-torus case carries the attaching matrix as rows
/// (q p; s t).
struct SphericalData {
    BundleKind bundle = BundleKind::PointDisk3;
    IntMat2 attach = IntMat2::identity();
    bool operator==(const SphericalData&) const = default;
};

/// Real-projective type: one S-foil and one SR-foil; the descriptor is a
/// disk bundle plus the boundary fixed-point-free involution.
struct RealProjectiveData {
    BundleKind bundle = BundleKind::PointDisk3;
    InvolutionRep involution;
    bool operator==(const RealProjectiveData&) const = default;
};

struct TransnormalDescriptor {
    std::variant<ToricData, KleinBottledData, SphericalData, RealProjectiveData> data;

    static TransnormalDescriptor toric(Surface foil, MappingClassRep m) {
        return {ToricData{foil, std::move(m)}};
    }
    static TransnormalDescriptor klein_bottled(Surface foil, InvolutionRep s1,
                                               InvolutionRep s2) {
        return {KleinBottledData{foil, std::move(s1), std::move(s2)}};
    }
    static TransnormalDescriptor spherical(BundleKind b,
                                           IntMat2 attach = IntMat2::identity()) {
        return {SphericalData{b, attach}};
    }
    static TransnormalDescriptor real_projective(BundleKind b, InvolutionRep inv) {
        return {RealProjectiveData{b, std::move(inv)}};
    }

    bool operator==(const TransnormalDescriptor&) const = default;
    std::string type_name() const;
};

/// Structural validation; empty result means valid.
std::vector<std::string> validate_descriptor(const TransnormalDescriptor& d);

/// Boundary surface of a disk bundle kind.
Surface bundle_boundary(BundleKind b);

} // namespace tn3

#endif
