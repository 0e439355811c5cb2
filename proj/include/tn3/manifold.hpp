#ifndef TN3_MANIFOLD_HPP
#define TN3_MANIFOLD_HPP

#include <string>
#include <variant>
#include <vector>

#include "tn3/lens.hpp"
#include "tn3/surfaces.hpp"

namespace tn3 {

/// Canonical identification of the ambient 3-manifold. Parameter families
/// landing on a special manifold resolve to the leftmost special tag.
struct ManifoldId {
    enum class Tag {
        S3, S2xS1, S1xtwS2, RP3, RP2xS1, RP3connRP3,
        Lens, Klein, MappingTorus, KleinGlue
    };
    Tag tag = Tag::S3;
    LensParams lens{};
    KleinParams klein{};
    Surface foil;            // MappingTorus / KleinGlue
    std::string class_token; // canonical mapping-class / pair-class invariant

    static ManifoldId special(Tag t) { return {t, {}, {}, {}, {}}; }
    static ManifoldId lens_space(const LensParams& l) {
        return {Tag::Lens, l, {}, {}, {}};
    }
    static ManifoldId klein_space(const KleinParams& k) {
        return {Tag::Klein, {}, k, {}, {}};
    }
    static ManifoldId mapping_torus(const Surface& s, std::string token) {
        return {Tag::MappingTorus, {}, {}, s, std::move(token)};
    }
    static ManifoldId klein_glue(const Surface& s, std::string token) {
        return {Tag::KleinGlue, {}, {}, s, std::move(token)};
    }

    bool operator==(const ManifoldId&) const = default;
    std::string label() const;
};

/// Maps parameters that coincide with a special manifold to its tag:
/// L(1,0) -> S3, L(0,1) -> S2xS1, L(2,1) -> RP3, M(1,0) -> S2xS1,
/// M(0,1) -> RP3#RP3, plus the sphere/RP2 mapping-torus and Klein-glue
/// identities. Idempotent.
ManifoldId resolve_coincidences(const ManifoldId& id);

/// Known aliases of a special manifold among the parameter families
/// (e.g. S3 = L(1,0)); used for table row labels.
std::vector<std::string> special_aliases(ManifoldId::Tag tag);

/// Mapping-class tokens used inside MappingTorus ids for the sphere and
/// RP2 foils (the toric coincidence data keys on these).
std::string sphere_class_token(SphereClass c);

} // namespace tn3

#endif
