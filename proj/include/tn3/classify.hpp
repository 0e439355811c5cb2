#ifndef TN3_CLASSIFY_HPP
#define TN3_CLASSIFY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tn3/descriptor.hpp"
#include "tn3/manifold.hpp"

namespace tn3 {

/// The six geometries realized by CPC systems on orientable compact
/// 3-manifolds, plus the two non-assignments.
enum class GeometryTag { S3, S2xR, E3, Nil, Sol, H2xR, NoneCPC, UnspecifiedByPaper };

std::string to_string(GeometryTag g);

struct CpcStatus {
    bool admissible = false;
    GeometryTag geometry = GeometryTag::NoneCPC;
    bool operator==(const CpcStatus&) const = default;
};

enum class Cohom1 { SO3, T2, None, Undecided };

std::string to_string(Cohom1 c);

/// Deck transformation acting on the essential cover, tagged with its
/// induced action on the foil space.
struct DeckAction {
    enum class Kind { FoilPreserving, FoilTranslation, FoilReflection };
    Kind kind = Kind::FoilPreserving;
    double shift = 0.0;   // FoilTranslation: > 0
    double center = 0.0;  // FoilReflection
    std::string surface_map;

    static DeckAction preserving(std::string map) {
        return {Kind::FoilPreserving, 0.0, 0.0, std::move(map)};
    }
    static DeckAction translation(double t0, std::string map) {
        return {Kind::FoilTranslation, t0, 0.0, std::move(map)};
    }
    static DeckAction reflection(double center, std::string map) {
        return {Kind::FoilReflection, 0.0, center, std::move(map)};
    }

    bool operator==(const DeckAction&) const = default;
    std::string describe() const;
};

enum class SevenType {
    Cylindrical, Planar, TwistedCylindrical, Toric, Spherical, RealProjective,
    KleinBottled
};

std::string to_string(SevenType t);

/// Cover that is not pinned to a single manifold id: the cylinder over a
/// foil, or the lens-space double cover of a Klein space (parameters of
/// the covered space are known, those of the cover are not computed).
struct SymbolicCover {
    enum class Kind { Cylinder, LensDoubleCover };
    Kind kind = Kind::Cylinder;
    Surface foil;        // Cylinder
    KleinParams base{};  // LensDoubleCover
    bool operator==(const SymbolicCover&) const = default;
    std::string describe() const;
};

struct EssentialCover {
    std::variant<ManifoldId, SymbolicCover> cover;
    SevenType cover_type = SevenType::Cylindrical;
    std::vector<DeckAction> deck_generators;
    bool operator==(const EssentialCover&) const = default;
};

struct ClassificationReport {
    ManifoldId ambient;
    bool orientable = false;
    std::string canonical_invariant;
    CpcStatus cpc;
    Cohom1 cohom1 = Cohom1::Undecided;
    EssentialCover cover;
    bool operator==(const ClassificationReport&) const = default;
};

/// Three-valued equivalence answer.
struct EquivResult {
    enum class Value { False, True, Undecided };
    Value value = Value::False;
    std::string reason;  // set for Undecided

    static EquivResult yes() { return {Value::True, {}}; }
    static EquivResult no() { return {Value::False, {}}; }
    static EquivResult undecided(std::string why) {
        return {Value::Undecided, std::move(why)};
    }
    bool is_true() const { return value == Value::True; }
    bool is_false() const { return value == Value::False; }
    bool is_undecided() const { return value == Value::Undecided; }
};

struct EquivOptions {
    int kb_search_bound = 5;  // entry bound on the common linear part
};

/// Decides equivalence of two valid descriptors. Throws std::domain_error
/// if either descriptor fails validation.
EquivResult equivalent(const TransnormalDescriptor& d1,
                       const TransnormalDescriptor& d2,
                       const EquivOptions& opts = {});

ManifoldId ambient_manifold(const TransnormalDescriptor& d);
bool orientable_ambient(const TransnormalDescriptor& d);
CpcStatus cpc_status(const TransnormalDescriptor& d);
Cohom1 cohomogeneity_one(const TransnormalDescriptor& d);
EssentialCover essential_cover(const TransnormalDescriptor& d);
std::string canonical_invariant(const TransnormalDescriptor& d);
ClassificationReport classify(const TransnormalDescriptor& d);

struct Decomposition {
    std::vector<DeckAction> g0_generators;
    std::vector<DeckAction> quotient_generators;
};

/// Splits deck generators into the foil-preserving normal part and the
/// induced action on the foil space, composing reflection pairs into the
/// derived translation. Throws std::invalid_argument on inconsistent
/// action data (non-finite center, non-positive shift).
Decomposition decompose_cover(const std::vector<DeckAction>& generators);

} // namespace tn3

#endif
