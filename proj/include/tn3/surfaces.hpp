#ifndef TN3_SURFACES_HPP
#define TN3_SURFACES_HPP

#include <string>
#include <variant>

#include "tn3/intmat.hpp"

namespace tn3 {

/// Closed surface; the low-genus cases carry dedicated tags.
struct Surface {
    enum class Tag { Sphere, RP2, Torus, KleinBottle, OrientableGenus };
    Tag tag = Tag::Torus;
    int genus = 0;  // only for OrientableGenus, >= 2

    static Surface sphere() { return {Tag::Sphere, 0}; }
    static Surface rp2() { return {Tag::RP2, 0}; }
    static Surface torus() { return {Tag::Torus, 1}; }
    static Surface klein_bottle() { return {Tag::KleinBottle, 0}; }
    static Surface genus_g(int g);

    bool orientable() const {
        return tag == Tag::Sphere || tag == Tag::Torus || tag == Tag::OrientableGenus;
    }
    std::string name() const;
    bool operator==(const Surface&) const = default;
    auto operator<=>(const Surface&) const = default;
};

enum class SphereClass { Identity, Antipodal };
enum class Rp2Class { Identity };
/// MCG of the Klein bottle is Z2 x Z2, generated by the Dehn twist and
/// the Y-homeomorphism.
enum class KleinClass { Identity, DehnTwist, Y, DehnTwistY };
enum class DeclaredNt { Periodic, Reducible, PseudoAnosov };

std::string to_string(SphereClass c);
std::string to_string(KleinClass c);
std::string to_string(DeclaredNt c);

/// Mapping class of a surface; the torus case carries the full GL(2,Z)
/// matrix, genus >= 2 carries only a declared Nielsen-Thurston label.
struct MappingClassRep {
    Surface surface;
    std::variant<SphereClass, Rp2Class, IntMat2, KleinClass, DeclaredNt> data;

    static MappingClassRep torus(const IntMat2& m) {
        return {Surface::torus(), m};
    }
    static MappingClassRep sphere(SphereClass c) { return {Surface::sphere(), c}; }
    static MappingClassRep rp2() { return {Surface::rp2(), Rp2Class::Identity}; }
    static MappingClassRep klein(KleinClass c) {
        return {Surface::klein_bottle(), c};
    }
    static MappingClassRep genus(int g, DeclaredNt label) {
        return {Surface::genus_g(g), label};
    }

    bool operator==(const MappingClassRep&) const = default;
    std::string name() const;
};

} // namespace tn3

#endif
