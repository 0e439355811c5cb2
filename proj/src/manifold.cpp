#include "tn3/manifold.hpp"

#include <sstream>

namespace tn3 {

std::string sphere_class_token(SphereClass c) {
    return c == SphereClass::Identity ? "sphere:identity" : "sphere:antipodal";
}

std::string ManifoldId::label() const {
    switch (tag) {
        case Tag::S3: return "S^3";
        case Tag::S2xS1: return "S^2 x S^1";
        case Tag::S1xtwS2: return "S^1 x_tw S^2";
        case Tag::RP3: return "RP^3";
        case Tag::RP2xS1: return "S^1 x RP^2";
        case Tag::RP3connRP3: return "RP^3 # RP^3";
        case Tag::Lens: return lens.to_string();
        case Tag::Klein: return klein.to_string();
        case Tag::MappingTorus: {
            std::ostringstream os;
            os << "MT(" << foil.name() << "; " << class_token << ")";
            return os.str();
        }
        case Tag::KleinGlue: {
            std::ostringstream os;
            os << "KG(" << foil.name() << "; " << class_token << ")";
            return os.str();
        }
    }
    return "?";
}

ManifoldId resolve_coincidences(const ManifoldId& id) {
    using Tag = ManifoldId::Tag;
    switch (id.tag) {
        case Tag::Lens: {
            LensParams l = lens_canonical(id.lens.p, id.lens.q);
            if (l == LensParams{1, 0}) return ManifoldId::special(Tag::S3);
            if (l == LensParams{0, 1}) return ManifoldId::special(Tag::S2xS1);
            if (l == LensParams{2, 1}) return ManifoldId::special(Tag::RP3);
            return ManifoldId::lens_space(l);
        }
        case Tag::Klein: {
            KleinParams k = klein_canonical(id.klein.p, id.klein.q);
            if (k == KleinParams{1, 0}) return ManifoldId::special(Tag::S2xS1);
            if (k == KleinParams{0, 1}) return ManifoldId::special(Tag::RP3connRP3);
            return ManifoldId::klein_space(k);
        }
        case Tag::MappingTorus: {
            if (id.foil == Surface::sphere()) {
                if (id.class_token == sphere_class_token(SphereClass::Identity))
                    return ManifoldId::special(Tag::S2xS1);
                return ManifoldId::special(Tag::S1xtwS2);
            }
            if (id.foil == Surface::rp2())
                return ManifoldId::special(Tag::RP2xS1);
            return id;
        }
        case Tag::KleinGlue: {
            if (id.foil == Surface::sphere())
                return ManifoldId::special(Tag::RP3connRP3);
            return id;
        }
        default:
            return id;
    }
}

std::vector<std::string> special_aliases(ManifoldId::Tag tag) {
    using Tag = ManifoldId::Tag;
    switch (tag) {
        case Tag::S3: return {"L(1,0)"};
        case Tag::S2xS1: return {"L(0,1)", "M(1,0)", "MT(id_S^2)"};
        case Tag::S1xtwS2: return {"MT(sigma_S^2)"};
        case Tag::RP3: return {"L(2,1)"};
        case Tag::RP2xS1: return {"MT(id_RP^2)"};
        case Tag::RP3connRP3: return {"M(0,1)", "KG(sigma_S^2; sigma_S^2)"};
        default: return {};
    }
}

} // namespace tn3
