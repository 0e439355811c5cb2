#include "tn3/descriptor.hpp"

#include <sstream>

namespace tn3 {

std::string to_string(BundleKind b) {
    switch (b) {
        case BundleKind::PointDisk3: return "point_disk3";
        case BundleKind::SolidTorus: return "solid_torus";
        case BundleKind::SolidKlein: return "solid_klein";
    }
    return "?";
}

Surface bundle_boundary(BundleKind b) {
    switch (b) {
        case BundleKind::PointDisk3: return Surface::sphere();
        case BundleKind::SolidTorus: return Surface::torus();
        case BundleKind::SolidKlein: return Surface::klein_bottle();
    }
    return Surface::sphere();
}

std::string TransnormalDescriptor::type_name() const {
    if (std::holds_alternative<ToricData>(data)) return "toric";
    if (std::holds_alternative<KleinBottledData>(data)) return "klein_bottled";
    if (std::holds_alternative<SphericalData>(data)) return "spherical";
    return "real_projective";
}

namespace {

void check_involution(const InvolutionRep& sigma, const Surface& foil,
                      const std::string& which, std::vector<std::string>& out) {
    if (sigma.surface != foil) {
        out.push_back(which + " lives on " + sigma.surface.name() +
                      ", not on the declared foil " + foil.name());
        return;
    }
    if (sigma.is_torus_affine()) {
        auto chk = involution_check(sigma.affine());
        if (!chk.is_involution) out.push_back(which + " is not an involution");
        else if (!chk.fixed_point_free) out.push_back(which + " has fixed points");
    }
}

} // namespace

std::vector<std::string> validate_descriptor(const TransnormalDescriptor& d) {
    std::vector<std::string> out;
    if (const auto* t = std::get_if<ToricData>(&d.data)) {
        if (t->monodromy.surface != t->foil)
            out.push_back("monodromy surface does not match the foil");
        if (const auto* m = std::get_if<IntMat2>(&t->monodromy.data)) {
            if (!m->unimodular()) out.push_back("monodromy not unimodular");
        }
        return out;
    }
    if (const auto* k = std::get_if<KleinBottledData>(&d.data)) {
        if (k->foil == Surface::rp2()) {
            out.push_back("RP^2 admits no fixed-point-free involution");
            return out;
        }
        check_involution(k->sigma1, k->foil, "sigma1", out);
        check_involution(k->sigma2, k->foil, "sigma2", out);
        return out;
    }
    if (const auto* s = std::get_if<SphericalData>(&d.data)) {
        if (s->bundle == BundleKind::SolidTorus && !s->attach.unimodular())
            out.push_back("attach not unimodular");
        return out;
    }
    const auto& r = std::get<RealProjectiveData>(d.data);
    check_involution(r.involution, bundle_boundary(r.bundle), "boundary involution", out);
    return out;
}

} // namespace tn3
