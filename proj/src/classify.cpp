#include "tn3/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tn3/conjugacy.hpp"

namespace tn3 {

std::string to_string(GeometryTag g) {
    switch (g) {
        case GeometryTag::S3: return "S^3";
        case GeometryTag::S2xR: return "S^2 x R";
        case GeometryTag::E3: return "R^3";
        case GeometryTag::Nil: return "Nil";
        case GeometryTag::Sol: return "Sol";
        case GeometryTag::H2xR: return "H^2 x R";
        case GeometryTag::NoneCPC: return "none";
        case GeometryTag::UnspecifiedByPaper: return "unspecified";
    }
    return "?";
}

std::string to_string(Cohom1 c) {
    switch (c) {
        case Cohom1::SO3: return "SO(3,R)";
        case Cohom1::T2: return "S^1 x S^1";
        case Cohom1::None: return "None";
        case Cohom1::Undecided: return "Undecided";
    }
    return "?";
}

std::string to_string(SevenType t) {
    switch (t) {
        case SevenType::Cylindrical: return "cylindrical";
        case SevenType::Planar: return "planar";
        case SevenType::TwistedCylindrical: return "twisted-cylindrical";
        case SevenType::Toric: return "toric";
        case SevenType::Spherical: return "spherical";
        case SevenType::RealProjective: return "real-projective";
        case SevenType::KleinBottled: return "klein-bottled";
    }
    return "?";
}

std::string DeckAction::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::FoilPreserving: os << "foil-preserving"; break;
        case Kind::FoilTranslation: os << "foil-translation(t0=" << shift << ")"; break;
        case Kind::FoilReflection: os << "foil-reflection(center=" << center << ")"; break;
    }
    if (!surface_map.empty()) os << " via " << surface_map;
    return os.str();
}

std::string SymbolicCover::describe() const {
    if (kind == Kind::Cylinder) return "R x " + foil.name();
    return "lens-space double cover of " + base.to_string();
}

namespace {

void require_valid(const TransnormalDescriptor& d) {
    auto violations = validate_descriptor(d);
    if (!violations.empty()) {
        std::string msg = "invalid descriptor:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw std::domain_error(msg);
    }
}

// ---- toric helpers ---------------------------------------------------

std::string toric_class_token(const ToricData& t) {
    if (const auto* s = std::get_if<SphereClass>(&t.monodromy.data))
        return sphere_class_token(*s);
    if (std::get_if<Rp2Class>(&t.monodromy.data)) return "rp2:identity";
    if (const auto* m = std::get_if<IntMat2>(&t.monodromy.data))
        return conjugacy_token(*m, ConjGroup::GL, true);
    if (const auto* k = std::get_if<KleinClass>(&t.monodromy.data))
        return "klein:" + to_string(*k);
    const auto& nt = std::get<DeclaredNt>(t.monodromy.data);
    std::ostringstream os;
    os << "genus" << t.foil.genus << ":" << to_string(nt);
    return os.str();
}

bool toric_orientation_preserving(const ToricData& t) {
    if (const auto* s = std::get_if<SphereClass>(&t.monodromy.data))
        return *s == SphereClass::Identity;
    if (const auto* m = std::get_if<IntMat2>(&t.monodromy.data))
        return m->det() == 1;
    if (std::get_if<DeclaredNt>(&t.monodromy.data)) return true;  // declared classes
    return true;  // RP2 / Klein foil: no orientation to preserve
}

// A periodic representative exists in the class (torus mapping classes of
// finite order; every element of MCG(K); the antipodal and identity
// sphere classes; declared Periodic labels).
bool toric_class_periodic(const ToricData& t) {
    if (std::get_if<SphereClass>(&t.monodromy.data)) return true;
    if (std::get_if<Rp2Class>(&t.monodromy.data)) return true;
    if (std::get_if<KleinClass>(&t.monodromy.data)) return true;
    if (const auto* m = std::get_if<IntMat2>(&t.monodromy.data))
        return finite_order(*m).has_value();
    return std::get<DeclaredNt>(t.monodromy.data) == DeclaredNt::Periodic;
}

// ---- Klein-bottled helpers -------------------------------------------

struct KbTorusPair {
    AffineTorusMap s1, s2;
};

KbTorusPair kb_torus_pair(const KleinBottledData& k) {
    return {k.sigma1.affine(), k.sigma2.affine()};
}

std::string kb_pair_token(const KleinBottledData& k) {
    if (k.foil == Surface::sphere()) return "antipodal;antipodal";
    if (k.foil == Surface::klein_bottle()) return "sigma_K;sigma_K";
    if (k.foil == Surface::torus()) {
        auto [s1, s2] = kb_torus_pair(k);
        IntMat2 composed = affine_compose(s2, s1).linear;
        return "pair:" + conjugacy_token(composed, ConjGroup::GL, true);
    }
    // declared genus >= 2 data: canonical order of the labels (the pair
    // may be swapped by an equivalence)
    std::string a = k.sigma1.name(), b = k.sigma2.name();
    if (b < a) std::swap(a, b);
    return "declared:" + a + ";" + b;
}

// ---- real-projective helpers -----------------------------------------

struct RpTorusBranch {
    bool sigma_plus;          // orientation-preserving involution class
    Rat b2;                   // sigma+ branch: second translation entry
    KleinParams klein;        // sigma- branch: M(h21, h22) canonicalized
};

RpTorusBranch rp_torus_branch(const RealProjectiveData& r) {
    RpTorusBranch out{};
    NormalizedInvolution norm = normalize_involution(r.involution);
    if (norm.cls == InvolutionClass::SigmaPlus_T2) {
        out.sigma_plus = true;
        out.b2 = r.involution.affine().ty;
    } else {
        out.sigma_plus = false;
        const IntMat2& h = norm.conjugator.linear;
        out.klein = klein_canonical(h.c, h.d);
    }
    return out;
}

GeometryTag finite_pi1_geometry(const ManifoldId& ambient) {
    switch (ambient.tag) {
        case ManifoldId::Tag::S3:
        case ManifoldId::Tag::RP3:
        case ManifoldId::Tag::Lens:   // canonical non-special lens: p >= 2
        case ManifoldId::Tag::Klein:  // non-special Klein spaces: pi1 finite
            return GeometryTag::S3;
        default:
            return GeometryTag::S2xR;
    }
}

} // namespace

// ---- public operations -------------------------------------------------

std::string canonical_invariant(const TransnormalDescriptor& d) {
    require_valid(d);
    std::ostringstream os;
    if (const auto* t = std::get_if<ToricData>(&d.data)) {
        os << "toric:" << t->foil.name() << ":" << toric_class_token(*t);
    } else if (const auto* k = std::get_if<KleinBottledData>(&d.data)) {
        os << "kb:" << k->foil.name() << ":" << kb_pair_token(*k);
    } else if (const auto* s = std::get_if<SphericalData>(&d.data)) {
        os << "sph:" << to_string(s->bundle);
        if (s->bundle == BundleKind::SolidTorus)
            os << ":" << glue_lens(s->attach).to_string();
    } else {
        const auto& r = std::get<RealProjectiveData>(d.data);
        os << "rp:" << to_string(r.bundle);
        if (r.bundle == BundleKind::SolidTorus) {
            RpTorusBranch branch = rp_torus_branch(r);
            if (branch.sigma_plus)
                os << ":sigma+:b2=" << rat_to_string(branch.b2);
            else
                os << ":sigma-:" << branch.klein.to_string();
        }
    }
    return os.str();
}

ManifoldId ambient_manifold(const TransnormalDescriptor& d) {
    require_valid(d);
    if (const auto* t = std::get_if<ToricData>(&d.data)) {
        return resolve_coincidences(
            ManifoldId::mapping_torus(t->foil, toric_class_token(*t)));
    }
    if (const auto* k = std::get_if<KleinBottledData>(&d.data)) {
        return resolve_coincidences(
            ManifoldId::klein_glue(k->foil, kb_pair_token(*k)));
    }
    if (const auto* s = std::get_if<SphericalData>(&d.data)) {
        switch (s->bundle) {
            case BundleKind::PointDisk3:
                return ManifoldId::special(ManifoldId::Tag::S3);
            case BundleKind::SolidTorus:
                return resolve_coincidences(ManifoldId::lens_space(glue_lens(s->attach)));
            case BundleKind::SolidKlein:
                return ManifoldId::special(ManifoldId::Tag::S1xtwS2);
        }
    }
    const auto& r = std::get<RealProjectiveData>(d.data);
    switch (r.bundle) {
        case BundleKind::PointDisk3:
            return ManifoldId::special(ManifoldId::Tag::RP3);
        case BundleKind::SolidKlein:
            return ManifoldId::special(ManifoldId::Tag::RP2xS1);
        case BundleKind::SolidTorus: break;
    }
    RpTorusBranch branch = rp_torus_branch(r);
    if (branch.sigma_plus) {
        // sigma(z1,z2) = ((-1)^{h11} z1, (-1)^{h21} z2): even h21 yields the
        // RP^2-bundle, odd h21 normalizes to (z1, -z2) and the twisted bundle.
        return branch.b2 == Rat(0)
                   ? ManifoldId::special(ManifoldId::Tag::RP2xS1)
                   : ManifoldId::special(ManifoldId::Tag::S1xtwS2);
    }
    return resolve_coincidences(ManifoldId::klein_space(branch.klein));
}

bool orientable_ambient(const TransnormalDescriptor& d) {
    require_valid(d);
    if (const auto* t = std::get_if<ToricData>(&d.data))
        return t->foil.orientable() && toric_orientation_preserving(*t);
    if (const auto* k = std::get_if<KleinBottledData>(&d.data)) {
        if (!k->foil.orientable()) return false;
        if (k->foil == Surface::sphere()) return true;  // antipodal reverses
        if (k->foil == Surface::torus()) {
            auto [s1, s2] = kb_torus_pair(*k);
            return s1.linear.det() == -1 && s2.linear.det() == -1;
        }
        return true;  // declared genus data: reversing pair assumed
    }
    if (const auto* s = std::get_if<SphericalData>(&d.data))
        return s->bundle != BundleKind::SolidKlein;
    const auto& r = std::get<RealProjectiveData>(d.data);
    if (r.bundle == BundleKind::PointDisk3) return true;   // RP^3
    if (r.bundle == BundleKind::SolidKlein) return false;  // S^1 x RP^2
    return !rp_torus_branch(r).sigma_plus;  // Klein spaces orientable
}

CpcStatus cpc_status(const TransnormalDescriptor& d) {
    require_valid(d);
    if (std::holds_alternative<SphericalData>(d.data) ||
        std::holds_alternative<RealProjectiveData>(d.data)) {
        return {true, finite_pi1_geometry(ambient_manifold(d))};
    }
    bool orientable = orientable_ambient(d);
    if (const auto* t = std::get_if<ToricData>(&d.data)) {
        if (orientable) {
            if (t->foil == Surface::sphere()) return {true, GeometryTag::S2xR};
            if (t->foil == Surface::torus()) {
                NtType nt = nt_type(std::get<IntMat2>(t->monodromy.data));
                switch (nt.kind) {
                    case NtType::Kind::Periodic: return {true, GeometryTag::E3};
                    case NtType::Kind::Reducible: return {true, GeometryTag::Nil};
                    case NtType::Kind::Anosov: return {true, GeometryTag::Sol};
                }
            }
            // genus >= 2: CPC representative iff the class is periodic
            auto nt = std::get<DeclaredNt>(t->monodromy.data);
            if (nt == DeclaredNt::Periodic) return {true, GeometryTag::H2xR};
            return {false, GeometryTag::NoneCPC};
        }
        if (t->foil == Surface::rp2()) return {true, GeometryTag::S2xR};
        // Non-orientable ambient: a periodic class still admits a CPC
        // representative (metric averaging), but no geometry is assigned.
        return {toric_class_periodic(*t), GeometryTag::UnspecifiedByPaper};
    }
    const auto& k = std::get<KleinBottledData>(d.data);
    if (k.foil == Surface::sphere()) return {true, GeometryTag::S2xR};
    if (k.foil == Surface::torus() && orientable) {
        IntMat2 composed = affine_compose(k.sigma2.affine(), k.sigma1.affine()).linear;
        NtType nt = nt_type(composed);
        switch (nt.kind) {
            case NtType::Kind::Periodic: return {true, GeometryTag::E3};
            case NtType::Kind::Reducible: return {true, GeometryTag::Nil};
            case NtType::Kind::Anosov: return {true, GeometryTag::Sol};
        }
    }
    return {false, GeometryTag::UnspecifiedByPaper};
}

Cohom1 cohomogeneity_one(const TransnormalDescriptor& d) {
    require_valid(d);
    if (const auto* s = std::get_if<SphericalData>(&d.data)) {
        switch (s->bundle) {
            case BundleKind::PointDisk3: return Cohom1::SO3;
            case BundleKind::SolidTorus: return Cohom1::T2;
            case BundleKind::SolidKlein: return Cohom1::None;
        }
    }
    if (const auto* r = std::get_if<RealProjectiveData>(&d.data)) {
        switch (r->bundle) {
            case BundleKind::PointDisk3: return Cohom1::SO3;
            case BundleKind::SolidKlein: return Cohom1::None;
            case BundleKind::SolidTorus:
                return rp_torus_branch(*r).sigma_plus ? Cohom1::T2 : Cohom1::None;
        }
    }
    return Cohom1::Undecided;
}

EssentialCover essential_cover(const TransnormalDescriptor& d) {
    require_valid(d);
    EssentialCover out;
    if (const auto* t = std::get_if<ToricData>(&d.data)) {
        out.cover = SymbolicCover{SymbolicCover::Kind::Cylinder, t->foil, {}};
        out.cover_type = SevenType::Cylindrical;
        out.deck_generators = {DeckAction::translation(1.0, t->monodromy.name())};
        return out;
    }
    if (const auto* k = std::get_if<KleinBottledData>(&d.data)) {
        out.cover = SymbolicCover{SymbolicCover::Kind::Cylinder, k->foil, {}};
        out.cover_type = SevenType::Cylindrical;
        out.deck_generators = {DeckAction::reflection(0.0, k->sigma1.name()),
                               DeckAction::reflection(0.5, k->sigma2.name())};
        return out;
    }
    if (std::holds_alternative<SphericalData>(d.data)) {
        out.cover = ambient_manifold(d);
        out.cover_type = SevenType::Spherical;
        return out;
    }
    const auto& r = std::get<RealProjectiveData>(d.data);
    out.cover_type = SevenType::Spherical;
    out.deck_generators = {DeckAction::reflection(0.5, r.involution.name())};
    switch (r.bundle) {
        case BundleKind::PointDisk3:
            out.cover = ManifoldId::special(ManifoldId::Tag::S3);
            return out;
        case BundleKind::SolidKlein:
            out.cover = ManifoldId::special(ManifoldId::Tag::S1xtwS2);
            return out;
        case BundleKind::SolidTorus: break;
    }
    RpTorusBranch branch = rp_torus_branch(r);
    if (branch.sigma_plus)
        out.cover = ManifoldId::special(ManifoldId::Tag::S2xS1);
    else
        out.cover =
            SymbolicCover{SymbolicCover::Kind::LensDoubleCover, {}, branch.klein};
    return out;
}

namespace {

std::string involution_class_label(const InvolutionRep& inv) {
    if (std::holds_alternative<InvolutionRep::SphereAntipodal>(inv.data))
        return "antipodal";
    if (std::holds_alternative<InvolutionRep::KleinSigmaK>(inv.data)) return "sigma_K";
    if (inv.is_torus_affine())
        return to_string(normalize_involution(inv).cls);
    return std::get<InvolutionRep::DeclaredGenus>(inv.data).label;
}

// Reports must coincide across equivalent descriptors, so the deck maps
// are labelled by conjugacy class rather than by the representative.
void canonicalize_deck_labels(const TransnormalDescriptor& d, EssentialCover& cover) {
    if (const auto* t = std::get_if<ToricData>(&d.data)) {
        for (auto& g : cover.deck_generators) g.surface_map = toric_class_token(*t);
        return;
    }
    if (const auto* k = std::get_if<KleinBottledData>(&d.data)) {
        std::string a = involution_class_label(k->sigma1);
        std::string b = involution_class_label(k->sigma2);
        if (b < a) std::swap(a, b);  // the equivalence may swap the pair
        if (cover.deck_generators.size() == 2) {
            cover.deck_generators[0].surface_map = a;
            cover.deck_generators[1].surface_map = b;
        }
        return;
    }
    if (const auto* r = std::get_if<RealProjectiveData>(&d.data)) {
        for (auto& g : cover.deck_generators)
            g.surface_map = involution_class_label(r->involution);
    }
}

} // namespace

ClassificationReport classify(const TransnormalDescriptor& d) {
    ClassificationReport r;
    r.ambient = ambient_manifold(d);
    r.orientable = orientable_ambient(d);
    r.canonical_invariant = canonical_invariant(d);
    r.cpc = cpc_status(d);
    r.cohom1 = cohomogeneity_one(d);
    r.cover = essential_cover(d);
    canonicalize_deck_labels(d, r.cover);
    return r;
}

// ---- equivalence --------------------------------------------------------

namespace {

// sigma'_i = (H, c_i) sigma_{pi(i)} (H, c_i)^{-1} for some exact rational
// c_i: the linear parts must match and the translation congruence
// (I - A'_i) c = b'_i - H b_{pi(i)} must be solvable mod Z^2.
bool kb_witness(const IntMat2& H, const AffineTorusMap& from,
                const AffineTorusMap& to) {
    if (H * from.linear * H.inverse() != to.linear) return false;
    auto [hx, hy] = apply(H, from.tx, from.ty);
    IntMat2 M{1 - to.linear.a, -to.linear.b, -to.linear.c, 1 - to.linear.d};
    return torus_congruence_solvable(M, to.tx - hx, to.ty - hy);
}

EquivResult kb_torus_equivalent(const KleinBottledData& a, const KleinBottledData& b,
                                const EquivOptions& opts) {
    if (kb_pair_token(a) != kb_pair_token(b)) return EquivResult::no();
    auto [a1, a2] = kb_torus_pair(a);
    auto [b1, b2] = kb_torus_pair(b);
    for (const IntMat2& H : unimodular_range(opts.kb_search_bound, ConjGroup::GL)) {
        if (kb_witness(H, a1, b1) && kb_witness(H, a2, b2)) return EquivResult::yes();
        if (kb_witness(H, a2, b1) && kb_witness(H, a1, b2)) return EquivResult::yes();
    }
    std::ostringstream os;
    os << "no conjugating pair with common linear part up to entry bound "
       << opts.kb_search_bound << "; composed-pair invariants coincide";
    return EquivResult::undecided(os.str());
}

} // namespace

EquivResult equivalent(const TransnormalDescriptor& d1,
                       const TransnormalDescriptor& d2, const EquivOptions& opts) {
    require_valid(d1);
    require_valid(d2);
    if (d1.data.index() != d2.data.index()) return EquivResult::no();

    if (const auto* t1 = std::get_if<ToricData>(&d1.data)) {
        const auto& t2 = std::get<ToricData>(d2.data);
        if (t1->foil != t2.foil) return EquivResult::no();
        if (t1->foil == Surface::torus()) {
            const auto& m1 = std::get<IntMat2>(t1->monodromy.data);
            const auto& m2 = std::get<IntMat2>(t2.monodromy.data);
            return conj_equivalent(m1, m2, ConjGroup::GL, true) ? EquivResult::yes()
                                                                : EquivResult::no();
        }
        // finite class sets: sphere {id, antipodal}, RP2 {id}, Klein bottle
        // Z2 x Z2; declared genus labels are Nielsen-Thurston invariants
        return toric_class_token(*t1) == toric_class_token(t2) ? EquivResult::yes()
                                                               : EquivResult::no();
    }
    if (const auto* k1 = std::get_if<KleinBottledData>(&d1.data)) {
        const auto& k2 = std::get<KleinBottledData>(d2.data);
        if (k1->foil != k2.foil) return EquivResult::no();
        if (k1->foil == Surface::sphere()) return EquivResult::yes();
        if (k1->foil == Surface::klein_bottle()) return EquivResult::yes();
        if (k1->foil == Surface::torus()) return kb_torus_equivalent(*k1, k2, opts);
        if (kb_pair_token(*k1) == kb_pair_token(k2)) return EquivResult::yes();
        return EquivResult::undecided(
            "declared genus >= 2 involution pairs carry no computable invariant");
    }
    if (const auto* s1 = std::get_if<SphericalData>(&d1.data)) {
        const auto& s2 = std::get<SphericalData>(d2.data);
        if (s1->bundle != s2.bundle) return EquivResult::no();
        if (s1->bundle != BundleKind::SolidTorus) return EquivResult::yes();
        return lens_homeo(glue_lens(s1->attach), glue_lens(s2.attach))
                   ? EquivResult::yes()
                   : EquivResult::no();
    }
    const auto& r1 = std::get<RealProjectiveData>(d1.data);
    const auto& r2 = std::get<RealProjectiveData>(d2.data);
    if (r1.bundle != r2.bundle) return EquivResult::no();
    if (r1.bundle != BundleKind::SolidTorus) return EquivResult::yes();
    RpTorusBranch br1 = rp_torus_branch(r1);
    RpTorusBranch br2 = rp_torus_branch(r2);
    if (br1.sigma_plus != br2.sigma_plus) return EquivResult::no();
    if (br1.sigma_plus)
        return br1.b2 == br2.b2 ? EquivResult::yes() : EquivResult::no();
    return klein_homeo(br1.klein, br2.klein) ? EquivResult::yes() : EquivResult::no();
}

Decomposition decompose_cover(const std::vector<DeckAction>& generators) {
    Decomposition out;
    std::vector<DeckAction> reflections;
    for (const auto& g : generators) {
        switch (g.kind) {
            case DeckAction::Kind::FoilPreserving:
                out.g0_generators.push_back(g);
                break;
            case DeckAction::Kind::FoilTranslation:
                if (!std::isfinite(g.shift) || g.shift <= 0.0)
                    throw std::invalid_argument("foil-translation requires a positive shift");
                out.quotient_generators.push_back(g);
                break;
            case DeckAction::Kind::FoilReflection:
                if (!std::isfinite(g.center))
                    throw std::invalid_argument("foil-reflection carries no center");
                reflections.push_back(g);
                break;
        }
    }
    std::sort(reflections.begin(), reflections.end(),
              [](const DeckAction& a, const DeckAction& b) { return a.center < b.center; });
    if (!reflections.empty()) out.quotient_generators.push_back(reflections.front());
    for (size_t i = 1; i < reflections.size(); ++i) {
        // composition of reflections about c1 < ci is the translation by
        // 2 (ci - c1)
        double t0 = 2.0 * (reflections[i].center - reflections.front().center);
        if (t0 > 0.0)
            out.quotient_generators.push_back(DeckAction::translation(
                t0, reflections[i].surface_map + " o " + reflections.front().surface_map));
    }
    return out;
}

} // namespace tn3
