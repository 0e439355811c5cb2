#include "tn3/docio.hpp"

#include <json.hpp>

#include <set>

namespace tn3 {

const char* const kToolVersion = "tn3 0.1.0";

namespace {

using Json = nlohmann::ordered_json;

void reject_unknown(const Json& obj, const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw DocumentError(it.key(), "unknown field");
}

const Json& require(const Json& obj, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw DocumentError(key, "missing field");
    return *it;
}

IntMat2 parse_mat(const Json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 4)
        throw DocumentError(field, "expected a 4-integer array [a,b,c,d]");
    for (const auto& e : v)
        if (!e.is_number_integer())
            throw DocumentError(field, "matrix entries must be integers");
    return {v[0].get<long long>(), v[1].get<long long>(), v[2].get<long long>(),
            v[3].get<long long>()};
}

Rat parse_rat_field(const Json& v, const std::string& field) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (!v.is_string())
        throw DocumentError(field, "rationals must be strings like \"1/2\"");
    try {
        return parse_rat(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw DocumentError(field, e.what());
    }
}

AffineTorusMap parse_affine(const Json& v, const std::string& field) {
    if (!v.is_object()) throw DocumentError(field, "expected an involution object");
    reject_unknown(v, {"linear", "translation"});
    IntMat2 lin = parse_mat(require(v, "linear"), field + ".linear");
    Rat tx(0), ty(0);
    if (auto it = v.find("translation"); it != v.end()) {
        if (!it->is_array() || it->size() != 2)
            throw DocumentError(field + ".translation", "expected two rationals");
        tx = parse_rat_field((*it)[0], field + ".translation[0]");
        ty = parse_rat_field((*it)[1], field + ".translation[1]");
    }
    return {lin, tx, ty};
}

Surface parse_foil(const Json& v, const std::string& field) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "sphere") return Surface::sphere();
        if (s == "rp2") return Surface::rp2();
        if (s == "torus") return Surface::torus();
        if (s == "klein_bottle") return Surface::klein_bottle();
        throw DocumentError(field, "unknown surface '" + s + "'");
    }
    if (v.is_object()) {
        reject_unknown(v, {"genus"});
        const Json& g = require(v, "genus");
        if (!g.is_number_integer() || g.get<long long>() < 2)
            throw DocumentError(field + ".genus", "genus must be an integer >= 2");
        return Surface::genus_g(static_cast<int>(g.get<long long>()));
    }
    throw DocumentError(field, "expected a surface name or {\"genus\": g}");
}

InvolutionRep parse_involution(const Json& v, const Surface& surface,
                               const std::string& field) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "antipodal" && surface == Surface::sphere())
            return InvolutionRep::antipodal();
        if (s == "sigma_k" && surface == Surface::klein_bottle())
            return InvolutionRep::sigma_k();
        if (surface.tag == Surface::Tag::OrientableGenus)
            return InvolutionRep::declared(surface.genus, s);
        throw DocumentError(field, "involution tag '" + s +
                                       "' does not match surface " + surface.name());
    }
    if (surface == Surface::torus())
        return InvolutionRep::torus(parse_affine(v, field));
    throw DocumentError(field, "expected an involution tag for " + surface.name());
}

BundleKind parse_bundle(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : "";
    if (s == "point_disk3") return BundleKind::PointDisk3;
    if (s == "solid_torus") return BundleKind::SolidTorus;
    if (s == "solid_klein") return BundleKind::SolidKlein;
    throw DocumentError("bundle",
                        "expected point_disk3 | solid_torus | solid_klein");
}

MappingClassRep parse_monodromy(const Json& v, const Surface& foil) {
    if (foil == Surface::torus()) return MappingClassRep::torus(parse_mat(v, "monodromy"));
    if (!v.is_string())
        throw DocumentError("monodromy", "expected a class name for " + foil.name());
    std::string s = v.get<std::string>();
    if (foil == Surface::sphere()) {
        if (s == "identity") return MappingClassRep::sphere(SphereClass::Identity);
        if (s == "antipodal") return MappingClassRep::sphere(SphereClass::Antipodal);
        throw DocumentError("monodromy", "sphere classes: identity | antipodal");
    }
    if (foil == Surface::rp2()) {
        if (s == "identity") return MappingClassRep::rp2();
        throw DocumentError("monodromy", "RP^2 has a single class: identity");
    }
    if (foil == Surface::klein_bottle()) {
        if (s == "identity") return MappingClassRep::klein(KleinClass::Identity);
        if (s == "dehn_twist") return MappingClassRep::klein(KleinClass::DehnTwist);
        if (s == "y") return MappingClassRep::klein(KleinClass::Y);
        if (s == "dehn_twist_y") return MappingClassRep::klein(KleinClass::DehnTwistY);
        throw DocumentError("monodromy",
                            "Klein bottle classes: identity | dehn_twist | y | dehn_twist_y");
    }
    if (s == "periodic") return MappingClassRep::genus(foil.genus, DeclaredNt::Periodic);
    if (s == "reducible") return MappingClassRep::genus(foil.genus, DeclaredNt::Reducible);
    if (s == "pseudo_anosov")
        return MappingClassRep::genus(foil.genus, DeclaredNt::PseudoAnosov);
    throw DocumentError("monodromy",
                        "declared labels: periodic | reducible | pseudo_anosov");
}

Json affine_to_json(const AffineTorusMap& f) {
    Json j;
    j["linear"] = {f.linear.a, f.linear.b, f.linear.c, f.linear.d};
    j["translation"] = {rat_to_string(f.tx), rat_to_string(f.ty)};
    return j;
}

Json involution_to_json(const InvolutionRep& inv) {
    if (inv.is_torus_affine()) return affine_to_json(inv.affine());
    if (std::holds_alternative<InvolutionRep::SphereAntipodal>(inv.data))
        return "antipodal";
    if (std::holds_alternative<InvolutionRep::KleinSigmaK>(inv.data)) return "sigma_k";
    return std::get<InvolutionRep::DeclaredGenus>(inv.data).label;
}

Json foil_to_json(const Surface& s) {
    switch (s.tag) {
        case Surface::Tag::Sphere: return "sphere";
        case Surface::Tag::RP2: return "rp2";
        case Surface::Tag::Torus: return "torus";
        case Surface::Tag::KleinBottle: return "klein_bottle";
        case Surface::Tag::OrientableGenus: return Json{{"genus", s.genus}};
    }
    return nullptr;
}

} // namespace

TransnormalDescriptor parse_descriptor(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError("(document)", e.what());
    }
    if (!doc.is_object()) throw DocumentError("(document)", "expected an object");
    std::string type = require(doc, "type").is_string()
                           ? require(doc, "type").get<std::string>()
                           : throw DocumentError("type", "expected a string");

    if (type == "toric") {
        reject_unknown(doc, {"type", "foil", "monodromy"});
        Surface foil = parse_foil(require(doc, "foil"), "foil");
        return TransnormalDescriptor::toric(
            foil, parse_monodromy(require(doc, "monodromy"), foil));
    }
    if (type == "klein_bottled") {
        reject_unknown(doc, {"type", "foil", "sigma1", "sigma2"});
        Surface foil = parse_foil(require(doc, "foil"), "foil");
        return TransnormalDescriptor::klein_bottled(
            foil, parse_involution(require(doc, "sigma1"), foil, "sigma1"),
            parse_involution(require(doc, "sigma2"), foil, "sigma2"));
    }
    if (type == "spherical") {
        reject_unknown(doc, {"type", "bundle", "attach"});
        BundleKind b = parse_bundle(require(doc, "bundle"));
        IntMat2 attach = IntMat2::identity();
        if (b == BundleKind::SolidTorus)
            attach = parse_mat(require(doc, "attach"), "attach");
        else if (doc.contains("attach"))
            throw DocumentError("attach", "only the solid_torus bundle carries one");
        return TransnormalDescriptor::spherical(b, attach);
    }
    if (type == "real_projective") {
        reject_unknown(doc, {"type", "bundle", "involution"});
        BundleKind b = parse_bundle(require(doc, "bundle"));
        return TransnormalDescriptor::real_projective(
            b, parse_involution(require(doc, "involution"), bundle_boundary(b),
                                "involution"));
    }
    throw DocumentError(
        "type", "expected toric | klein_bottled | spherical | real_projective");
}

std::string serialize_descriptor(const TransnormalDescriptor& d) {
    Json j;
    j["type"] = d.type_name();
    if (const auto* t = std::get_if<ToricData>(&d.data)) {
        j["foil"] = foil_to_json(t->foil);
        if (const auto* m = std::get_if<IntMat2>(&t->monodromy.data))
            j["monodromy"] = {m->a, m->b, m->c, m->d};
        else
            j["monodromy"] = t->monodromy.name();
    } else if (const auto* k = std::get_if<KleinBottledData>(&d.data)) {
        j["foil"] = foil_to_json(k->foil);
        j["sigma1"] = involution_to_json(k->sigma1);
        j["sigma2"] = involution_to_json(k->sigma2);
    } else if (const auto* s = std::get_if<SphericalData>(&d.data)) {
        j["bundle"] = to_string(s->bundle);
        if (s->bundle == BundleKind::SolidTorus)
            j["attach"] = {s->attach.a, s->attach.b, s->attach.c, s->attach.d};
    } else {
        const auto& r = std::get<RealProjectiveData>(d.data);
        j["bundle"] = to_string(r.bundle);
        j["involution"] = involution_to_json(r.involution);
    }
    return j.dump(2);
}

std::string report_document(const TransnormalDescriptor& d,
                            const ClassificationReport& report) {
    Json j;
    j["tool"] = kToolVersion;
    j["input"] = Json::parse(serialize_descriptor(d));
    j["ambient"] = report.ambient.label();
    j["orientable"] = report.orientable;
    j["canonical_invariant"] = report.canonical_invariant;
    j["cpc"] = {{"admissible", report.cpc.admissible},
                {"geometry", to_string(report.cpc.geometry)}};
    j["cohomogeneity_one"] = to_string(report.cohom1);
    Json cover;
    if (const auto* id = std::get_if<ManifoldId>(&report.cover.cover))
        cover["cover"] = id->label();
    else
        cover["cover"] = std::get<SymbolicCover>(report.cover.cover).describe();
    cover["cover_type"] = to_string(report.cover.cover_type);
    Json gens = Json::array();
    for (const auto& g : report.cover.deck_generators) gens.push_back(g.describe());
    cover["deck_generators"] = gens;
    j["essential_cover"] = cover;
    return j.dump(2);
}

} // namespace tn3
