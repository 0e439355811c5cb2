#include "tn3/tables.hpp"

#include <sstream>

#include "tn3/classify.hpp"

namespace tn3 {

namespace {

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

// Family-level manifold cell: generic parameter families print the family
// name, specials their canonical label.
std::string manifold_cell(const ManifoldId& id) {
    switch (id.tag) {
        case ManifoldId::Tag::Lens: return "Lens Space";
        case ManifoldId::Tag::Klein: return "Klein spaces M(p,q)";
        default: return id.label();
    }
}

// Quotient surface of the boundary by the involution class.
std::string sr_foil_name(const RealProjectiveData& r) {
    if (r.bundle == BundleKind::PointDisk3) return "RP^2";
    if (r.bundle == BundleKind::SolidKlein) return "Klein bottle";
    NormalizedInvolution n = normalize_involution(r.involution);
    return n.cls == InvolutionClass::SigmaPlus_T2 ? "Torus" : "Klein bottle";
}

std::string cover_cell(const EssentialCover& c) {
    if (const auto* id = std::get_if<ManifoldId>(&c.cover)) return id->label();
    const auto& sym = std::get<SymbolicCover>(c.cover);
    if (sym.kind == SymbolicCover::Kind::LensDoubleCover) return "Lens spaces";
    return sym.describe();
}

AffineTorusMap conjugated_sigma_minus(const IntMat2& h) {
    AffineTorusMap hm{h, Rat(0), Rat(0)};
    return affine_conjugate(hm, AffineTorusMap::sigma_minus());
}

std::vector<TransnormalDescriptor> spherical_family() {
    return {
        TransnormalDescriptor::spherical(BundleKind::PointDisk3),
        TransnormalDescriptor::spherical(BundleKind::SolidTorus, {0, 1, -1, 0}),  // L(1,0)
        TransnormalDescriptor::spherical(BundleKind::SolidTorus, {1, 0, 0, 1}),   // L(0,1)
        TransnormalDescriptor::spherical(BundleKind::SolidTorus, {1, 2, 0, 1}),   // L(2,1)
        TransnormalDescriptor::spherical(BundleKind::SolidTorus, {2, 7, 1, 4}),   // L(7,2)
        TransnormalDescriptor::spherical(BundleKind::SolidKlein),
    };
}

std::vector<TransnormalDescriptor> real_projective_family() {
    return {
        TransnormalDescriptor::real_projective(BundleKind::PointDisk3,
                                               InvolutionRep::antipodal()),
        TransnormalDescriptor::real_projective(
            BundleKind::SolidTorus,
            InvolutionRep::torus({IntMat2::identity(), Rat(1, 2), Rat(0)})),
        TransnormalDescriptor::real_projective(
            BundleKind::SolidTorus,
            InvolutionRep::torus({IntMat2::identity(), Rat(0), Rat(1, 2)})),
        TransnormalDescriptor::real_projective(
            BundleKind::SolidTorus,
            InvolutionRep::torus(conjugated_sigma_minus(IntMat2::identity()))),  // M(0,1)
        TransnormalDescriptor::real_projective(
            BundleKind::SolidTorus,
            InvolutionRep::torus(conjugated_sigma_minus({1, 0, 2, 1}))),  // M(2,1)
        TransnormalDescriptor::real_projective(BundleKind::SolidKlein,
                                               InvolutionRep::sigma_k()),
    };
}

std::vector<TransnormalDescriptor> toric_family() {
    return {
        TransnormalDescriptor::toric(Surface::sphere(),
                                     MappingClassRep::sphere(SphereClass::Identity)),
        TransnormalDescriptor::toric(Surface::sphere(),
                                     MappingClassRep::sphere(SphereClass::Antipodal)),
        TransnormalDescriptor::toric(Surface::rp2(), MappingClassRep::rp2()),
        TransnormalDescriptor::toric(Surface::torus(),
                                     MappingClassRep::torus({1, 1, 0, 1})),
    };
}

std::vector<TransnormalDescriptor> kb_family() {
    return {
        TransnormalDescriptor::klein_bottled(Surface::sphere(),
                                             InvolutionRep::antipodal(),
                                             InvolutionRep::antipodal()),
        TransnormalDescriptor::klein_bottled(
            Surface::torus(), InvolutionRep::torus(AffineTorusMap::sigma_minus()),
            InvolutionRep::torus(AffineTorusMap::sigma_minus())),
    };
}

TableData spherical_table() {
    TableData t;
    t.title = "Spherical-type equivalence classes";
    t.header = {"Manifold", "DR-foils", "S-foils", "Cohomogeneity-one action",
                "Orientable"};
    for (BundleKind b :
         {BundleKind::PointDisk3, BundleKind::SolidTorus, BundleKind::SolidKlein}) {
        TransnormalDescriptor d =
            b == BundleKind::SolidTorus
                ? TransnormalDescriptor::spherical(b, {2, 7, 1, 4})
                : TransnormalDescriptor::spherical(b);
        t.rows.push_back({manifold_cell(ambient_manifold(d)),
                          bundle_boundary(b).name(),
                          b == BundleKind::PointDisk3 ? "Point" : "Circle",
                          to_string(cohomogeneity_one(d)),
                          yes_no(orientable_ambient(d))});
    }
    return t;
}

TableData real_projective_table() {
    TableData t;
    t.title = "Real-projective-type equivalence classes";
    t.header = {"Manifold", "DR-foils", "SR-foil", "Essential cover",
                "Cohomogeneity-one action", "Orientable"};
    std::vector<TransnormalDescriptor> family = {
        TransnormalDescriptor::real_projective(BundleKind::PointDisk3,
                                               InvolutionRep::antipodal()),
        TransnormalDescriptor::real_projective(
            BundleKind::SolidTorus,
            InvolutionRep::torus({IntMat2::identity(), Rat(1, 2), Rat(0)})),
        TransnormalDescriptor::real_projective(
            BundleKind::SolidTorus,
            InvolutionRep::torus({IntMat2::identity(), Rat(0), Rat(1, 2)})),
        TransnormalDescriptor::real_projective(
            BundleKind::SolidTorus,
            InvolutionRep::torus(conjugated_sigma_minus({1, 0, 2, 1}))),
        TransnormalDescriptor::real_projective(BundleKind::SolidKlein,
                                               InvolutionRep::sigma_k()),
    };
    for (const auto& d : family) {
        const auto& r = std::get<RealProjectiveData>(d.data);
        t.rows.push_back({manifold_cell(ambient_manifold(d)),
                          bundle_boundary(r.bundle).name(), sr_foil_name(r),
                          cover_cell(essential_cover(d)),
                          to_string(cohomogeneity_one(d)),
                          yes_no(orientable_ambient(d))});
    }
    return t;
}

TableData admission_table() {
    TableData t;
    t.title = "Compact 3-manifolds admitting transnormal systems";
    t.header = {"Topology", "spherical", "real-projective", "toric", "Klein-bottled"};

    struct Row {
        std::string label;
        ManifoldId::Tag tag;
    };
    auto with_aliases = [](ManifoldId::Tag tag) {
        ManifoldId id = ManifoldId::special(tag);
        std::string label = id.label();
        auto aliases = special_aliases(tag);
        if (!aliases.empty()) {
            label += " (=";
            for (const auto& a : aliases) label += " " + a + " =";
            label.pop_back();
            label.back() = ')';
        }
        return label;
    };
    std::vector<Row> rows = {
        {with_aliases(ManifoldId::Tag::S3), ManifoldId::Tag::S3},
        {with_aliases(ManifoldId::Tag::S2xS1), ManifoldId::Tag::S2xS1},
        {with_aliases(ManifoldId::Tag::S1xtwS2), ManifoldId::Tag::S1xtwS2},
        {with_aliases(ManifoldId::Tag::RP3), ManifoldId::Tag::RP3},
        {with_aliases(ManifoldId::Tag::RP2xS1), ManifoldId::Tag::RP2xS1},
        {with_aliases(ManifoldId::Tag::RP3connRP3), ManifoldId::Tag::RP3connRP3},
        {"Other lens spaces L(p,q)", ManifoldId::Tag::Lens},
        {"Other Klein spaces M(p,q)", ManifoldId::Tag::Klein},
        {"Other mapping tori MT(tau)", ManifoldId::Tag::MappingTorus},
        {"Other Klein glues KG(sigma1; sigma2)", ManifoldId::Tag::KleinGlue},
    };

    const std::vector<std::vector<TransnormalDescriptor>> families = {
        spherical_family(), real_projective_family(), toric_family(), kb_family()};
    for (const auto& row : rows) {
        std::vector<std::string> cells{row.label};
        for (const auto& family : families) {
            bool admitted = false;
            for (const auto& d : family)
                if (ambient_manifold(d).tag == row.tag) admitted = true;
            cells.push_back(admitted ? "x" : "");
        }
        t.rows.push_back(cells);
    }
    return t;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::vector<TableData> emit_tables() {
    return {spherical_table(), admission_table(), real_projective_table()};
}

std::string render_tables_markdown(const std::vector<TableData>& tables) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : tables) {
        if (!first) os << "\n";
        first = false;
        os << "## " << t.title << "\n\n|";
        for (const auto& h : t.header) os << " " << h << " |";
        os << "\n|";
        for (size_t i = 0; i < t.header.size(); ++i) os << " --- |";
        os << "\n";
        for (const auto& row : t.rows) {
            os << "|";
            for (const auto& cell : row) {
                os << " ";
                if (!cell.empty()) os << cell << " ";
                os << "|";
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string render_tables_csv(const std::vector<TableData>& tables) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : tables) {
        if (!first) os << "\n";
        first = false;
        os << "# " << t.title << "\n";
        for (size_t i = 0; i < t.header.size(); ++i)
            os << (i ? "," : "") << csv_escape(t.header[i]);
        os << "\n";
        for (const auto& row : t.rows) {
            for (size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << csv_escape(row[i]);
            os << "\n";
        }
    }
    return os.str();
}

} // namespace tn3
