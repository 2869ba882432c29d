#include "milnor/report.hpp"

#include <sstream>

namespace milnor {

json to_json(const Coeff& c)
{
    json j;
    j["re"] = c.approx().real();
    j["im"] = c.approx().imag();
    if (c.exact()) {
        j["re_exact"] = to_string(c.exact_re());
        j["im_exact"] = to_string(c.exact_im());
    }
    return j;
}

json to_json(const NewtonData& nd)
{
    json j;
    j["support"] = nd.support;
    j["vertices"] = nd.boundary_vertices;
    json faces = json::array();
    for (const auto& f : nd.faces) {
        json jf;
        jf["normal"] = f.normal.w;
        jf["d"] = f.d;
        jf["dim"] = f.dim;
        jf["lattice_points"] = f.lattice_points;
        faces.push_back(std::move(jf));
    }
    j["faces"] = std::move(faces);
    json ic = json::array();
    for (const auto& i : nd.intercepts) {
        if (i)
            ic.push_back(*i);
        else
            ic.push_back(nullptr);
    }
    j["intercepts"] = std::move(ic);
    j["convenient"] = nd.convenient;
    return j;
}

json to_json(const MultiplicityVerdict& mv)
{
    json j;
    j["satisfied"] = mv.satisfied;
    if (mv.witness) j["witness"] = mv.witness->w;
    if (mv.satisfied)
        j["containment"] = mv.containment == MultiplicityVerdict::Containment::f_above_g
                               ? "f-above-g"
                               : "g-above-f";
    return j;
}

json to_json(const ZetaFactored& z)
{
    json j;
    json fs = json::array();
    for (const auto& [d, e] : z.factors()) fs.push_back(json{{"d", d}, {"e", e}});
    j["factors"] = std::move(fs);
    j["degree"] = z.degree();
    j["milnor"] = milnor_from_zeta(z);
    j["convention"] = kZetaConvention;
    j["display"] = z.str();
    return j;
}

json to_json(const Zeta3hResult& z)
{
    json j = to_json(z.zeta);
    j["polar_degree"] = z.polar_degree;
    j["chi_E_prime"] = z.chi_Eprime;
    j["warnings"] = z.warnings;
    return j;
}

json to_json(const PuiseuxBranch& b)
{
    json j;
    switch (b.kind) {
    case PuiseuxBranch::Kind::axis_x: j["x"] = "0"; j["kind"] = "axis-x"; break;
    case PuiseuxBranch::Kind::axis_y: j["x"] = "t"; j["kind"] = "axis-y"; break;
    case PuiseuxBranch::Kind::regular:
        j["x"] = b.e == 1 ? "t" : "t^" + std::to_string(b.e);
        j["kind"] = "regular";
        break;
    }
    json ys = json::array();
    for (const auto& [k, c] : b.y.coefficients()) {
        json jc = to_json(c);
        jc["ord"] = k;
        ys.push_back(std::move(jc));
    }
    j["y"] = std::move(ys);
    if (b.kind == PuiseuxBranch::Kind::regular) {
        j["P"] = json::array({b.p, b.q});
        j["alpha"] = to_json(b.alpha);
        j["mult"] = b.mult;
        j["ramification"] = b.ramification;
    }
    j["rooted_at"] = b.rooted_at;
    j["exact"] = b.exact;
    if (b.verified_order >= kTruncInf)
        j["verified_to"] = "exact";
    else
        j["verified_to"] = b.verified_order;
    j["truncation"] = b.truncation;
    return j;
}

json to_json(const BranchesResult& br)
{
    json j;
    j["reduced"] = br.reduced;
    json bs = json::array();
    for (const auto& b : br.branches) bs.push_back(to_json(b));
    j["branches"] = std::move(bs);
    return j;
}

json to_json(const BranchReport& r)
{
    json j;
    j["branch"] = to_json(r.branch);
    j["in_VH"] = r.in_VH();
    j["in_Vf"] = r.in_Vf;
    j["in_Vg"] = r.in_Vg;
    if (r.non_tangential)
        j["non_tangential"] = *r.non_tangential;
    else
        j["non_tangential"] = nullptr;
    if (r.face_kind)
        j["face_kind"] = *r.face_kind == FaceClass::Kind::first_type ? "first-type" : "hidden";
    else
        j["face_kind"] = nullptr;
    if (r.df) j["df"] = *r.df;
    if (r.dg) j["dg"] = *r.dg;
    j["sigma_var"] = std::string(1, r.sigma_var);
    if (r.sigma_order) {
        j["sigma_order"] = *r.sigma_order;
        if (*r.sigma_order == 0) {
            j["sigma0"] = to_json(r.sigma0);
            j["sigma0_modulus"] = r.sigma0_modulus;
            j["sigma0_exact"] = r.sigma0_exact;
        }
    }
    if (r.contact_k) {
        j["k"] = *r.contact_k;
        j["rays"] = 2 * *r.contact_k;
    }
    j["verdict"] = to_string(r.verdict);
    j["instrument"] = r.instrument;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const FibrationReport& r)
{
    json j;
    json mc;
    if (r.multiplicity)
        mc = to_json(*r.multiplicity);
    else
        mc = json{{"satisfied", nullptr}, {"note", "not applicable (non-convenient input)"}};
    j["multiplicity_condition"] = std::move(mc);
    j["convenient"] = r.convenient;
    j["nondegenerate"] = json{{"f", r.nondeg_f}, {"g", r.nondeg_g}, {"pair", r.nondeg_pair}};
    if (!r.J.is_zero()) j["jacobian"] = r.J.str();
    json bs = json::array();
    for (const auto& b : r.reports) bs.push_back(to_json(b));
    j["branches"] = std::move(bs);
    j["verdict"] = to_string(r.verdict);
    j["instrument"] = r.instrument;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const CircleSample& s)
{
    json j;
    j["crossings"] = s.crossings;
    j["constant_modulus"] = s.constant_modulus;
    json ws = json::array();
    for (const auto& w : s.witnesses) {
        ws.push_back(json{{"theta", w.theta},
                          {"z1", json{{"re", w.z1.real()}, {"im", w.z1.imag()}}},
                          {"z2", json{{"re", w.z2.real()}, {"im", w.z2.imag()}}},
                          {"sigma_modulus", w.sigma_modulus},
                          {"prop1_residual", w.prop1_residual}});
    }
    j["witnesses"] = std::move(ws);
    return j;
}

namespace {

void render(const json& v, std::ostringstream& out, int indent)
{
    const std::string pad(indent * 2, ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            out << pad << it.key() << ":";
            if (it.value().is_object() || it.value().is_array()) {
                out << "\n";
                render(it.value(), out, indent + 1);
            } else {
                out << " " << it.value().dump() << "\n";
            }
        }
    } else if (v.is_array()) {
        bool scalars = true;
        for (const auto& e : v)
            if (e.is_object() || e.is_array()) scalars = false;
        if (scalars) {
            out << pad << v.dump() << "\n";
        } else {
            std::size_t i = 0;
            for (const auto& e : v) {
                out << pad << "- [" << i++ << "]\n";
                render(e, out, indent + 1);
            }
        }
    } else {
        out << pad << v.dump() << "\n";
    }
}

} // namespace

std::string render_text(const json& doc, int indent)
{
    std::ostringstream out;
    render(doc, out, indent);
    return out.str();
}

} // namespace milnor
