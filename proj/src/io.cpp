#include "toric/io.hpp"

#include <fstream>
#include <sstream>

namespace toric {

namespace {

const Int kJsonIntMax = (Int(1) << 53) - 1;

Int int_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Int(j.get<long long>());
    if (j.is_string())
        return Int(j.get<std::string>());
    fail(ErrorKind::InputError, "expected an integer (number or string)");
}

IntVec vec_from_json(const Json& j)
{
    if (!j.is_array())
        fail(ErrorKind::InputError, "expected an array of integers");
    IntVec v;
    for (const auto& x : j)
        v.push_back(int_from_json(x));
    return v;
}

}  // namespace

Json json_int(const Int& v)
{
    if (abs(v) <= kJsonIntMax)
        return Json(v.convert_to<long long>());
    return Json(v.str());
}

Json json_rat(const Rat& v)
{
    if (denominator(v) == 1)
        return json_int(numerator(v));
    return Json(numerator(v).str() + "/" + denominator(v).str());
}

Json json_vec(const IntVec& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(json_int(x));
    return a;
}

Json json_vec(const RatVec& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(json_rat(x));
    return a;
}

Cone parse_cone_json(const Json& j)
{
    if (!j.contains("rank") || !j.contains("generators"))
        fail(ErrorKind::InputError, "cone file needs fields 'rank' and 'generators'");
    const size_t rank = j.at("rank").get<size_t>();
    std::vector<IntVec> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back(vec_from_json(g));
    return build_cone(rank, gens);
}

LatticePolygon parse_polygon_json(const Json& j)
{
    if (!j.contains("vertices"))
        fail(ErrorKind::InputError, "polygon file needs field 'vertices'");
    std::vector<IntVec> verts;
    for (const auto& v : j.at("vertices"))
        verts.push_back(vec_from_json(v));
    return make_polygon(verts);
}

namespace {

Json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::InputError, "cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(ErrorKind::InputError, "invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

Cone parse_cone_file(const std::string& path) { return parse_cone_json(load_json(path)); }

LatticePolygon parse_polygon_file(const std::string& path)
{
    return parse_polygon_json(load_json(path));
}

Json serialize_cone(const Cone& c)
{
    Json j;
    j["rank"] = c.rank;
    Json gens = Json::array();
    for (const auto& g : c.generators)
        gens.push_back(json_vec(g));
    j["generators"] = gens;
    return j;
}

Json serialize_polygon(const LatticePolygon& q)
{
    Json j;
    Json verts = Json::array();
    for (const auto& v : q.vertices)
        verts.push_back(json_vec(v));
    j["vertices"] = verts;
    return j;
}

IntVec parse_degree(const std::string& csv, size_t rank)
{
    IntVec v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // trim spaces
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            fail(ErrorKind::InputError, "degree: empty component");
        try {
            v.push_back(Int(item.substr(a, b - a + 1)));
        } catch (const std::exception&) {
            fail(ErrorKind::InputError, "degree: bad integer '" + item + "'");
        }
    }
    if (v.size() != rank)
        fail(ErrorKind::InputError, "degree: expected " + std::to_string(rank) + " components");
    return v;
}

namespace {

constexpr const char* kToolVersion = "1.0.0";

std::string fnv1a_hex(const std::string& data)
{
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
    return buf;
}

}  // namespace

Json run_report(const std::string& command, const std::string& input_path, const Json& payload,
                long long elapsed_ms)
{
    Json j;
    j["tool"] = "toricdef";
    j["version"] = kToolVersion;
    j["command"] = command;
    if (!input_path.empty()) {
        std::ifstream in(input_path, std::ios::binary);
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        Json input;
        input["path"] = input_path;
        input["fnv1a64"] = fnv1a_hex(content);
        try {
            input["echo"] = Json::parse(content);
        } catch (const std::exception&) {
        }
        j["input"] = input;
    }
    j["result"] = payload;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

Json hilbert_report(const Cone& c, const HilbertBasis& hb)
{
    Json j;
    Json e = Json::array();
    for (const auto& v : hb.E)
        e.push_back(json_vec(v));
    j["E"] = e;
    j["count"] = hb.size();
    Json interior = Json::array();
    for (size_t v : interior_elements(c, hb))
        interior.push_back(json_vec(hb.E[v]));
    j["interior_elements"] = interior;
    return j;
}

Json t1_report(const Cone& c, const HilbertBasis& hb, const IntVec& R)
{
    const DegreeData dd = degree_data(c, hb, R);
    const T1Piece t1 = t1_piece(dd);
    Json j;
    j["degree"] = json_vec(R);
    j["t1_dim"] = t1.dim;
    Json basis = Json::array();
    for (const auto& b : t1.basis)
        basis.push_back(json_vec(b.vals));
    j["basis"] = basis;
    return j;
}

Json t2_report(const Cone& c, const HilbertBasis& hb, const IntVec& R)
{
    const DegreeData dd = degree_data(c, hb, R);
    const T1Piece t1 = t1_piece(dd);
    const T2Piece t2 = t2_piece(dd);
    Json j;
    j["degree"] = json_vec(R);
    j["t1_dim"] = t1.dim;
    j["t2_dim"] = t2.dim;
    j["t2_is_exact"] = t2.exact;
    if (!t2.label.empty())
        j["t2_label"] = t2.label;
    Json basis = Json::array();
    for (const auto& b : t2.basis)
        basis.push_back(json_vec(b.canonical));
    j["basis"] = basis;
    return j;
}

Json scan_report(const Cone& c, const HilbertBasis& hb, const Int& bound)
{
    const auto entries = degree_scan(c, hb, bound);
    Json j;
    j["bound"] = json_int(bound);
    j["box_note"] = "heuristic scan box; nonzero pieces outside it are not reported";
    Json list = Json::array();
    size_t total1 = 0, total2 = 0;
    for (const auto& e : entries) {
        Json row;
        row["degree"] = json_vec(e.R);
        row["t1_dim"] = e.t1;
        row["t2_dim"] = e.t2;
        row["t2_is_exact"] = e.t2_exact;
        list.push_back(row);
        total1 += e.t1;
        total2 += e.t2;
    }
    j["entries"] = list;
    j["total_t1"] = total1;
    j["total_t2"] = total2;
    if (c.rank == 2)
        j["t2_note"] = "two-dimensional cone: the obstruction formula does not apply; "
                       "reported values are the (always vanishing) H^1";
    return j;
}

Json cup_report(const Cone& c, const HilbertBasis& hb, const IntVec& R, const IntVec& S,
                size_t phi_index, size_t psi_index)
{
    const DegreeData dd_R = degree_data(c, hb, R);
    const DegreeData dd_S = degree_data(c, hb, S);
    const DegreeData dd_T = degree_data(c, hb, R + S);
    const T1Piece t1R = t1_piece(dd_R);
    const T1Piece t1S = t1_piece(dd_S);
    if (phi_index >= t1R.dim)
        fail(ErrorKind::InputError, "cup: phi index out of range (t1 dim is " +
                                        std::to_string(t1R.dim) + ")");
    if (psi_index >= t1S.dim)
        fail(ErrorKind::InputError, "cup: psi index out of range (t1 dim is " +
                                        std::to_string(t1S.dim) + ")");
    const SectionPhi Phi(c, hb);
    const T2Element prod =
        cup(dd_R, dd_S, dd_T, Phi, t1R.basis[phi_index], t1S.basis[psi_index]);

    Json j;
    j["degR"] = json_vec(R);
    j["degS"] = json_vec(S);
    j["phi_index"] = phi_index;
    j["psi_index"] = psi_index;
    j["result_degree"] = json_vec(prod.R);
    j["canonical_form"] = json_vec(prod.canonical);
    j["is_zero_class"] = prod.class_is_zero();

    // For cones at height one over a polygon, also bridge to the edge plane.
    bool gorenstein = c.rank == 3;
    for (const auto& g : c.generators)
        gorenstein = gorenstein && g[2] == 1;
    if (gorenstein && R == IntVec{Int(0), Int(0), Int(1)} && S == R) {
        std::vector<IntVec> verts;
        for (const auto& g : c.generators)
            verts.push_back({g[0], g[1]});
        GorensteinContext ctx;
        ctx.Q.vertices = verts;
        ctx.cone = c;
        ctx.hb = hb;
        ctx.Rstar = {Int(0), Int(0), Int(1)};
        const auto bridged = bridged_vector(ctx, dd_T, prod);
        if (bridged)
            j["bridged_vector"] = json_vec(*bridged);
    }
    return j;
}

Json gorenstein_report(const LatticePolygon& q, const Int& kmax, bool verify)
{
    GorensteinContext ctx = cone_from_polygon(q);
    const auto [k1, k2] = k_thresholds(q);
    const DegreeData dd_R = degree_data(ctx.cone, ctx.hb, ctx.Rstar);
    const SummandSpace ss = summand_space(q);

    Json j;
    j["N"] = q.size();
    j["primitive_edges"] = q.primitive_edges();
    if (!q.primitive_edges())
        j["caveat"] = "polygon has non-primitive edges: closed-form shortcuts assume "
                      "primitive edges and may disagree with the general machinery";
    // whether the apex direction is itself a minimal semigroup generator
    // (true iff the polygon is not a Minkowski sum of smaller ones)
    j["apex_direction_in_E"] = ctx.hb.index_of(ctx.Rstar) != size_t(-1);
    j["t1_dim"] = t1_piece(dd_R).dim;
    j["summand_space_dim"] = ss.V.dim();
    j["k1"] = json_int(k1);
    j["k2"] = json_int(k2);

    Json dims;
    for (Int k = 2; k <= kmax; ++k) {
        const size_t cf = t2_dim_closed_form(k1, k2, k);
        dims[k.str()] = cf;
    }
    j["t2_dims"] = dims;

    // Cup table of the closed form on a basis of V modulo the all-ones line.
    const Space line(q.size(), {ss.one});
    const std::vector<RatVec> basis = complement_in(line, ss.V);
    Json cups = Json::array();
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a; b < basis.size(); ++b) {
            Json row;
            row["s"] = json_vec(basis[a]);
            row["t"] = json_vec(basis[b]);
            row["value"] = json_vec(cup_closed_form(q, basis[a], basis[b]));
            cups.push_back(row);
        }
    j["cup_table"] = cups;

    const VersalReport vr = versal_equations(q, kmax);
    Json eqs = Json::array();
    for (const auto& eq : vr.equations) {
        Json row;
        row["k"] = json_int(eq.k);
        Json cx = Json::array(), cy = Json::array();
        for (const auto& dvec : eq.coefficients) {
            cx.push_back(json_int(dvec[0]));
            cy.push_back(json_int(dvec[1]));
        }
        row["eq_x_coefficients"] = cx;
        row["eq_y_coefficients"] = cy;
        row["note"] = "sum_i t_i^k * d^i = 0";
        eqs.push_back(row);
    }
    j["versal_equations"] = eqs;
    j["versal_linear_part_cuts_summand_space"] = vr.linear_part_cuts_V;
    j["versal_quadratic_part_matches_cup"] = vr.quadratic_part_matches_cup;

    if (verify) {
        const CrossValidateReport cv = cross_validate(ctx, kmax);
        Json v;
        Json rows = Json::array();
        for (const auto& e : cv.dims) {
            Json row;
            row["k"] = json_int(e.k);
            row["closed_form"] = e.closed_form;
            row["machinery"] = e.machinery;
            row["embedding"] = e.embedding;
            row["match"] = e.match;
            rows.push_back(row);
        }
        v["t2_dims"] = rows;
        v["cup_comparison_ran"] = cv.cup_comparison_ran;
        if (!cv.cup_comparison_ran)
            v["cup_skip_reason"] = cv.cup_skip_reason;
        Json cupRows = Json::array();
        for (const auto& e : cv.cups) {
            Json row;
            row["s_index"] = e.s_index;
            row["t_index"] = e.t_index;
            row["general"] = json_vec(e.general);
            row["closed_form"] = json_vec(e.closed_form);
            row["match"] = e.match;
            cupRows.push_back(row);
        }
        v["cups"] = cupRows;
        v["all_match"] = cv.all_match;
        j["verify"] = v;
    }
    return j;
}

}  // namespace toric
