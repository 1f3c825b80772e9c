#include "qhardy/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qhardy/error.hpp"

namespace qhardy::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

double number(const json& j) {
    if (!j.is_number()) malformed("expected a number");
    return j.get<double>();
}

json complex_array(const std::vector<std::complex<double>>& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back({z.real(), z.imag()});
    return a;
}

std::vector<std::complex<double>> complex_from_json(const json& j) {
    if (!j.is_array()) malformed("expected an array of [re, im] pairs");
    std::vector<std::complex<double>> v;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) malformed("complex coefficient must be [re, im]");
        v.emplace_back(number(e[0]), number(e[1]));
    }
    return v;
}

}  // namespace

json to_json(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }
json to_json(const UnitImaginary& I) { return {I.x(), I.y(), I.z()}; }

json to_json(const QSeries& f) {
    json coeffs = json::array();
    for (const auto& a : f.coeffs()) coeffs.push_back(to_json(a));
    return {{"degree", f.degree()}, {"coeffs", coeffs}};
}

json to_json(const SplitPair& p) {
    return {{"I", to_json(p.I)}, {"J", to_json(p.J)}, {"F", complex_array(p.F)}, {"G", complex_array(p.G)}};
}

json to_json(const ZeroSet& z) {
    json iso = json::array();
    for (const auto& q : z.isolated) iso.push_back(to_json(q));
    json sph = json::array();
    for (const auto& s : z.spheres) sph.push_back({s.x, s.y});
    return {{"isolated", iso}, {"spheres", sph}};
}

json to_json(const GramSystem& g) {
    json rows = json::array();
    for (std::size_t r = 0; r < g.G.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < g.G.cols(); ++c) row.push_back(to_json(g.G(r, c)));
        rows.push_back(row);
    }
    json beta = json::array();
    for (const auto& b : g.beta) beta.push_back(to_json(b));
    return {{"n", g.n}, {"G", rows}, {"beta", beta}};
}

json to_json(const InnerReport& r) {
    json params = {{"tol", r.tol}};
    switch (r.method) {
        case InnerMethod::Moment: params["K"] = r.K; break;
        case InnerMethod::Splitting: params["M"] = r.nodes; break;
        case InnerMethod::Norm:
            params["M"] = r.nodes;
            params["slices"] = r.slices;
            break;
    }
    return {{"verdict", r.verdict}, {"max_defect", r.max_defect}, {"method", to_string(r.method)},
            {"parameters", params}};
}

json to_json(const ApproximantReport& r) {
    return {{"n", r.n}, {"p_n", to_json(r.p_n)}, {"dist2", r.dist2}, {"p_n_at_0", to_json(r.p_n_at_0)},
            {"basis_mass", r.basis_mass}};
}

Quaternion quaternion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) malformed("quaternion must be [w, x, y, z]");
    return {number(j[0]), number(j[1]), number(j[2]), number(j[3])};
}

UnitImaginary unit_imaginary_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) malformed("unit imaginary must be [x, y, z]");
    return {number(j[0]), number(j[1]), number(j[2])};
}

QSeries series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs")) {
        malformed("series must be {\"degree\": N, \"coeffs\": [...]}");
    }
    if (!j["degree"].is_number_integer() || j["degree"].get<long long>() < 0) malformed("degree must be an integer >= 0");
    const auto N = j["degree"].get<std::size_t>();
    const json& c = j["coeffs"];
    if (!c.is_array() || c.size() != N + 1) malformed("coeffs must have exactly degree+1 entries");
    std::vector<Quaternion> a;
    a.reserve(N + 1);
    for (const auto& e : c) a.push_back(quaternion_from_json(e));
    return QSeries(std::move(a));
}

SplitPair split_pair_from_json(const json& j) {
    if (!j.is_object()) malformed("split pair must be an object");
    for (const char* key : {"I", "J", "F", "G"}) {
        if (!j.contains(key)) malformed(std::string("split pair is missing ") + key);
    }
    SplitPair p{unit_imaginary_from_json(j["I"]), unit_imaginary_from_json(j["J"]), complex_from_json(j["F"]),
                complex_from_json(j["G"])};
    if (p.F.size() != p.G.size()) malformed("F and G must have equal length");
    return p;
}

ZeroSet zero_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("isolated") || !j.contains("spheres")) malformed("zero set needs isolated and spheres");
    ZeroSet z;
    for (const auto& e : j["isolated"]) z.isolated.push_back(quaternion_from_json(e));
    for (const auto& e : j["spheres"]) {
        if (!e.is_array() || e.size() != 2) malformed("sphere must be [x, y]");
        const Sphere sp{number(e[0]), number(e[1])};
        if (!(sp.y > 0)) malformed("sphere radius y must be > 0");
        z.spheres.push_back(sp);
    }
    return z;
}

QSeries read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) malformed("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        malformed(path + ": " + e.what());
    }
    return series_from_json(j);
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string approximant_csv_header() { return "n,dist2,p0_w,p0_x,p0_y,p0_z,basis_mass"; }

std::string approximant_csv_row(const ApproximantReport& r) {
    std::ostringstream os;
    os << r.n << ',' << format_number(r.dist2) << ',' << format_number(r.p_n_at_0.w) << ','
       << format_number(r.p_n_at_0.x) << ',' << format_number(r.p_n_at_0.y) << ',' << format_number(r.p_n_at_0.z)
       << ',' << format_number(r.basis_mass);
    return os.str();
}

}  // namespace qhardy::io
