#include "kstab/json_io.h"

#include <fstream>
#include <stdexcept>

namespace kstab {

OrderedJson rational_json(const Rational& q) { return to_string(q); }

OrderedJson polynomial_json(const Polynomial& p) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
    return arr;
}

OrderedJson piecewise_json(const PiecewisePoly& p) {
    OrderedJson j;
    OrderedJson bps = OrderedJson::array();
    for (const auto& b : p.breakpoints()) bps.push_back(to_string(b));
    OrderedJson pieces = OrderedJson::array();
    for (const auto& piece : p.pieces()) pieces.push_back(polynomial_json(piece));
    j["breakpoints"] = std::move(bps);
    j["pieces"] = std::move(pieces);
    return j;
}

OrderedJson polytope_json(const MomentPolytope& P) {
    OrderedJson j;
    OrderedJson vs = OrderedJson::array();
    for (const auto& v : P.vertices()) vs.push_back(OrderedJson::array({to_string(v.x), to_string(v.y)}));
    j["vertices"] = std::move(vs);
    j["kappa"] = OrderedJson::array({to_string(P.kappa().x), to_string(P.kappa().y)});
    j["dh_exponent"] = P.dh_exponent();
    return j;
}

namespace {

Rational rational_from_json(const OrderedJson& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

}  // namespace

MomentPolytope parse_polytope_json(const OrderedJson& j) {
    if (!j.contains("vertices") || !j.contains("kappa") || !j.contains("dh_exponent"))
        throw std::invalid_argument("polytope JSON needs vertices, kappa, dh_exponent");
    std::vector<Point2> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_array() || v.size() != 2)
            throw std::invalid_argument("polytope vertex must be an [x, y] pair");
        vertices.push_back(Point2{rational_from_json(v[0]), rational_from_json(v[1])});
    }
    const auto& k = j.at("kappa");
    if (!k.is_array() || k.size() != 2) throw std::invalid_argument("kappa must be an [x, y] pair");
    const Point2 kappa{rational_from_json(k[0]), rational_from_json(k[1])};
    const auto& e = j.at("dh_exponent");
    if (!e.is_number_integer() || e.get<long>() < 0)
        throw std::invalid_argument("dh_exponent must be a nonnegative integer");
    return MomentPolytope(std::move(vertices), kappa, static_cast<unsigned>(e.get<long>()));
}

MomentPolytope load_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polytope file: " + path);
    OrderedJson j;
    in >> j;
    return parse_polytope_json(j);
}

}  // namespace kstab
