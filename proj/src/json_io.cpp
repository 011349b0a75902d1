#include "haal/json_io.hpp"

#include "haal/errors.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

namespace haal {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatVector& v)
{
    Json a = Json::array();
    for (auto& x : v)
        a.push_back(to_string(x));
    return a;
}

Json to_json(const RatMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(to_json(m.row(i)));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const Quaternion& h)
{
    return Json::array({to_string(h.x), to_string(h.y), to_string(h.z), to_string(h.w)});
}

Json to_json(const QuatMatrix& q)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < q.size(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < q.size(); ++j)
            r.push_back(to_json(q(i, j)));
        rows.push_back(r);
    }
    return rows;
}

Json to_json(const IntPoly& p)
{
    Json a = Json::array();
    for (auto& c : p.coeffs())
        a.push_back(c.get_str());
    return a;
}

Json to_json(const RatPoly& p)
{
    Json a = Json::array();
    for (auto& c : p.coeffs())
        a.push_back(to_string(c));
    return a;
}

Json to_json(const SigmaTuple& s)
{
    return Json{{"r", s.r}, {"m", s.m}, {"p", s.p}, {"s", s.s}};
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_number_unsigned())
        return Rational(Integer(std::to_string(j.get<unsigned long long>())));
    if (j.is_number_float())
        return Rational(j.get<double>());
    throw ParseError(0, "expected a rational number, got " + j.dump());
}

RatVector vector_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError(0, "expected an array of rationals");
    RatVector v;
    for (auto& x : j)
        v.push_back(rational_from_json(x));
    return v;
}

RatMatrix matrix_from_json(const Json& j)
{
    const Json* entries = &j;
    std::size_t rows = 0, cols = 0;
    bool sized = false;
    if (j.is_object()) {
        if (!j.contains("entries"))
            throw ParseError(0, "matrix object needs an \"entries\" field");
        entries = &j.at("entries");
        if (j.contains("rows") && j.contains("cols")) {
            rows = j.at("rows").get<std::size_t>();
            cols = j.at("cols").get<std::size_t>();
            sized = true;
        }
    }
    if (!entries->is_array())
        throw ParseError(0, "matrix entries must be a nested array");
    std::vector<RatVector> r;
    for (auto& row : *entries)
        r.push_back(vector_from_json(row));
    for (auto& row : r)
        if (row.size() != (r.empty() ? 0 : r[0].size()))
            throw ParseError(0, "ragged matrix rows");
    if (sized && (r.size() != rows || (rows > 0 && r[0].size() != cols)))
        throw ParseError(0, "matrix entries do not match rows/cols");
    if (r.empty())
        return RatMatrix(rows, cols);
    return RatMatrix::from_rows(r);
}

Quaternion quaternion_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 4)
        throw ParseError(0, "quaternion must be an array of four rationals");
    return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
}

QuatMatrix quat_matrix_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError(0, "quaternionic matrix must be a nested array");
    QuatMatrix q(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != j.size())
            throw ParseError(0, "quaternionic matrix must be square");
        for (std::size_t k = 0; k < j.size(); ++k)
            q(i, k) = quaternion_from_json(j[i][k]);
    }
    return q;
}

IntPoly intpoly_from_json(const Json& j)
{
    if (j.is_string())
        return parse_poly(j.get<std::string>());
    if (!j.is_array())
        throw ParseError(0, "polynomial must be a coefficient array or a string");
    std::vector<Integer> c;
    for (auto& x : j) {
        Rational q = rational_from_json(x);
        if (!is_integer(q))
            throw ParseError(0, "polynomial coefficients must be integers");
        c.push_back(q.get_num());
    }
    return IntPoly(std::move(c));
}

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw ParseError(0, "cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_json_text(text);
}

}  // namespace haal
