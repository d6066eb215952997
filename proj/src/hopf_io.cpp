#include "orbicat/hopf_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace orbicat {
namespace {

using json = nlohmann::ordered_json;

json scalar_to_json(const CycScalar& c, const CycField* field) {
    if (c.is_rational()) return to_string(c.rational_value());
    CycScalar lifted = c.lift_to(field);
    json arr = json::array();
    for (const auto& q : lifted.coeffs()) arr.push_back(to_string(q));
    return arr;
}

CycScalar scalar_from_json(const json& j, const CycField* field, const char* where) {
    if (j.is_string()) {
        auto q = parse_rational(j.get<std::string>());
        if (!q) throw std::runtime_error(std::string("bad rational in ") + where);
        return CycScalar(*q);
    }
    if (j.is_array()) {
        if (static_cast<long>(j.size()) != field->degree())
            throw std::runtime_error(std::string("coefficient array of wrong length in ") + where);
        std::vector<Rational> coeffs;
        for (const auto& e : j) {
            if (!e.is_string())
                throw std::runtime_error(std::string("non-string coefficient in ") + where);
            auto q = parse_rational(e.get<std::string>());
            if (!q) throw std::runtime_error(std::string("bad rational in ") + where);
            coeffs.push_back(*q);
        }
        return CycScalar(field, std::move(coeffs));
    }
    throw std::runtime_error(std::string("scalar must be a string or array in ") + where);
}

}  // namespace

std::string hopf_to_json(const HopfAlgebra& h) {
    long n = h.dim;
    json out;
    out["version"] = 1;
    out["name"] = h.name;
    out["dim"] = n;
    out["conductor"] = h.field->conductor();
    out["labels"] = h.labels;
    json mult = json::array();
    for (long i = 0; i < n; ++i) {
        json row = json::array();
        for (long j = 0; j < n; ++j) {
            json cell = json::array();
            for (long k = 0; k < n; ++k) cell.push_back(scalar_to_json(h.m.at(k, i * n + j), h.field));
            row.push_back(std::move(cell));
        }
        mult.push_back(std::move(row));
    }
    out["mult"] = std::move(mult);
    json unit = json::array();
    for (long k = 0; k < n; ++k) unit.push_back(scalar_to_json(h.u.at(k, 0), h.field));
    out["unit"] = std::move(unit);
    json comult = json::array();
    for (long i = 0; i < n; ++i) {
        json row = json::array();
        for (long j = 0; j < n; ++j) {
            json cell = json::array();
            for (long k = 0; k < n; ++k)
                cell.push_back(scalar_to_json(h.cm.at(j * n + k, i), h.field));
            row.push_back(std::move(cell));
        }
        comult.push_back(std::move(row));
    }
    out["comult"] = std::move(comult);
    json counit = json::array();
    for (long k = 0; k < n; ++k) counit.push_back(scalar_to_json(h.cu.at(0, k), h.field));
    out["counit"] = std::move(counit);
    json antipode = json::array();
    for (long i = 0; i < n; ++i) {
        json row = json::array();
        for (long j = 0; j < n; ++j) row.push_back(scalar_to_json(h.s.at(j, i), h.field));
        antipode.push_back(std::move(row));
    }
    out["antipode"] = std::move(antipode);
    return out.dump(2) + "\n";
}

HopfAlgebra hopf_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("json parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("top level must be an object");
    for (const char* key : {"version", "dim", "conductor", "labels", "mult", "unit",
                            "comult", "counit", "antipode"})
        if (!j.contains(key)) throw std::runtime_error(std::string("missing key: ") + key);
    if (!j["version"].is_number_integer() || j["version"].get<long>() != 1)
        throw std::runtime_error("unsupported version");
    if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
        throw std::runtime_error("dim must be a positive integer");
    long n = j["dim"].get<long>();
    if (!j["conductor"].is_number_integer() || j["conductor"].get<long>() < 1)
        throw std::runtime_error("conductor must be a positive integer");
    long conductor = j["conductor"].get<long>();

    HopfAlgebra h;
    h.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "file";
    h.dim = n;
    h.field = CycField::of(conductor);
    if (!j["labels"].is_array() || static_cast<long>(j["labels"].size()) != n)
        throw std::runtime_error("labels must be an array of length dim");
    for (const auto& l : j["labels"]) {
        if (!l.is_string()) throw std::runtime_error("labels must be strings");
        h.labels.push_back(l.get<std::string>());
    }
    auto shape3 = [&](const json& t, const char* key) {
        if (!t.is_array() || static_cast<long>(t.size()) != n)
            throw std::runtime_error(std::string(key) + " must be dim x dim x dim");
        for (const auto& row : t) {
            if (!row.is_array() || static_cast<long>(row.size()) != n)
                throw std::runtime_error(std::string(key) + " must be dim x dim x dim");
            for (const auto& cell : row)
                if (!cell.is_array() || static_cast<long>(cell.size()) != n)
                    throw std::runtime_error(std::string(key) + " must be dim x dim x dim");
        }
    };
    shape3(j["mult"], "mult");
    shape3(j["comult"], "comult");
    h.m = Mat(n, n * n);
    for (long i = 0; i < n; ++i)
        for (long jj = 0; jj < n; ++jj)
            for (long k = 0; k < n; ++k)
                h.m.at(k, i * n + jj) = scalar_from_json(j["mult"][i][jj][k], h.field, "mult");
    h.cm = Mat(n * n, n);
    for (long i = 0; i < n; ++i)
        for (long jj = 0; jj < n; ++jj)
            for (long k = 0; k < n; ++k)
                h.cm.at(jj * n + k, i) = scalar_from_json(j["comult"][i][jj][k], h.field, "comult");
    if (!j["unit"].is_array() || static_cast<long>(j["unit"].size()) != n)
        throw std::runtime_error("unit must have length dim");
    h.u = Mat(n, 1);
    for (long k = 0; k < n; ++k) h.u.at(k, 0) = scalar_from_json(j["unit"][k], h.field, "unit");
    if (!j["counit"].is_array() || static_cast<long>(j["counit"].size()) != n)
        throw std::runtime_error("counit must have length dim");
    h.cu = Mat(1, n);
    for (long k = 0; k < n; ++k) h.cu.at(0, k) = scalar_from_json(j["counit"][k], h.field, "counit");
    if (!j["antipode"].is_array() || static_cast<long>(j["antipode"].size()) != n)
        throw std::runtime_error("antipode must be dim x dim");
    h.s = Mat(n, n);
    for (long i = 0; i < n; ++i) {
        if (!j["antipode"][i].is_array() || static_cast<long>(j["antipode"][i].size()) != n)
            throw std::runtime_error("antipode must be dim x dim");
        for (long jj = 0; jj < n; ++jj)
            h.s.at(jj, i) = scalar_from_json(j["antipode"][i][jj], h.field, "antipode");
    }
    return h;
}

}  // namespace orbicat
