#include "json_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "rot4/tolerances.hpp"

namespace rot4::cli {

namespace {

std::array<double, 4> parse_factor(const Json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw CliError(kExitMalformed, std::string("rotation document is missing \"") + key + "\"");
    }
    if (!it->is_array() || it->size() != 4) {
        throw CliError(kExitMalformed, std::string("\"") + key + "\" must be an array of 4 numbers");
    }
    std::array<double, 4> out{};
    for (std::size_t c = 0; c < 4; ++c) {
        const Json& x = (*it)[c];
        if (!x.is_number()) {
            throw CliError(kExitMalformed, std::string("\"") + key + "\" contains a non-number");
        }
        out[c] = x.get<double>();
        if (!std::isfinite(out[c])) {
            throw CliError(kExitMalformed, std::string("\"") + key + "\" contains a non-finite number");
        }
    }
    return out;
}

Quaternion admit(const std::array<double, 4>& c, const char* key, bool normalize) {
    const Quaternion q = Quaternion::from_components(c);
    if (normalize) {
        if (norm(q) == 0.0) throw CliError(kExitNonUnit, std::string("factor \"") + key + "\" is zero");
        return q / norm(q);
    }
    if (!is_unit(q, tol::kUnit)) {
        throw CliError(kExitNonUnit, std::string("factor \"") + key + "\" is not a unit quaternion (|x|^2 = " +
                                         fmt6(norm_sq(q)) + "); pass --normalize to rescale");
    }
    return q;
}

void write_value(std::ostream& out, const Json& j) {
    switch (j.type()) {
        case Json::value_t::object: {
            out << '{';
            bool first = true;
            for (const auto& [k, v] : j.items()) {
                if (!first) out << ',';
                first = false;
                out << Json(k).dump() << ':';
                write_value(out, v);
            }
            out << '}';
            break;
        }
        case Json::value_t::array: {
            out << '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out << ',';
                first = false;
                write_value(out, v);
            }
            out << ']';
            break;
        }
        case Json::value_t::number_float: {
            const double x = j.get<double>();
            if (!std::isfinite(x)) {
                out << "null";
                break;
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            out << buf;
            break;
        }
        default: out << j.dump(); break;
    }
}

}  // namespace

RotationDoc parse_doc(const Json& j) {
    if (!j.is_object()) throw CliError(kExitMalformed, "rotation document must be a JSON object");
    return {parse_factor(j, "a"), parse_factor(j, "b")};
}

Json to_json(const RotationDoc& doc) {
    Json j;
    j["a"] = doc.a;
    j["b"] = doc.b;
    return j;
}

RotationDoc to_doc(const Rotation4& r) { return {r.a().components(), r.b().components()}; }

Rotation4 to_rotation(const RotationDoc& doc, bool normalize) {
    return {admit(doc.a, "a", normalize), admit(doc.b, "b", normalize)};
}

Json quaternion_json(const Quaternion& q) { return q.components(); }

Json plane_json(const Plane& p) {
    Json j;
    j["u"] = quaternion_json(p.u);
    j["w"] = quaternion_json(p.w);
    return j;
}

Json matrix_json(const Matrix4& m) { return m.m; }

void write_json(std::ostream& out, const Json& j) {
    write_value(out, j);
    out << '\n';
}

std::string dump_json(const Json& j) {
    std::ostringstream os;
    write_value(os, j);
    return os.str();
}

std::vector<Json> read_json_values(std::istream& in) {
    std::vector<Json> out;
    for (;;) {
        in >> std::ws;
        if (in.peek() == std::char_traits<char>::eof()) break;
        try {
            Json j;
            in >> j;
            out.push_back(std::move(j));
        } catch (const Json::exception& e) {
            throw CliError(kExitMalformed, std::string("malformed JSON input: ") + e.what());
        }
    }
    return out;
}

std::vector<RotationDoc> collect_docs(const std::vector<Json>& values) {
    std::vector<RotationDoc> docs;
    for (const Json& v : values) {
        if (v.is_array()) {
            for (const Json& e : v) docs.push_back(parse_doc(e));
        } else {
            docs.push_back(parse_doc(v));
        }
    }
    return docs;
}

std::string fmt6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string quaternion_text(const Quaternion& q) {
    static constexpr const char* kUnits[] = {"", "i", "j", "k"};
    std::string out;
    for (int c = 0; c < 4; ++c) {
        const double x = q[c];
        if (std::abs(x) < 5e-7) continue;
        const std::string mag = fmt6(std::abs(x));
        if (out.empty()) {
            out += x < 0.0 ? "-" : "";
        } else {
            out += x < 0.0 ? " - " : " + ";
        }
        out += (c > 0 && mag == "1") ? std::string() : mag;
        out += kUnits[c];
    }
    return out.empty() ? "0" : out;
}

std::string plane_text(const Plane& p) { return "span{" + quaternion_text(p.u) + ", " + quaternion_text(p.w) + "}"; }

}  // namespace rot4::cli
