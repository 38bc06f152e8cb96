#include "vexspace/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace vexspace {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json Json::object() { Json j; j.type_ = Type::object; return j; }
Json Json::array() { Json j; j.type_ = Type::array; return j; }
Json Json::num(double v) { Json j; j.type_ = Type::number; j.num_ = v; return j; }
Json Json::integer(long long v) { Json j; j.type_ = Type::integer; j.int_ = v; return j; }
Json Json::str(std::string s) { Json j; j.type_ = Type::string; j.str_ = std::move(s); return j; }
Json Json::boolean(bool b) { Json j; j.type_ = Type::boolean; j.bool_ = b; return j; }

Json& Json::set(const std::string& key, Json v) {
    if (type_ != Type::object) throw std::logic_error("Json::set on non-object");
    members_.emplace_back(key, std::move(v));
    return *this;
}

Json& Json::push(Json v) {
    if (type_ != Type::array) throw std::logic_error("Json::push on non-array");
    items_.push_back(std::move(v));
    return *this;
}

namespace {
void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    out += '"';
}
} // namespace

void Json::write(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad1(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (type_) {
        case Type::number: {
            if (std::isfinite(num_)) out += format_double(num_);
            else write_escaped(out, format_double(num_));
            break;
        }
        case Type::integer: out += std::to_string(int_); break;
        case Type::string: write_escaped(out, str_); break;
        case Type::boolean: out += bool_ ? "true" : "false"; break;
        case Type::object: {
            if (members_.empty()) { out += "{}"; break; }
            out += "{\n";
            for (std::size_t i = 0; i < members_.size(); ++i) {
                out += pad1;
                write_escaped(out, members_[i].first);
                out += ": ";
                members_[i].second.write(out, indent, depth + 1);
                if (i + 1 < members_.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            break;
        }
        case Type::array: {
            if (items_.empty()) { out += "[]"; break; }
            out += "[\n";
            for (std::size_t i = 0; i < items_.size(); ++i) {
                out += pad1;
                items_[i].write(out, indent, depth + 1);
                if (i + 1 < items_.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            break;
        }
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    out += '\n';
    return out;
}

Json Report::to_json() const {
    Json j = Json::object();
    j.set("name", Json::str(name));
    j.set("pass", Json::boolean(pass));
    if (skipped) j.set("skipped", Json::boolean(true));
    Json arr = Json::array();
    for (const auto& it : items) {
        Json ij = Json::object();
        ij.set("claim", Json::str(it.claim));
        ij.set("lhs", Json::num(it.lhs));
        ij.set("rhs", Json::num(it.rhs));
        ij.set("margin", Json::num(it.margin));
        ij.set("pass", Json::boolean(it.pass));
        arr.push(std::move(ij));
    }
    j.set("items", std::move(arr));
    if (!metrics.empty()) {
        Json m = Json::object();
        for (const auto& [k, v] : metrics) m.set(k, Json::num(v));
        j.set("metrics", std::move(m));
    }
    if (!notes.empty()) {
        Json n = Json::array();
        for (const auto& s : notes) n.push(Json::str(s));
        j.set("notes", std::move(n));
    }
    return j;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        out += header[i];
        out += (i + 1 < header.size()) ? "," : "\n";
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += format_double(row[i]);
            out += (i + 1 < row.size()) ? "," : "\n";
        }
    }
    write_text_file(path, out);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << content;
}

} // namespace vexspace
