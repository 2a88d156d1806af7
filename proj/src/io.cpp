#include "blockrec/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace blockrec {

std::string fmt_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    const char* begin = s.c_str();
    char* end = nullptr;
    double x = std::strtod(begin, &end);
    if (end == begin || end != begin + s.size())
        throw std::invalid_argument("parse_double: cannot parse '" + s + "'");
    return x;
}

namespace {

const char* kind_name(ObsKind kind) { return kind == ObsKind::Ros ? "ros" : "sbm"; }

ObsKind kind_from_name(const std::string& name) {
    if (name == "ros") return ObsKind::Ros;
    if (name == "sbm") return ObsKind::Sbm;
    throw std::invalid_argument("observation: unknown kind '" + name + "'");
}

}  // namespace

std::string observation_to_text(const Observation& obs) {
    std::string out = "BLOCKREC-OBS v1 n=" + std::to_string(obs.n()) + " kind=" + kind_name(obs.kind) + "\n";
    for (int i = 0; i < obs.n(); ++i) {
        for (int j = 0; j < obs.n(); ++j) {
            if (j > 0) out += ' ';
            out += fmt_double(obs.a(i, j));
        }
        out += '\n';
    }
    return out;
}

Observation observation_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string magic, version, nfield, kindfield;
    if (!(in >> magic >> version >> nfield >> kindfield) || magic != "BLOCKREC-OBS" || version != "v1" ||
        nfield.rfind("n=", 0) != 0 || kindfield.rfind("kind=", 0) != 0)
        throw std::invalid_argument("observation: malformed header");
    int n = 0;
    {
        const std::string digits = nfield.substr(2);
        auto res = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (res.ec != std::errc() || res.ptr != digits.data() + digits.size() || n < 1)
            throw std::invalid_argument("observation: bad n in header");
    }
    ObsKind kind = kind_from_name(kindfield.substr(5));
    Mat m(n);
    std::string token;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!(in >> token)) throw std::invalid_argument("observation: truncated matrix body");
            m(i, j) = parse_double(token);
        }
    if (in >> token) throw std::invalid_argument("observation: trailing data after matrix body");
    return Observation::from_matrix(kind, std::move(m));
}

std::string labels_to_text(const std::vector<std::int8_t>& labels) {
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(int(labels[i]));
    }
    out += '\n';
    return out;
}

std::vector<std::int8_t> labels_from_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::int8_t> labels;
    int v = 0;
    while (in >> v) {
        if (v != 1 && v != -1 && v != 0) throw std::invalid_argument("labels: entries must be +-1 or 0");
        labels.push_back(static_cast<std::int8_t>(v));
    }
    if (!in.eof()) throw std::invalid_argument("labels: non-integer token");
    if (labels.empty()) throw std::invalid_argument("labels: empty input");
    return labels;
}

std::string scores_to_text(const ScoreVector& z) {
    std::string out;
    for (double x : z.values) {
        out += fmt_double(x);
        out += '\n';
    }
    return out;
}

ScoreVector scores_from_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<double> values;
    std::string token;
    while (in >> token) values.push_back(parse_double(token));
    return ScoreVector::from_values(std::move(values));
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace blockrec
