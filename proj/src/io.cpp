#include "glaeser/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace glaeser::io {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open temp file for " + path);
        out << content;
        if (!out) throw Error("write failed for " + path);
    }
    fs::rename(tmp, target);
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string make_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << csv_field(header[i]);
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_field(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

SvgBuilder::SvgBuilder(Box window, int pixel_width)
    : window_(window), pixel_width_(pixel_width) {}

void SvgBuilder::add_rect(Box b, const std::string& fill, double opacity) {
    std::ostringstream s;
    s << "<rect x=\"" << format_double(b.lo.x) << "\" y=\""
      << format_double(flip_y(b.hi.y)) << "\" width=\""
      << format_double(b.hi.x - b.lo.x) << "\" height=\""
      << format_double(b.hi.y - b.lo.y) << "\" fill=\"" << fill
      << "\" fill-opacity=\"" << format_double(opacity) << "\"/>\n";
    body_ += s.str();
}

void SvgBuilder::add_polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                              double width, bool closed) {
    if (pts.empty()) return;
    std::ostringstream s;
    s << (closed ? "<polygon" : "<polyline") << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s << ' ';
        s << format_double(pts[i].x) << ',' << format_double(flip_y(pts[i].y));
    }
    s << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
      << format_double(width) << "\"/>\n";
    body_ += s.str();
}

void SvgBuilder::add_circle(Vec2 center, double radius, const std::string& fill) {
    std::ostringstream s;
    s << "<circle cx=\"" << format_double(center.x) << "\" cy=\""
      << format_double(flip_y(center.y)) << "\" r=\"" << format_double(radius)
      << "\" fill=\"" << fill << "\"/>\n";
    body_ += s.str();
}

void SvgBuilder::add_text(Vec2 pos, const std::string& text, double size) {
    std::ostringstream s;
    s << "<text x=\"" << format_double(pos.x) << "\" y=\""
      << format_double(flip_y(pos.y)) << "\" font-size=\"" << format_double(size)
      << "\">" << text << "</text>\n";
    body_ += s.str();
}

std::string SvgBuilder::str() const {
    std::ostringstream s;
    const double w = window_.hi.x - window_.lo.x;
    const double h = window_.hi.y - window_.lo.y;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << format_double(window_.lo.x) << ' ' << format_double(window_.lo.y) << ' '
      << format_double(w) << ' ' << format_double(h) << "\" width=\""
      << pixel_width_ << "\" height=\""
      << static_cast<int>(pixel_width_ * h / w) << "\">\n"
      << body_ << "</svg>\n";
    return s.str();
}

std::vector<ConfigEntry> parse_key_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::vector<ConfigEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string{};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        const std::string trimmed = trim(line);
        if (trimmed.empty()) continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected key = value, got '" + trimmed + "'");
        }
        ConfigEntry e;
        e.key = trim(trimmed.substr(0, eq));
        e.value = trim(trimmed.substr(eq + 1));
        e.line = lineno;
        if (e.key.empty()) {
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

} // namespace glaeser::io
