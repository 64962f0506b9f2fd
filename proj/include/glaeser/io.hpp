#pragma once

#include <string>
#include <vector>

#include "glaeser/geometry.hpp"

namespace glaeser::io {

/// Deterministic shortest round-trip formatting of a double.
std::string format_double(double v);

/// Write content to path atomically (temp file in the same directory, then
/// rename); parent directories are created as needed.
void write_text_atomic(const std::string& path, const std::string& content);

/// RFC-style CSV: header row then data rows; fields are quoted when they
/// contain a comma, quote, or newline.
std::string make_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

/// Minimal direct SVG emitter (no plotting dependency).
class SvgBuilder {
  public:
    /// viewBox matches the data window; y is flipped so larger data y is up.
    SvgBuilder(Box window, int pixel_width = 640);

    void add_rect(Box b, const std::string& fill, double opacity = 1.0);
    void add_polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                      double width = 0.01, bool closed = false);
    void add_circle(Vec2 center, double radius, const std::string& fill);
    void add_text(Vec2 pos, const std::string& text, double size);
    std::string str() const;

  private:
    Box window_;
    int pixel_width_;
    std::string body_;
    double flip_y(double y) const { return window_.lo.y + window_.hi.y - y; }
};

/// key = value configuration line (comments with '#', blank lines skipped).
struct ConfigEntry {
    std::string key;
    std::string value;
    int line = 0;
};

/// Parse a key=value file; throws ConfigError with a line diagnostic on
/// malformed lines.
std::vector<ConfigEntry> parse_key_values(const std::string& path);

} // namespace glaeser::io
