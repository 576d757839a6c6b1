#include "trochoid/render.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace trochoid {

namespace {

void append_shortest(std::string& out, double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  out.append(buf, ptr);
}

void append_fixed(std::string& out, double value) {
  char buf[48];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 4);
  (void)ec;
  std::string_view text(buf, static_cast<std::size_t>(ptr - buf));
  if (text == "-0.0000") text = "0.0000";
  out.append(text);
}

double parse_double(std::string_view field, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::invalid_argument("bad CSV number on line " + std::to_string(line));
  }
  return value;
}

}  // namespace

std::string to_svg(std::span<const Trace> traces, const RenderStyle& style) {
  if (traces.empty()) throw std::invalid_argument("nothing to render");
  if (!(style.stroke_width > 0.0) || style.palette.empty() || !(style.size > 0.0) || style.margin < 0.0) {
    throw std::invalid_argument("invalid render style");
  }
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const Trace& trace : traces) {
    if (trace.frame != traces.front().frame) throw std::invalid_argument("traces mix frames");
    if (trace.samples.empty()) throw std::invalid_argument("cannot render an empty trace");
    for (const Sample& s : trace.samples) {
      min_x = std::min(min_x, s.p.x);
      max_x = std::max(max_x, s.p.x);
      min_y = std::min(min_y, s.p.y);
      max_y = std::max(max_y, s.p.y);
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double scale = style.size / span;
  const double width = (max_x - min_x) * scale + 2.0 * style.margin;
  const double height = (max_y - min_y) * scale + 2.0 * style.margin;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
  append_fixed(out, width);
  out += "\" height=\"";
  append_fixed(out, height);
  out += "\" viewBox=\"0 0 ";
  append_fixed(out, width);
  out += ' ';
  append_fixed(out, height);
  out += "\">\n<g fill=\"none\" stroke-width=\"";
  append_fixed(out, style.stroke_width);
  out += "\" stroke-linejoin=\"round\" stroke-linecap=\"round\">\n";

  for (std::size_t i = 0; i < traces.size(); ++i) {
    const Trace& trace = traces[i];
    out += "<path stroke=\"" + style.palette[i % style.palette.size()] + "\" d=\"";
    bool first = true;
    for (const Sample& s : trace.samples) {
      out += first ? "M" : " L";
      first = false;
      append_fixed(out, style.margin + (s.p.x - min_x) * scale);
      out += ' ';
      append_fixed(out, style.flip_y ? style.margin + (max_y - s.p.y) * scale
                                     : style.margin + (s.p.y - min_y) * scale);
    }
    if (trace.closed) out += " Z";
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string to_csv(const Trace& trace) {
  std::string out = "t,x,y\n";
  out.reserve(out.size() + trace.samples.size() * 64);
  for (const Sample& s : trace.samples) {
    append_shortest(out, s.t);
    out += ',';
    append_shortest(out, s.p.x);
    out += ',';
    append_shortest(out, s.p.y);
    out += '\n';
  }
  return out;
}

std::vector<Sample> parse_csv(std::string_view text) {
  std::vector<Sample> samples;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != "t,x,y") throw std::invalid_argument("CSV header must be 't,x,y'");
      continue;
    }
    if (line.empty()) continue;
    auto c1 = line.find(',');
    auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos) throw std::invalid_argument("CSV row needs three fields on line " + std::to_string(line_no));
    samples.push_back({parse_double(line.substr(0, c1), line_no),
                       {parse_double(line.substr(c1 + 1, c2 - c1 - 1), line_no),
                        parse_double(line.substr(c2 + 1), line_no)}});
  }
  return samples;
}

}  // namespace trochoid
