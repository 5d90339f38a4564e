#include "tlcat/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace tlcat {

namespace {

// Letter per arc, in order of the smaller endpoint.
std::vector<char> arc_labels(const Diagram& d) {
  std::vector<char> label(std::size_t(d.size()), 'o');
  char next = 'a';
  for (int i = 0; i < d.size(); ++i) {
    const int p = d.partner(i);
    if (p < 0 || p < i) continue;
    label[std::size_t(i)] = label[std::size_t(p)] = next;
    next = next == 'z' ? 'A' : next == 'Z' ? 'a' : char(next + 1);
  }
  return label;
}

std::vector<std::string> ascii_lines(const Diagram& d) {
  const auto label = arc_labels(d);
  const int rows = std::max(d.dst(), d.src());
  std::vector<std::string> out;
  out.push_back("  +---+");
  for (int r = 0; r < rows; ++r) {
    std::string line = "   |   |   ";
    if (r < d.dst()) {
      line[0] = label[std::size_t(d.left(r))];
      line[1] = d.vacant(d.left(r)) ? ' ' : '-';
      line[2] = '-';
    }
    if (r < d.src()) {
      line[8] = '-';
      line[9] = d.vacant(d.right(r)) ? ' ' : '-';
      line[10] = label[std::size_t(d.right(r))];
    }
    out.push_back(line);
  }
  out.push_back("  +---+");
  return out;
}

std::string coeff_text(const Scalar& c) { return c.str(); }

std::string escape_xml(const std::string& s) {
  std::string r;
  for (char ch : s) {
    if (ch == '<') r += "&lt;";
    else if (ch == '>') r += "&gt;";
    else if (ch == '&') r += "&amp;";
    else r += ch;
  }
  return r;
}

constexpr double kRow = 30;
constexpr double kWidth = 80;
constexpr double kTop = 40;
constexpr double kPanel = 140;

// One diagram panel with its top-left corner at (x0, 0).
void svg_panel(std::ostringstream& os, const Diagram& d, double x0, const std::string& caption) {
  const int rows = std::max({d.dst(), d.src(), 1});
  const double xl = x0 + 20, xr = xl + kWidth;
  auto y = [](int row) { return kTop + kRow * (row + 0.5); };
  auto pos = [&](int node) { return std::pair{d.is_left(node) ? xl : xr, y(d.row(node))}; };

  os << "<rect x=\"" << xl << "\" y=\"" << kTop << "\" width=\"" << kWidth << "\" height=\"" << kRow * rows
     << "\" fill=\"none\" stroke=\"#bbb\" stroke-dasharray=\"3,3\"/>\n";
  if (!caption.empty())
    os << "<text x=\"" << xl + kWidth / 2 << "\" y=\"" << kTop - 12 << "\" text-anchor=\"middle\">"
       << escape_xml(caption) << "</text>\n";
  for (int i = 0; i < d.size(); ++i) {
    const auto [x, yy] = pos(i);
    const int p = d.partner(i);
    if (p < 0) {
      os << "<circle cx=\"" << x << "\" cy=\"" << yy << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
      continue;
    }
    os << "<circle cx=\"" << x << "\" cy=\"" << yy << "\" r=\"2.5\" fill=\"black\"/>\n";
    if (p < i) continue;
    const auto [x2, y2] = pos(p);
    double c1 = x, c2 = x2;
    if (d.is_left(i) == d.is_left(p)) {
      // Arc returning to the same side bulges inwards with its span.
      const double bulge = std::min(kWidth * 0.9, 0.45 * std::abs(y2 - yy) + 12);
      c1 = c2 = d.is_left(i) ? x + bulge : x - bulge;
    } else {
      c1 = x + (x2 - x) / 2;
      c2 = c1;
    }
    os << "<path d=\"M " << x << ' ' << yy << " C " << c1 << ' ' << yy << ", " << c2 << ' ' << y2 << ", " << x2 << ' '
       << y2 << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
}

std::string svg_document(const std::vector<std::pair<Diagram, std::string>>& panels, int rows) {
  const double w = kPanel * std::max<std::size_t>(panels.size(), 1) + 20;
  const double h = kTop + kRow * std::max(rows, 1) + 20;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << ' ' << h << "\" font-family=\"monospace\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t k = 0; k < panels.size(); ++k) {
    if (k > 0)
      os << "<text x=\"" << kPanel * double(k) + 10 << "\" y=\"" << kTop + kRow * rows / 2.0
         << "\" text-anchor=\"middle\">+</text>\n";
    svg_panel(os, panels[k].first, kPanel * double(k), panels[k].second);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_ascii(const Diagram& d) {
  std::string out = d.str() + "\n";
  for (const auto& l : ascii_lines(d)) out += l + "\n";
  return out;
}

std::string render_ascii(const Morphism& f) {
  std::ostringstream os;
  os << (f.dilute() ? "d" : "") << f.dst() << "<-" << f.src() << ", " << f.size() << " term"
     << (f.size() == 1 ? "" : "s") << "\n";
  for (const auto& [d, c] : f.terms()) {
    os << "\n(" << coeff_text(c) << ") * " << d.str() << "\n";
    for (const auto& l : ascii_lines(d)) os << l << "\n";
  }
  return os.str();
}

std::string render_svg(const Diagram& d) {
  return svg_document({{d, d.str()}}, std::max(d.dst(), d.src()));
}

std::string render_svg(const Morphism& f) {
  std::vector<std::pair<Diagram, std::string>> panels;
  for (const auto& [d, c] : f.terms()) panels.emplace_back(d, coeff_text(c));
  return svg_document(panels, std::max(f.dst(), f.src()));
}

Morphism parse_diagram_or_morphism(std::string_view text) {
  if (text.find("<-") != std::string_view::npos) return Morphism::parse(text);
  return Morphism(Diagram::parse(text));
}

}  // namespace tlcat
