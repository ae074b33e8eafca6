#include "br/diagram.hpp"

#include <sstream>

namespace br {

namespace {

constexpr double kUnit = 40.0;    // pixels per lattice step
constexpr double kMargin = 50.0;

double clamp_lo(const std::optional<long>& lo, long window) {
  // lo is exclusive; the shaded region starts just above it.
  if (!lo) return -window - 0.4;
  return static_cast<double>(*lo) + 0.6;
}

double clamp_hi(const std::optional<long>& hi, long window) {
  if (!hi) return window + 0.4;
  return static_cast<double>(*hi) + 0.4;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << v;
  return os.str();
}

}  // namespace

std::string diagram_svg(const BellRogalskiDatum& datum, const Classification& cls,
                        long window) {
  std::size_t n = datum.rank();
  if (n > 2) throw Error("diagram: lattice rendering supports rank 1 and 2");
  long w = window;
  double span = 2.0 * w * kUnit + 2.0 * kMargin;
  double height = n == 1 ? 2.0 * kMargin + kUnit : span;
  auto X = [&](double v) { return kMargin + (v + w) * kUnit; };
  auto Y = [&](double v) {
    return n == 1 ? kMargin + kUnit / 2
                  : height - kMargin - (v + w) * kUnit;
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(span)
     << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(span) << " "
     << fmt(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Shaded supports.
  for (const auto& d : cls.descriptors) {
    double x0 = X(clamp_lo(d.support[0].lo, w) - 0.2);
    double x1 = X(clamp_hi(d.support[0].hi, w) - 0.4 + 0.2);
    double y0, y1;
    if (n == 2) {
      y0 = Y(clamp_hi(d.support[1].hi, w) - 0.4 + 0.2);
      y1 = Y(clamp_lo(d.support[1].lo, w) - 0.2);
    } else {
      y0 = Y(0) - kUnit / 4;
      y1 = Y(0) + kUnit / 4;
    }
    os << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\""
       << fmt(x1 - x0) << "\" height=\"" << fmt(y1 - y0)
       << "\" fill=\"black\" fill-opacity=\"0.12\" stroke=\"black\" "
          "stroke-opacity=\"0.3\"/>\n";
  }

  // Lattice grid.
  for (long a = -w; a <= w; ++a) {
    if (n == 2) {
      os << "<line x1=\"" << fmt(X(a)) << "\" y1=\"" << fmt(Y(-w)) << "\" x2=\""
         << fmt(X(a)) << "\" y2=\"" << fmt(Y(w))
         << "\" stroke=\"gray\" stroke-dasharray=\"4 3\" stroke-width=\"0.5\"/>\n";
      os << "<line x1=\"" << fmt(X(-w)) << "\" y1=\"" << fmt(Y(a)) << "\" x2=\""
         << fmt(X(w)) << "\" y2=\"" << fmt(Y(a))
         << "\" stroke=\"gray\" stroke-dasharray=\"4 3\" stroke-width=\"0.5\"/>\n";
    }
  }
  if (n == 1)
    os << "<line x1=\"" << fmt(X(-w - 0.4)) << "\" y1=\"" << fmt(Y(0))
       << "\" x2=\"" << fmt(X(w + 0.4)) << "\" y2=\"" << fmt(Y(0))
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // Break hyperplanes: red across axis 1, blue across axis 2. A break class
  // at offset a separates a from a+1, drawn through the break point.
  for (long a : cls.axes[0].offsets) {
    os << "<line x1=\"" << fmt(X(a)) << "\" y1=\""
       << fmt(n == 2 ? Y(-w - 0.4) : Y(0) - kUnit / 2) << "\" x2=\"" << fmt(X(a))
       << "\" y2=\"" << fmt(n == 2 ? Y(w + 0.4) : Y(0) + kUnit / 2)
       << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
  }
  if (n == 2)
    for (long a : cls.axes[1].offsets)
      os << "<line x1=\"" << fmt(X(-w - 0.4)) << "\" y1=\"" << fmt(Y(a))
         << "\" x2=\"" << fmt(X(w + 0.4)) << "\" y2=\"" << fmt(Y(a))
         << "\" stroke=\"blue\" stroke-width=\"2\"/>\n";

  // Lattice points.
  for (long a = -w; a <= w; ++a) {
    if (n == 1) {
      os << "<circle cx=\"" << fmt(X(a)) << "\" cy=\"" << fmt(Y(0))
         << "\" r=\"3\" fill=\"black\"/>\n";
    } else {
      for (long b = -w; b <= w; ++b)
        os << "<circle cx=\"" << fmt(X(a)) << "\" cy=\"" << fmt(Y(b))
           << "\" r=\"2.5\" fill=\"black\"/>\n";
    }
  }
  os << "<text x=\"" << fmt(X(0) + 5) << "\" y=\"" << fmt(Y(0) + 15)
     << "\" font-size=\"12\" font-family=\"serif\" font-style=\"italic\">m</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string diagram_tikz(const BellRogalskiDatum& datum,
                         const Classification& cls, long window) {
  std::size_t n = datum.rank();
  if (n > 2) throw Error("diagram: lattice rendering supports rank 1 and 2");
  long w = window;
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=.7]\n";
  for (const auto& d : cls.descriptors) {
    double x0 = clamp_lo(d.support[0].lo, w) - 0.2;
    double x1 = clamp_hi(d.support[0].hi, w) - 0.2;
    double y0 = n == 2 ? clamp_lo(d.support[1].lo, w) - 0.2 : -0.3;
    double y1 = n == 2 ? clamp_hi(d.support[1].hi, w) - 0.2 : 0.3;
    os << "\\draw[draw=black, fill=black, opacity=.15] (" << fmt(x0) << ","
       << fmt(y0) << ") rectangle (" << fmt(x1) << "," << fmt(y1) << ");\n";
  }
  if (n == 2) {
    for (long a = -w; a <= w; ++a) {
      os << "\\draw[help lines, dashed] (" << a << "," << -w << ")--(" << a
         << "," << w << ");\n";
      os << "\\draw[help lines, dashed] (" << -w << "," << a << ")--(" << w
         << "," << a << ");\n";
    }
  } else {
    os << "\\draw (" << -w - 0.4 << ",0)--(" << w + 0.4 << ",0);\n";
  }
  for (long a : cls.axes[0].offsets)
    os << "\\draw[red, line width=.5mm] (" << a << ","
       << (n == 2 ? -w - 0.4 : -0.5) << ")--(" << a << ","
       << (n == 2 ? w + 0.4 : 0.5) << ");\n";
  if (n == 2)
    for (long a : cls.axes[1].offsets)
      os << "\\draw[blue, line width=.5mm] (" << -w - 0.4 << "," << a << ")--("
         << w + 0.4 << "," << a << ");\n";
  if (n == 1) {
    for (long a = -w; a <= w; ++a)
      os << "\\fill (" << a << ",0) circle (2pt);\n";
  } else {
    for (long a = -w; a <= w; ++a)
      for (long b = -w; b <= w; ++b)
        os << "\\fill (" << a << "," << b << ") circle (2pt);\n";
  }
  os << "\\node[font=\\scriptsize, anchor=north west] at (0,0) "
        "{$\\mathfrak{m}$};\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace br
