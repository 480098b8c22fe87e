#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include <openssl/evp.h>

namespace coocc::cli {

namespace {

void dump_into(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        dump_into(it.value(), indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& v) {
        return v.is_primitive();
      });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump_into(j[i], indent + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump_into(j[i], indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += std::isfinite(j.get<double>()) ? format_double(j.get<double>())
                                            : Json(format_double(j.get<double>())).dump();
      return;
    default:
      out += j.dump();
  }
}

// White at 1, saturating towards #2166ac as the value drops to `floor`.
std::string cell_colour(double v, double floor) {
  double t = floor < 1.0 ? (1.0 - v) / (1.0 - floor) : 0.0;
  t = std::clamp(std::isfinite(t) ? t : 1.0, 0.0, 1.0);
  const auto mix = [t](int hi, int lo) {
    return static_cast<int>(std::lround(hi + (lo - hi) * t));
  };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", mix(255, 0x21), mix(255, 0x66), mix(255, 0xac));
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(format_double(v)); }

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += "\n";
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename into '" + path + "': " + ec.message());
  }
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md, &len) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string heatmap_svg(const PairwiseMatrix& m, const std::string& title) {
  const auto size = static_cast<std::size_t>(m.values.rows());
  constexpr int cell = 14, margin = 90, top = 40;
  double floor = 1.0;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const double v = m.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (std::isfinite(v)) floor = std::min(floor, v);
    }
  }
  const int extent = static_cast<int>(size) * cell;
  const int width = margin + extent + 20, height = top + margin + extent;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<!-- Diverging scale: 1 maps to white (#ffffff), the matrix minimum ("
      << format_double(floor)
      << ") to blue (#2166ac), linear in between. Values above 1 cannot occur. -->\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" style=\"fill:#ffffff\"/>\n"
      << "<text x=\"" << margin << "\" y=\"20\" style=\"font:12px sans-serif\">"
      << escape_xml(title) << "</text>\n";
  for (std::size_t i = 0; i < size; ++i) {
    const int y = top + static_cast<int>(i) * cell;
    svg << "<text x=\"" << margin - 4 << "\" y=\"" << y + cell - 3
        << "\" style=\"font:9px sans-serif;text-anchor:end\">" << escape_xml(m.labels[i])
        << "</text>\n";
    for (std::size_t j = 0; j < size; ++j) {
      const double v = m.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      svg << "<rect x=\"" << margin + static_cast<int>(j) * cell << "\" y=\"" << y
          << "\" width=\"" << cell << "\" height=\"" << cell << "\" style=\"fill:"
          << cell_colour(v, floor) << ";stroke:#dddddd;stroke-width:0.5\"><title>"
          << escape_xml(m.labels[i]) << " / " << escape_xml(m.labels[j]) << ": "
          << format_double(v) << "</title></rect>\n";
    }
  }
  for (std::size_t j = 0; j < size; ++j) {
    const int x = margin + static_cast<int>(j) * cell + cell / 2;
    const int y = top + extent + 6;
    svg << "<text x=\"" << x << "\" y=\"" << y << "\" transform=\"rotate(90 " << x << ' ' << y
        << ")\" style=\"font:9px sans-serif\">" << escape_xml(m.labels[j]) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace coocc::cli
