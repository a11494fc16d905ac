#include "hypergiant/hypergraph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hypergiant {

namespace {

[[noreturn]] void format_error(std::size_t line, const std::string& what) {
  throw std::invalid_argument("HGR line " + std::to_string(line) + ": " + what);
}

}  // namespace

void write_hgr(std::ostream& out, const Hypergraph& h) {
  out << "HGR v1 " << h.N() << ' ' << h.d() << ' ' << h.edge_count() << ' ' << h.seed() << '\n';
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto edge = h.edge(e);
    for (std::size_t j = 0; j < edge.size(); ++j) {
      if (j > 0) out << ' ';
      out << edge[j];
    }
    out << '\n';
  }
}

void write_hgr(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_hgr(out, h);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Hypergraph read_hgr(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) format_error(1, "missing header");
  std::istringstream header(line);
  std::string magic, version;
  long long n = 0, d = 0, m = 0;
  unsigned long long seed = 0;
  if (!(header >> magic >> version >> n >> d >> m >> seed) || magic != "HGR" || version != "v1") {
    format_error(1, "expected 'HGR v1 N d M seed'");
  }
  std::string trailing;
  if (header >> trailing) format_error(1, "unexpected trailing token '" + trailing + "'");
  if (d < 2 || n < d || m < 0) format_error(1, "invalid header values");

  std::vector<Vertex> flat;
  flat.reserve(static_cast<std::size_t>(m * d));
  for (long long e = 0; e < m; ++e) {
    const std::size_t lineno = static_cast<std::size_t>(e) + 2;
    if (!std::getline(in, line)) format_error(lineno, "expected " + std::to_string(m) + " edges");
    std::istringstream row(line);
    long long prev = 0;
    for (long long j = 0; j < d; ++j) {
      long long v = 0;
      if (!(row >> v)) format_error(lineno, "expected " + std::to_string(d) + " vertex ids");
      if (v < 1 || v > n) format_error(lineno, "vertex " + std::to_string(v) + " outside [1, N]");
      if (j > 0 && v <= prev) format_error(lineno, "vertex ids must be strictly increasing");
      prev = v;
      flat.push_back(static_cast<Vertex>(v));
    }
    if (row >> trailing) format_error(lineno, "too many vertex ids");
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) format_error(static_cast<std::size_t>(m) + 2, "extra data after M edges");
  }
  try {
    return Hypergraph(n, static_cast<int>(d), std::move(flat), seed);
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(std::string("HGR: ") + err.what());
  }
}

Hypergraph read_hgr(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  return read_hgr(in);
}

}  // namespace hypergiant
