#include "erosion_lab/snapshot.hpp"

#include <sstream>
#include <stdexcept>

namespace elab {

namespace {

std::string take_line(std::istringstream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument(std::string("snapshot truncated: ") + what);
  return line;
}

std::string header_field(const std::string& header, const std::string& key) {
  auto pos = header.find(key + "=");
  if (pos == std::string::npos)
    throw std::invalid_argument("snapshot header missing '" + key + "=': " + header);
  pos += key.size() + 1;
  auto end = header.find(' ', pos);
  return header.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
}

}  // namespace

std::string render_snapshot(const Coloring& state, long t) {
  const int n = state.n();
  std::string out = "n=" + std::to_string(n) + " alpha=" + state.alpha().str() +
                    " t=" + std::to_string(t) + "\n";
  out.reserve(out.size() + (n + 1) * (n + 1));
  for (int row = n; row >= 0; --row) {
    for (int col = 0; col < n; ++col) out += state.blue(Site{col, row}) ? 'B' : 'R';
    out += '\n';
  }
  return out;
}

ParsedSnapshot parse_snapshot(const std::string& text) {
  std::istringstream in(text);
  std::string header = take_line(in, "header");
  int n = std::stoi(header_field(header, "n"));
  Rational alpha = Rational::parse(header_field(header, "alpha"));
  long t = std::stol(header_field(header, "t"));
  Coloring state(n, alpha);
  for (int row = n; row >= 0; --row) {
    std::string line = take_line(in, "grid row");
    if (static_cast<int>(line.size()) != n)
      throw std::invalid_argument("snapshot row has length " + std::to_string(line.size()) +
                                  ", expected " + std::to_string(n));
    for (int col = 0; col < n; ++col) {
      char c = line[col];
      if (c != 'B' && c != 'R')
        throw std::invalid_argument(std::string("snapshot cell must be B or R, got '") + c + "'");
      state.set_blue(Site{col, row}, c == 'B');
    }
  }
  return ParsedSnapshot{std::move(state), t};
}

std::string render_region_grid(const std::vector<std::uint8_t>& members, int n) {
  check_cylinder_size(n);
  if (static_cast<int>(members.size()) != site_count(n))
    throw std::invalid_argument("region mask has the wrong size");
  std::string out = "n=" + std::to_string(n) + "\n";
  for (int row = n; row >= 0; --row) {
    for (int col = 0; col < n; ++col)
      out += members[site_index(Site{col, row}, n)] ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::pair<std::vector<std::uint8_t>, int> parse_region_grid(const std::string& text) {
  std::istringstream in(text);
  std::string header = take_line(in, "header");
  int n = std::stoi(header_field(header, "n"));
  check_cylinder_size(n);
  std::vector<std::uint8_t> members(site_count(n), 0);
  for (int row = n; row >= 0; --row) {
    std::string line = take_line(in, "grid row");
    if (static_cast<int>(line.size()) != n)
      throw std::invalid_argument("region row has length " + std::to_string(line.size()) +
                                  ", expected " + std::to_string(n));
    for (int col = 0; col < n; ++col) {
      char c = line[col];
      if (c != '0' && c != '1')
        throw std::invalid_argument(std::string("region cell must be 0 or 1, got '") + c + "'");
      members[site_index(Site{col, row}, n)] = c == '1';
    }
  }
  return {std::move(members), n};
}

}  // namespace elab
