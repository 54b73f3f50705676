#include "dsrg/io.hpp"

#include <fstream>
#include <sstream>

#include "dsrg/error.hpp"

namespace dsrg {

namespace {

struct Line {
  std::size_t number;  // 1-based line number in the file
  std::vector<long long> values;
};

// Non-empty lines of integers, comments stripped.
std::vector<Line> integer_lines(std::string_view text, const std::string& what) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    Line parsed{number, {}};
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        parsed.values.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw InputError(what + ": line " + std::to_string(number) + ": bad token '" + tok + "'");
      }
    }
    if (!parsed.values.empty()) out.push_back(std::move(parsed));
  }
  if (out.empty()) throw InputError(what + ": empty input");
  return out;
}

void expect_count(const Line& line, std::size_t count, const std::string& what) {
  if (line.values.size() != count)
    throw InputError(what + ": line " + std::to_string(line.number) + ": expected " + std::to_string(count) +
                     " values, found " + std::to_string(line.values.size()));
}

Point one_based(long long value, std::size_t limit, const Line& line, const std::string& what) {
  if (value < 1 || static_cast<unsigned long long>(value) > limit)
    throw InputError(what + ": line " + std::to_string(line.number) + ": index " + std::to_string(value) +
                     " outside 1.." + std::to_string(limit));
  return static_cast<Point>(value - 1);
}

}  // namespace

PermGroup parse_group(std::string_view text) {
  const std::string what = "group file";
  auto lines = integer_lines(text, what);
  expect_count(lines[0], 2, what);
  const long long degree = lines[0].values[0], count = lines[0].values[1];
  if (degree < 1 || count < 0) throw InputError(what + ": header needs degree >= 1 and g >= 0");
  if (lines.size() != static_cast<std::size_t>(count) + 1)
    throw InputError(what + ": expected " + std::to_string(count) + " generator lines, found " +
                     std::to_string(lines.size() - 1));
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_count(lines[i], static_cast<std::size_t>(degree), what);
    std::vector<Point> images;
    for (long long v : lines[i].values) images.push_back(one_based(v, static_cast<std::size_t>(degree), lines[i], what));
    try {
      gens.emplace_back(std::move(images));
    } catch (const InputError& e) {
      throw InputError(what + ": line " + std::to_string(lines[i].number) + ": " + e.what());
    }
  }
  return PermGroup(static_cast<std::size_t>(degree), std::move(gens));
}

std::string format_group(const PermGroup& group) {
  std::string out = std::to_string(group.degree()) + " " + std::to_string(group.generators().size()) + "\n";
  for (const auto& g : group.generators()) {
    for (std::size_t x = 0; x < g.degree(); ++x) out += (x ? " " : "") + std::to_string(g(static_cast<Point>(x)) + 1);
    out += "\n";
  }
  return out;
}

Digraph parse_digraph(std::string_view text) {
  const std::string what = "digraph file";
  auto lines = integer_lines(text, what);
  expect_count(lines[0], 2, what);
  const long long n = lines[0].values[0], m = lines[0].values[1];
  if (n < 1 || m < 0) throw InputError(what + ": header needs n >= 1 and m >= 0");
  if (lines.size() != static_cast<std::size_t>(m) + 1)
    throw InputError(what + ": expected " + std::to_string(m) + " arc lines, found " + std::to_string(lines.size() - 1));
  Digraph g(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_count(lines[i], 2, what);
    const Point u = one_based(lines[i].values[0], static_cast<std::size_t>(n), lines[i], what);
    const Point v = one_based(lines[i].values[1], static_cast<std::size_t>(n), lines[i], what);
    if (u == v) throw InputError(what + ": line " + std::to_string(lines[i].number) + ": loop at " + std::to_string(u + 1));
    if (g.has_arc(u, v))
      throw InputError(what + ": line " + std::to_string(lines[i].number) + ": repeated arc " + std::to_string(u + 1) +
                       " " + std::to_string(v + 1));
    g.add_arc(u, v);
  }
  return g;
}

std::string format_digraph(const Digraph& g) {
  const auto arcs = g.arcs();
  std::string out = std::to_string(g.order()) + " " + std::to_string(arcs.size()) + "\n";
  for (auto [u, v] : arcs) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

BlockDesign parse_design(std::string_view text) {
  const std::string what = "design file";
  auto lines = integer_lines(text, what);
  expect_count(lines[0], 2, what);
  const long long v = lines[0].values[0], b = lines[0].values[1];
  if (v < 2 || b < 1) throw InputError(what + ": header needs v >= 2 and b >= 1");
  if (lines.size() != static_cast<std::size_t>(b) + 1)
    throw InputError(what + ": expected " + std::to_string(b) + " block lines, found " + std::to_string(lines.size() - 1));
  std::vector<std::vector<Point>> blocks;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<Point> block;
    for (long long p : lines[i].values) block.push_back(one_based(p, static_cast<std::size_t>(v), lines[i], what) + 1);
    blocks.push_back(std::move(block));
  }
  return validate_design(static_cast<std::size_t>(v), blocks);
}

std::string format_design(const BlockDesign& design) {
  std::string out = std::to_string(design.v) + " " + std::to_string(design.b) + "\n";
  for (const auto& block : design.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) out += (i ? " " : "") + std::to_string(block[i] + 1);
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("cannot read '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw InputError("cannot write '" + path + "'");
}

}  // namespace dsrg
