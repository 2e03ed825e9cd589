#include "orbitseq/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace orbitseq::io {

using complexes::Simplex;
using complexes::SimplicialComplex;
using complexes::SimplicialPair;
using complexes::Vertex;

namespace {

struct Line {
  std::size_t number = 0;
  std::string text;
};

using Block = std::vector<Line>;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string t = trim(text.substr(start, end - start));
    if (!t.empty() && t.front() != '#') lines.push_back({number, std::move(t)});
    start = end + 1;
  }
  return lines;
}

std::vector<Block> split_blocks(const std::vector<Line>& lines, std::string_view separator) {
  std::vector<Block> blocks(1);
  for (const auto& line : lines) {
    if (line.text == separator) {
      blocks.emplace_back();
    } else {
      blocks.back().push_back(line);
    }
  }
  return blocks;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

Vertex to_vertex(const Line& line, const std::string& token) {
  const auto v = to_integer(token);
  if (!v || *v < 0 || *v > std::numeric_limits<Vertex>::max()) {
    throw parse_error(line.number, "'" + token + "' is not a nonnegative vertex label");
  }
  return static_cast<Vertex>(*v);
}

Simplex parse_simplex(const Line& line) {
  Simplex s;
  for (const auto& t : tokens(line.text)) s.push_back(to_vertex(line, t));
  try {
    return complexes::normalize(std::move(s));
  } catch (const complexes::malformed_complex& e) {
    throw parse_error(line.number, e.what());
  }
}

SimplicialComplex complex_block(const Block& block) {
  std::vector<Simplex> simplices;
  for (const auto& line : block) simplices.push_back(parse_simplex(line));
  return SimplicialComplex::closure_of(simplices);
}

SimplicialComplex sub_block(const Block& block, const SimplicialComplex& total) {
  for (const auto& line : block) {
    const Simplex s = parse_simplex(line);
    if (!total.contains(s)) {
      throw parse_error(line.number, "subcomplex simplex " + complexes::to_string(s) +
                                         " is not a simplex of the complex");
    }
  }
  return complex_block(block);
}

equivariant::Involution involution_block(const Block& block, const SimplicialComplex& carrier) {
  std::vector<std::pair<Vertex, Vertex>> swaps;
  std::set<Vertex> used;
  const auto vertices = carrier.vertices();
  for (const auto& line : block) {
    const auto ts = tokens(line.text);
    if (ts.size() != 2) {
      throw parse_error(line.number, "expected a vertex pair 'a b'");
    }
    const Vertex a = to_vertex(line, ts[0]);
    const Vertex b = to_vertex(line, ts[1]);
    for (Vertex v : {a, b}) {
      if (!std::binary_search(vertices.begin(), vertices.end(), v)) {
        throw parse_error(line.number, "vertex " + std::to_string(v) + " is not in the complex");
      }
    }
    if (a != b && (!used.insert(a).second || !used.insert(b).second)) {
      throw parse_error(line.number, "vertex already paired on an earlier line");
    }
    swaps.emplace_back(a, b);
  }
  try {
    return equivariant::Involution(carrier, swaps);
  } catch (const equivariant::malformed_involution& e) {
    throw parse_error(block.empty() ? 0 : block.front().number,
                      std::string("involution: ") + e.what());
  }
}

exactla::Rational to_rational(const Line& line, const std::string& token) {
  exactla::Rational q;
  if (token.find_first_not_of("+-0123456789/") != std::string::npos ||
      q.set_str(token.front() == '+' ? token.substr(1) : token, 10) != 0 ||
      q.get_den() == 0) {
    throw parse_error(line.number, "'" + token + "' is not a rational number");
  }
  q.canonicalize();
  return q;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw read_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SimplicialComplex parse_complex(std::string_view text) {
  const auto lines = content_lines(text);
  for (const auto& line : lines) {
    if (line.text == "---" || line.text == "===") {
      throw parse_error(line.number, "unexpected separator in a complex file");
    }
  }
  return complex_block(lines);
}

SimplicialPair parse_pair(std::string_view text) {
  const auto blocks = split_blocks(content_lines(text), "---");
  if (blocks.size() != 2) {
    throw parse_error(0, "a pair needs exactly one '---' separator (found " +
                             std::to_string(blocks.size() - 1) + ")");
  }
  SimplicialComplex total = complex_block(blocks[0]);
  SimplicialComplex sub = sub_block(blocks[1], total);
  return SimplicialPair(std::move(total), std::move(sub));
}

equivariant::Involution parse_involution(std::string_view text) {
  const auto blocks = split_blocks(content_lines(text), "===");
  if (blocks.size() != 2) {
    throw parse_error(0, "an involution file needs exactly one '===' separator");
  }
  return involution_block(blocks[1], complex_block(blocks[0]));
}

lesolve::ExactSequenceTemplate parse_template(std::string_view text) {
  std::vector<lesolve::Slot> slots;
  std::vector<std::size_t> slot_lines;
  std::vector<std::optional<exactla::Matrix>> maps;
  std::optional<std::pair<std::size_t, exactla::Matrix>> pending;  // (line, matrix)

  for (const auto& line : content_lines(text)) {
    auto ts = tokens(line.text);
    if (ts.front() == "map") {
      if (slots.empty()) throw parse_error(line.number, "map given before the first slot");
      if (pending) throw parse_error(line.number, "two maps given for the same arrow");
      std::vector<exactla::Vector> rows;
      const std::string body = line.text.substr(3);
      std::size_t start = 0;
      while (start <= body.size() && !trim(body).empty()) {
        auto end = body.find(';', start);
        if (end == std::string::npos) end = body.size();
        exactla::Vector row;
        for (const auto& t : tokens(body.substr(start, end - start))) {
          row.push_back(to_rational(line, t));
        }
        rows.push_back(std::move(row));
        start = end + 1;
      }
      const std::size_t cols = rows.empty() ? slots.back().dim.value_or(0) : rows.front().size();
      exactla::Matrix m(rows.size(), cols);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw parse_error(line.number, "map rows have unequal lengths");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
      }
      if (slots.back().dim && m.cols() != *slots.back().dim) {
        throw parse_error(line.number, "map has " + std::to_string(m.cols()) +
                                           " columns but the slot before it has dimension " +
                                           std::to_string(*slots.back().dim));
      }
      pending.emplace(line.number, std::move(m));
      continue;
    }

    lesolve::Slot slot;
    const std::string dim = ts.back();
    ts.pop_back();
    if (dim == "?") {
      slot.dim = std::nullopt;
    } else if (auto v = to_integer(dim); v && *v >= 0) {
      slot.dim = static_cast<std::size_t>(*v);
    } else {
      throw parse_error(line.number, "dimension '" + dim + "' is neither a nonnegative integer nor '?'");
    }
    if (ts.empty()) {
      slot.label = dim;
    } else {
      slot.label = ts.front();
      for (std::size_t i = 1; i < ts.size(); ++i) slot.label += " " + ts[i];
    }

    if (!slots.empty()) {
      if (pending) {
        if (slot.dim && pending->second.rows() != *slot.dim) {
          throw parse_error(pending->first, "map has " + std::to_string(pending->second.rows()) +
                                                " rows but the slot after it has dimension " +
                                                std::to_string(*slot.dim));
        }
        maps.emplace_back(std::move(pending->second));
        pending.reset();
      } else {
        maps.emplace_back(std::nullopt);
      }
    }
    slots.push_back(std::move(slot));
    slot_lines.push_back(line.number);
  }

  if (pending) throw parse_error(pending->first, "map given after the last slot");
  if (slots.empty()) throw parse_error(0, "template has no slots");
  if (slots.front().dim != std::size_t{0}) {
    throw parse_error(slot_lines.front(), "the first slot must be the zero sentinel '0'");
  }
  if (slots.back().dim != std::size_t{0}) {
    throw parse_error(slot_lines.back(), "the last slot must be the zero sentinel '0'");
  }
  return lesolve::ExactSequenceTemplate(std::move(slots), std::move(maps));
}

std::pair<int, std::size_t> parse_known_dim(std::string_view text) {
  const std::string s = trim(text);
  const auto eq = s.find('=');
  if (s.size() < 4 || s.front() != 'H' || eq == std::string::npos) {
    throw std::invalid_argument("expected H<k>=<d>, got '" + s + "'");
  }
  const auto k = to_integer(trim(std::string_view(s).substr(1, eq - 1)));
  const auto d = to_integer(trim(std::string_view(s).substr(eq + 1)));
  if (!k || !d || *k < 0 || *d < 0) {
    throw std::invalid_argument("expected H<k>=<d> with nonnegative integers, got '" + s + "'");
  }
  return {static_cast<int>(*k), static_cast<std::size_t>(*d)};
}

gysin::GysinInput parse_gysin_input(std::string_view text) {
  std::vector<Line> body;
  std::optional<int> degree_bound;
  std::map<int, std::size_t> known;
  for (auto& line : content_lines(text)) {
    const std::string& t = line.text;
    if (t.rfind("n=", 0) == 0 || t.rfind("n =", 0) == 0) {
      const auto v = to_integer(trim(t.substr(t.find('=') + 1)));
      if (!v || *v < 0) throw parse_error(line.number, "degree bound must be a nonnegative integer");
      if (degree_bound) throw parse_error(line.number, "degree bound given twice");
      degree_bound = static_cast<int>(*v);
    } else if (t.front() == 'H') {
      try {
        const auto [k, d] = parse_known_dim(t);
        if (!known.emplace(k, d).second) {
          throw parse_error(line.number, "H^" + std::to_string(k) + " given twice");
        }
      } catch (const std::invalid_argument& e) {
        throw parse_error(line.number, e.what());
      }
    } else {
      body.push_back(std::move(line));
    }
  }
  if (!degree_bound) throw parse_error(0, "missing 'n=<dim M>' line");

  auto blocks = split_blocks(body, "---");
  while (blocks.size() > 4 && blocks.back().empty()) blocks.pop_back();
  if (blocks.size() != 4) {
    throw parse_error(0, "expected 4 sections (orbit complex, Sigma, fixed set, involution), found " +
                             std::to_string(blocks.size()));
  }

  SimplicialComplex orbit = complex_block(blocks[0]);
  SimplicialComplex sigma = sub_block(blocks[1], orbit);
  SimplicialComplex fixed = complex_block(blocks[2]);
  auto j = involution_block(blocks[3], fixed);
  gysin::GysinInput g{SimplicialPair(std::move(orbit), std::move(sigma)), std::move(fixed),
                      std::move(j), *degree_bound, std::move(known)};
  try {
    g.validate();
  } catch (const gysin::malformed_input& e) {
    throw parse_error(0, e.what());
  }
  return g;
}

std::vector<Simplex> maximal_simplices(const SimplicialComplex& x) {
  std::vector<Simplex> out;
  for (int k = 0; k <= x.dimension(); ++k) {
    std::set<Simplex> covered;
    for (const auto& coface : x.simplices(k + 1)) {
      for (std::size_t i = 0; i < coface.size(); ++i) {
        Simplex f = coface;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        covered.insert(std::move(f));
      }
    }
    for (const auto& s : x.simplices(k)) {
      if (!covered.count(s)) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_complex(const SimplicialComplex& x) {
  std::ostringstream out;
  for (const auto& s : maximal_simplices(x)) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  return out.str();
}

std::string format_gysin_input(const gysin::GysinInput& g) {
  std::ostringstream out;
  out << "# orbit space M/S3\n" << format_complex(g.orbit_pair.total());
  out << "---\n# Sigma/S3\n" << format_complex(g.orbit_pair.sub());
  out << "---\n# M^S1\n" << format_complex(g.fixed_circle_set);
  out << "---\n# j-involution swaps\n";
  for (const auto& [a, b] : g.j_involution.swaps()) out << a << ' ' << b << '\n';
  out << "---\nn=" << g.degree_bound << '\n';
  for (const auto& [k, d] : g.known_total) out << 'H' << k << '=' << d << '\n';
  return out.str();
}

}  // namespace orbitseq::io
