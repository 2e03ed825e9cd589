#pragma once

// Text formats for complexes, pairs, involutions, sequence templates and
// Gysin inputs. Blank lines and lines starting with '#' are ignored
// everywhere; parse errors name the offending line.
//
//   complex      one simplex per line: "0 1 2"; faces are implied
//   pair         complex block, "---", subcomplex block (maximal simplices)
//   involution   complex block, "===", swap lines "a b"
//   template     one slot per line: "<label> <dim|?>", first and last "0";
//                an optional "map r11 r12 ...; r21 ..." line between two
//                slots gives the matrix of that arrow row by row
//   gysin        orbit complex, "---", Sigma subcomplex, "---", fixed-set
//                complex, "---", involution swaps, then "n=<dim M>" and
//                optional "H<k>=<d>" lines

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "orbitseq/complexes.hpp"
#include "orbitseq/equivariant.hpp"
#include "orbitseq/gysin.hpp"
#include "orbitseq/lesolve.hpp"

namespace orbitseq::io {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  /// 1-based; 0 when the problem is not tied to one line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class read_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);

complexes::SimplicialComplex parse_complex(std::string_view text);
complexes::SimplicialPair parse_pair(std::string_view text);
equivariant::Involution parse_involution(std::string_view text);
lesolve::ExactSequenceTemplate parse_template(std::string_view text);
gysin::GysinInput parse_gysin_input(std::string_view text);

std::vector<complexes::Simplex> maximal_simplices(const complexes::SimplicialComplex& x);
std::string format_complex(const complexes::SimplicialComplex& x);
std::string format_gysin_input(const gysin::GysinInput& g);

/// Parses "H<k>=<d>" (as used by --known flags and Gysin headers).
std::pair<int, std::size_t> parse_known_dim(std::string_view text);

}  // namespace orbitseq::io
