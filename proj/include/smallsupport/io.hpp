#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "smallsupport/latin_square.hpp"
#include "smallsupport/permutation.hpp"
#include "smallsupport/steiner_design.hpp"

namespace smallsupport {

// Permutation file: line 1 is n, line 2 holds n space-separated images,
// 0-based. Rejects non-bijections with a diagnostic naming the duplicated
// and missing value.
Permutation read_permutation(std::istream& in);
void write_permutation(std::ostream& out, const Permutation& pi);

// Latin square file: line 1 is n, then n rows of n symbols.
LatinSquare read_latin_square(std::istream& in);
void write_latin_square(std::ostream& out, const LatinSquare& square);

// Design file: line 1 is "n k", then one line of k point indices per line.
SteinerDesign read_design(std::istream& in);
void write_design(std::ostream& out, const SteinerDesign& design);

// Autotopism file: three permutation blocks separated by blank lines.
std::array<Permutation, 3> read_autotopism_triple(std::istream& in);
void write_autotopism_triple(std::ostream& out, const Permutation& alpha,
                             const Permutation& beta, const Permutation& gamma);

Permutation load_permutation(const std::string& path);
LatinSquare load_latin_square(const std::string& path);
SteinerDesign load_design(const std::string& path);

}  // namespace smallsupport
