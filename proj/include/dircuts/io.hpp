#pragma once

#include <string>

#include "dircuts/dirmc.hpp"
#include "dircuts/psi.hpp"
#include "dircuts/stor.hpp"

namespace dircuts {

// Line-oriented text formats.  One record per line, whitespace-delimited,
// with `#` starting a comment that runs to the end of the line.  Parsers
// throw InputError naming the offending 1-based line; serializers emit the
// canonical form (fixed record order, sorted where the format says so), and
// parse(serialize(x)) reproduces x.
//
//   psi <class-size> <pattern-vertices> <pattern-edges>
//   hclass <pattern-vertex> <host-ids...>      one line per pattern vertex
//   hedge <i> <j>                               pattern edge
//   gedge <u> <v>                               host edge
//
//   dirmc <vertices> <pairs> <budget>
//   term <s> <t>
//   w <v> <weight>          every non-terminal; budget+1 means undeletable
//   arc <u> <v>
//   label <v> <role>
//
//   stor <vertices> <pairs>
//   term <s> <t>
//   arc <u> <v>
//   edge <u> <v>            edge indices are the line order of these records
//   label <v> <role>
//
// Witness files hold a single record (after comments):
//   hom <i>:<position> ...
//   cut <v> ...
//   orient <edge-index>:<F|B> ...
//   dpw                      followed by one `bag <v...>` line per bag
PsiInstance parse_psi(const std::string& text);
DirMcInstance parse_dirmc(const std::string& text);
StorInstance parse_stor(const std::string& text);

std::string serialize_psi(const PsiInstance& inst);
std::string serialize_dirmc(const DirMcInstance& inst);
std::string serialize_stor(const StorInstance& inst);

Homomorphism parse_hom(const std::string& text);
Cutset parse_cutset(const std::string& text);
Orientation parse_orientation(const std::string& text);
DirectedPathDecomposition parse_decomposition(const std::string& text);

std::string serialize_hom(const Homomorphism& h);
std::string serialize_cutset(const Cutset& cut);
std::string serialize_orientation(const Orientation& o);
std::string serialize_decomposition(const DirectedPathDecomposition& d);

}  // namespace dircuts
