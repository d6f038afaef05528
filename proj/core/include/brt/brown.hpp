#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brt/builders.hpp"
#include "brt/report.hpp"
#include "brt/words.hpp"

namespace brt {

/// Tree edge with its edge group, embedded into both endpoint stabilizers.
struct BrownEdge {
  std::size_t origin = 0;
  std::size_t terminal = 0;
  std::vector<std::string> edge_gens;
  Substitution into_origin;
  Substitution into_terminal;
};

struct SquareStep {
  std::size_t vertex = 0;
  Word element;  // over the generators of `vertex`
};

/// One 2-cell orbit: relator h_1 ... h_n closer^{-1}, closer living at steps[0].vertex.
struct BrownSquare {
  std::string name;
  std::vector<SquareStep> steps;
  Word closer;
};

/// Stabilizers of a tree of representatives plus edge and square data.
struct BrownInput {
  std::vector<std::string> vertex_names;
  std::vector<FinitePresentation> vertices;
  std::vector<BrownEdge> edges;
  std::vector<BrownSquare> squares;

  /// Throws PresentationError describing the first violated invariant.
  void validate() const;

  std::string to_json(int indent = 2) const;
  static BrownInput parse_json(std::string_view text);
};

/// Vertex relators, then one edge relator per edge generator, then one per square.
/// Labels: stab_<vertex>_<label>, edge_<origin>_<terminal>_<gen>, square_<name>.
FinitePresentation assemble(const BrownInput& input);

/// The dihedral group of order 8 acting on a square complex with three vertex
/// orbits A, B, C of stabilizer order 2.
BrownInput d4_fixture();

/// Brown data for the braided group: stabilizers of heights 0..hbar with twist
/// generators renamed t<i>_<k>, edges identifying twists of adjacent heights,
/// and one square per square relator.
BrownInput brT_brown_input(const Params& p);

/// Eliminates generators identified by relators of the form x y^{-1}; the
/// survivor of each class is the least name under generator_less. Identifying
/// relators are removed, other relators rewritten, empty relators dropped.
FinitePresentation merge_identified(const FinitePresentation& p);

/// Renames generators; relators, order and labels are kept.
FinitePresentation relabel(const FinitePresentation& p,
                           const std::map<std::string, std::string>& renaming);

/// Canonical set of relators: each relator or its inverse, whichever renders
/// first, with duplicates and empty words removed.
std::vector<std::string> relator_set_up_to_inversion(const FinitePresentation& p);

/// Checks the assembled dihedral presentation against its five expected
/// relators and the abelianisation Z_2 x Z_2.
VerificationReport verify_d4();

/// Assembles brT_brown_input(p), merges identified twists, and compares the
/// relator set with build_brT(p) up to inversion, plus both abelianisations.
VerificationReport verify_brown_brT(const Params& p);

}  // namespace brt
