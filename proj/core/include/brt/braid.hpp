#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brt/builders.hpp"
#include "brt/report.hpp"

namespace brt {

/// Braid word on `strands` strands; letter +i is sigma_i, -i its inverse.
struct ArtinWord {
  int strands = 2;
  std::vector<int> letters;

  ArtinWord() = default;
  /// Throws std::invalid_argument if a letter is 0 or |letter| >= strands.
  ArtinWord(int strands_, std::vector<int> letters_);

  ArtinWord inverse() const;
  friend ArtinWord operator*(const ArtinWord& a, const ArtinWord& b);
  ArtinWord power(long k) const;
  std::string to_string() const;
  /// Braid words as signed integer lists.
  std::string to_json() const;
};

/// Permutation braid stored as the image of each strand position.
using Permutation = std::vector<std::uint8_t>;

/// Left-greedy normal form Delta^p A_1 ... A_r.
struct GarsideNF {
  int strands = 2;
  long delta_power = 0;
  std::vector<Permutation> factors;

  bool is_identity() const { return delta_power == 0 && factors.empty(); }
  std::string to_string() const;

  friend bool operator==(const GarsideNF& a, const GarsideNF& b) {
    return a.strands == b.strands && a.delta_power == b.delta_power && a.factors == b.factors;
  }
};

GarsideNF garside_nf(const ArtinWord& w);
/// Throws std::invalid_argument on strand mismatch.
bool braid_equal(const ArtinWord& a, const ArtinWord& b);
/// Positive half twist on s strands.
ArtinWord delta_word(int strands);
/// Permutation induced on strand positions (product of transpositions, left to right).
Permutation underlying_permutation(const ArtinWord& w);

/// Tree on punctures drawn with all arcs on one side of a line.
struct PlanarTreeEmbedding {
  int punctures = 0;
  std::vector<int> line_order;            // puncture at each line position
  std::vector<std::pair<int, int>> edges; // (a, b) pairs of punctures

  /// 1-based line position of a puncture.
  int position(int puncture) const;
  bool has_edge(int a, int b) const;
  /// Throws std::invalid_argument unless edges form a tree whose arcs do not cross.
  void validate() const;
  /// Edges at `vertex` in rotation order around it.
  std::vector<std::pair<int, int>> rotation_at(int vertex) const;
};

/// Embedding built from a list of tree edges rooted at puncture 0: the line order
/// is the depth-first preorder visiting children by increasing index.
PlanarTreeEmbedding embed_tree(int punctures, std::vector<std::pair<int, int>> edges);

/// Subtree of punctures p_0..p_k used for the stabilizer of height k.
PlanarTreeEmbedding sigma_tree_embedding(const Params& p, int k);

/// Half twist exchanging the endpoints of `edge` along its arc.
ArtinWord band_word(const PlanarTreeEmbedding& e, std::pair<int, int> edge);

/// Defining edge of the twist t_i.
std::pair<int, int> tau_edge(const Params& p, int i);
ArtinWord tau_word(const Params& p, int i);

/// Checks each braid-family relator with t_i replaced by tau_word(p, i).
VerificationReport verify_braid_relators(const Params& p);
/// Checks the disjunction, adjacency and nodal relations of the embedded tree.
VerificationReport verify_sergiescu(const PlanarTreeEmbedding& e);

}  // namespace brt
