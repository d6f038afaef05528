#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "brt/builders.hpp"
#include "brt/report.hpp"
#include "brt/words.hpp"

namespace brt {

using Rational = mpq_class;

class TreePairElement;

/// Position of a node: root index plus the child digits leading down to it.
struct LeafAddress {
  std::uint32_t root = 0;
  std::vector<std::uint8_t> path;

  LeafAddress child(std::uint8_t digit) const;
  std::size_t depth() const noexcept { return path.size(); }

  friend bool operator==(const LeafAddress& a, const LeafAddress& b) {
    return a.root == b.root && a.path == b.path;
  }
  friend bool operator<(const LeafAddress& a, const LeafAddress& b) {
    return a.root != b.root ? a.root < b.root : a.path < b.path;
  }
};

/// Ordered forest of m rooted trees in which every internal node has n children,
/// stored as its left-to-right leaf sequence.
class NaryForest {
 public:
  NaryForest() = default;
  /// Validates that `leaves` is the leaf sequence of a full n-ary forest on m roots.
  NaryForest(int arity, int roots, std::vector<LeafAddress> leaves);

  static NaryForest trivial(int arity, int roots);
  /// Preorder string: 'x' for an internal node, '.' for a leaf, '|' between roots.
  static NaryForest from_preorder(int arity, std::string_view text);

  int arity() const noexcept { return arity_; }
  int roots() const noexcept { return roots_; }
  std::size_t leaf_count() const noexcept { return leaves_.size(); }
  std::size_t caret_count() const;
  const std::vector<LeafAddress>& leaves() const noexcept { return leaves_; }

  /// Replaces leaf `index` by its n children.
  NaryForest expand(std::size_t index) const;
  std::string to_preorder() const;

  /// Left endpoint of each leaf interval on the circle [0, m).
  Rational leaf_start(std::size_t index) const;
  Rational leaf_width(std::size_t index) const;

  friend bool operator==(const NaryForest& a, const NaryForest& b) {
    return a.arity_ == b.arity_ && a.roots_ == b.roots_ && a.leaves_ == b.leaves_;
  }

 private:
  friend class TreePairElement;
  friend TreePairElement compose(const TreePairElement& a, const TreePairElement& b);
  int arity_ = 2;
  int roots_ = 1;
  std::vector<LeafAddress> leaves_;
};

/// Element of T_{n,m}: leaf i of the domain forest is carried onto leaf
/// (i + shift) mod N of the range forest. Always stored reduced.
class TreePairElement {
 public:
  TreePairElement() = default;
  static TreePairElement identity(int arity, int roots);
  /// Validates shapes and reduces. `shift` may be any integer; it is taken mod N.
  static TreePairElement make(NaryForest domain, NaryForest range, long shift);
  /// Same as make() but keeps the given representative unreduced.
  static TreePairElement make_unreduced(NaryForest domain, NaryForest range, long shift);

  const NaryForest& domain() const noexcept { return domain_; }
  const NaryForest& range() const noexcept { return range_; }
  long shift() const noexcept { return shift_; }
  int arity() const noexcept { return domain_.arity(); }
  int roots() const noexcept { return domain_.roots(); }
  std::size_t leaf_count() const noexcept { return domain_.leaf_count(); }
  bool is_identity() const;
  bool is_reduced() const;

  TreePairElement reduced() const;
  /// Subdivides domain leaf `index` and its image.
  TreePairElement expand_domain_leaf(std::size_t index) const;

  /// {"arity": n, "roots": m, "domain": "...", "range": "...", "shift": k}
  std::string to_json() const;
  static TreePairElement parse_json(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const TreePairElement& a, const TreePairElement& b) {
    return a.domain_ == b.domain_ && a.range_ == b.range_ && a.shift_ == b.shift_;
  }

 private:
  friend TreePairElement compose(const TreePairElement& a, const TreePairElement& b);
  void reduce_in_place();
  void expand_range_in_place(std::size_t index);
  void expand_domain_in_place(std::size_t index);

  NaryForest domain_;
  NaryForest range_;
  long shift_ = 0;
};

/// b after a (a is applied first). Throws std::invalid_argument on (n, m) mismatch.
TreePairElement compose(const TreePairElement& a, const TreePairElement& b);
TreePairElement inverse(const TreePairElement& a);
/// g^e for any integer e.
TreePairElement power(const TreePairElement& g, long e);

/// Rotation of height k: (T_k, T_k, +1), T_k carrying carets on the first k
/// nodes of the tree in breadth-first order.
TreePairElement rotation_element(const Params& p, int k);
NaryForest rotation_forest(const Params& p, int k);

/// Evaluates a word over r0..r_hbar; products act on the left (rightmost letter first).
TreePairElement evaluate_rotation_word(const Params& p, const Word& w);

/// Leaf shift modulo gcd(m, n-1).
long theta(const TreePairElement& g);
long theta_modulus(int arity, int roots);

/// Image of x in [0, m) under the piecewise-affine circle map.
Rational apply(const TreePairElement& g, const Rational& x);

/// Base-n logarithms of the left and right derivatives at a fixed point.
/// Throws std::invalid_argument if g does not fix x.
std::pair<long, long> slopes_at(const TreePairElement& g, const Rational& x);

/// Fixed points that are isolated (not inside an interval of fixed points).
std::vector<Rational> isolated_fixed_points(const TreePairElement& g);

/// Least t in 1..bound with g^t = 1, or nullopt.
std::optional<long> element_order(const TreePairElement& g, long bound);

/// Evaluates every relator of build_T(p) in the tree-pair model.
VerificationReport verify_T_presentation(const Params& p);

}  // namespace brt
