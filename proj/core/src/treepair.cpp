#include "brt/treepair.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace brt {

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

bool is_prefix(const LeafAddress& a, const LeafAddress& b) {
  return a.root == b.root && a.path.size() <= b.path.size() &&
         std::equal(a.path.begin(), a.path.end(), b.path.begin());
}

// Leaves i..i+n-1 are the complete child list of one node.
bool sibling_block(const std::vector<LeafAddress>& leaves, std::size_t i, int n) {
  if (i + static_cast<std::size_t>(n) > leaves.size()) return false;
  const LeafAddress& first = leaves[i];
  const LeafAddress& last = leaves[i + static_cast<std::size_t>(n) - 1];
  if (first.path.empty() || first.path.back() != 0) return false;
  if (last.root != first.root || last.path.size() != first.path.size()) return false;
  if (last.path.back() != n - 1) return false;
  return std::equal(first.path.begin(), first.path.end() - 1, last.path.begin());
}

void collapse(std::vector<LeafAddress>& leaves, std::size_t i, int n) {
  leaves[i].path.pop_back();
  leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i) + 1,
               leaves.begin() + static_cast<std::ptrdiff_t>(i) + n);
}

void split(std::vector<LeafAddress>& leaves, std::size_t i, int n) {
  const LeafAddress parent = leaves[i];
  std::vector<LeafAddress> kids;
  kids.reserve(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) kids.push_back(parent.child(static_cast<std::uint8_t>(d)));
  leaves[i] = kids[0];
  leaves.insert(leaves.begin() + static_cast<std::ptrdiff_t>(i) + 1, kids.begin() + 1, kids.end());
}

}  // namespace

LeafAddress LeafAddress::child(std::uint8_t digit) const {
  LeafAddress c = *this;
  c.path.push_back(digit);
  return c;
}

// ---------------------------------------------------------------- forests

NaryForest::NaryForest(int arity, int roots, std::vector<LeafAddress> leaves)
    : arity_(arity), roots_(roots), leaves_(std::move(leaves)) {
  if (arity < 2 || arity > 255) throw std::invalid_argument("forest arity must be in 2..255");
  if (roots < 1) throw std::invalid_argument("forest needs at least one root");
  std::size_t pos = 0;
  // Consumes the subtree rooted at `node`, returning false on a malformed sequence.
  auto consume = [&](auto&& self, const LeafAddress& node) -> bool {
    if (pos >= leaves_.size() || !is_prefix(node, leaves_[pos])) return false;
    if (leaves_[pos] == node) {
      ++pos;
      return true;
    }
    for (int d = 0; d < arity_; ++d)
      if (!self(self, node.child(static_cast<std::uint8_t>(d)))) return false;
    return true;
  };
  for (int r = 0; r < roots_; ++r)
    if (!consume(consume, LeafAddress{static_cast<std::uint32_t>(r), {}}))
      throw std::invalid_argument("leaf sequence is not a full " + std::to_string(arity_) +
                                  "-ary forest on " + std::to_string(roots_) + " roots");
  if (pos != leaves_.size()) throw std::invalid_argument("leaf sequence has trailing leaves");
}

NaryForest NaryForest::trivial(int arity, int roots) {
  std::vector<LeafAddress> leaves;
  for (int r = 0; r < roots; ++r) leaves.push_back(LeafAddress{static_cast<std::uint32_t>(r), {}});
  return NaryForest(arity, roots, std::move(leaves));
}

NaryForest NaryForest::from_preorder(int arity, std::string_view text) {
  std::vector<LeafAddress> leaves;
  std::size_t pos = 0;
  std::uint32_t root = 0;
  auto fail = [&](const std::string& msg) { throw ParseError(msg, 1, pos + 1); };
  auto parse = [&](auto&& self, LeafAddress node) -> void {
    if (pos >= text.size()) fail("unexpected end of forest string");
    const char c = text[pos++];
    if (c == '.') {
      leaves.push_back(std::move(node));
    } else if (c == 'x') {
      for (int d = 0; d < arity; ++d) self(self, node.child(static_cast<std::uint8_t>(d)));
    } else {
      --pos;
      fail(std::string("unexpected character '") + c + "' in forest string");
    }
  };
  while (true) {
    parse(parse, LeafAddress{root, {}});
    if (pos == text.size()) break;
    if (text[pos] != '|') fail("expected '|' between roots");
    ++pos;
    ++root;
  }
  return NaryForest(arity, static_cast<int>(root + 1), std::move(leaves));
}

std::size_t NaryForest::caret_count() const {
  return (leaves_.size() - static_cast<std::size_t>(roots_)) / static_cast<std::size_t>(arity_ - 1);
}

NaryForest NaryForest::expand(std::size_t index) const {
  if (index >= leaves_.size()) throw std::out_of_range("expand: leaf index out of range");
  NaryForest f = *this;
  split(f.leaves_, index, arity_);
  return f;
}

std::string NaryForest::to_preorder() const {
  std::string out;
  std::size_t pos = 0;
  auto emit = [&](auto&& self, const LeafAddress& node) -> void {
    if (leaves_[pos] == node) {
      out += '.';
      ++pos;
      return;
    }
    out += 'x';
    for (int d = 0; d < arity_; ++d) self(self, node.child(static_cast<std::uint8_t>(d)));
  };
  for (int r = 0; r < roots_; ++r) {
    if (r) out += '|';
    emit(emit, LeafAddress{static_cast<std::uint32_t>(r), {}});
  }
  return out;
}

Rational NaryForest::leaf_start(std::size_t index) const {
  const LeafAddress& a = leaves_.at(index);
  mpz_class num = 0;
  for (auto d : a.path) num = num * arity_ + d;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(arity_), a.path.size());
  Rational r(num, den);
  r.canonicalize();
  return r + a.root;
}

Rational NaryForest::leaf_width(std::size_t index) const {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(arity_), leaves_.at(index).path.size());
  return Rational(1, den);
}

// ---------------------------------------------------------------- elements

TreePairElement TreePairElement::identity(int arity, int roots) {
  return make_unreduced(NaryForest::trivial(arity, roots), NaryForest::trivial(arity, roots), 0);
}

TreePairElement TreePairElement::make_unreduced(NaryForest domain, NaryForest range, long shift) {
  if (domain.arity() != range.arity() || domain.roots() != range.roots())
    throw std::invalid_argument("domain and range forests have different shapes");
  if (domain.leaf_count() != range.leaf_count())
    throw std::invalid_argument("domain and range forests have different leaf counts");
  TreePairElement g;
  g.shift_ = mod(shift, static_cast<long>(domain.leaf_count()));
  g.domain_ = std::move(domain);
  g.range_ = std::move(range);
  return g;
}

TreePairElement TreePairElement::make(NaryForest domain, NaryForest range, long shift) {
  TreePairElement g = make_unreduced(std::move(domain), std::move(range), shift);
  g.reduce_in_place();
  return g;
}

bool TreePairElement::is_identity() const {
  const TreePairElement r = reduced();
  return r.shift_ == 0 && r.domain_.leaf_count() == static_cast<std::size_t>(r.roots());
}

bool TreePairElement::is_reduced() const { return reduced() == *this; }

TreePairElement TreePairElement::reduced() const {
  TreePairElement g = *this;
  g.reduce_in_place();
  return g;
}

void TreePairElement::reduce_in_place() {
  const int n = arity();
  auto& dom = domain_.leaves_;
  auto& ran = range_.leaves_;
  std::size_t i = 0;
  while (i + static_cast<std::size_t>(n) <= dom.size()) {
    const long N = static_cast<long>(dom.size());
    const auto j = static_cast<std::size_t>(mod(static_cast<long>(i) + shift_, N));
    if (sibling_block(dom, i, n) && sibling_block(ran, j, n)) {
      collapse(dom, i, n);
      collapse(ran, j, n);
      shift_ = mod(static_cast<long>(j) - static_cast<long>(i), static_cast<long>(dom.size()));
      // A collapse can complete a sibling block that starts up to n-1 leaves earlier.
      i = i >= static_cast<std::size_t>(n) ? i - static_cast<std::size_t>(n) : 0;
      continue;
    }
    ++i;
  }
}

void TreePairElement::expand_domain_in_place(std::size_t i) {
  const long N = static_cast<long>(domain_.leaf_count());
  const auto j = static_cast<std::size_t>(mod(static_cast<long>(i) + shift_, N));
  split(domain_.leaves_, i, arity());
  split(range_.leaves_, j, arity());
  shift_ = mod(static_cast<long>(j) - static_cast<long>(i), static_cast<long>(domain_.leaf_count()));
}

void TreePairElement::expand_range_in_place(std::size_t j) {
  const long N = static_cast<long>(domain_.leaf_count());
  const auto i = static_cast<std::size_t>(mod(static_cast<long>(j) - shift_, N));
  expand_domain_in_place(i);
}

TreePairElement TreePairElement::expand_domain_leaf(std::size_t index) const {
  if (index >= leaf_count()) throw std::out_of_range("expand_domain_leaf: index out of range");
  TreePairElement g = *this;
  g.expand_domain_in_place(index);
  return g;
}

TreePairElement compose(const TreePairElement& a, const TreePairElement& b) {
  if (a.arity() != b.arity() || a.roots() != b.roots())
    throw std::invalid_argument("compose: elements of different groups T_{" +
                                std::to_string(a.arity()) + "," + std::to_string(a.roots()) +
                                "} and T_{" + std::to_string(b.arity()) + "," +
                                std::to_string(b.roots()) + "}");
  TreePairElement x = a, y = b;
  std::size_t pos = 0;
  while (pos < x.range_.leaves_.size() && pos < y.domain_.leaves_.size()) {
    const LeafAddress& u = x.range_.leaves_[pos];
    const LeafAddress& v = y.domain_.leaves_[pos];
    if (u == v) {
      ++pos;
    } else if (is_prefix(u, v)) {
      x.expand_range_in_place(pos);
    } else {
      y.expand_domain_in_place(pos);
    }
  }
  TreePairElement out;
  out.domain_ = std::move(x.domain_);
  out.range_ = std::move(y.range_);
  out.shift_ = mod(x.shift_ + y.shift_, static_cast<long>(out.domain_.leaf_count()));
  out.reduce_in_place();
  return out;
}

TreePairElement inverse(const TreePairElement& a) {
  return TreePairElement::make(a.range(), a.domain(), -a.shift());
}

TreePairElement power(const TreePairElement& g, long e) {
  TreePairElement base = e < 0 ? inverse(g) : g;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
  TreePairElement acc = TreePairElement::identity(g.arity(), g.roots());
  while (k) {
    if (k & 1UL) acc = compose(base, acc);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return acc;
}

std::string TreePairElement::to_string() const {
  return "(" + domain_.to_preorder() + ", " + range_.to_preorder() + ", " + std::to_string(shift_) + ")";
}

std::string TreePairElement::to_json() const {
  nlohmann::ordered_json j;
  j["arity"] = arity();
  j["roots"] = roots();
  j["domain"] = domain_.to_preorder();
  j["range"] = range_.to_preorder();
  j["shift"] = shift_;
  return j.dump();
}

TreePairElement TreePairElement::parse_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const int n = j.at("arity").get<int>();
    const int m = j.at("roots").get<int>();
    NaryForest d = NaryForest::from_preorder(n, j.at("domain").get<std::string>());
    NaryForest r = NaryForest::from_preorder(n, j.at("range").get<std::string>());
    if (d.roots() != m || r.roots() != m)
      throw ParseError("forest root count does not match 'roots'", 1, 1);
    return make(std::move(d), std::move(r), j.at("shift").get<long>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed tree-pair JSON: ") + e.what(), 1, 1);
  }
}

// ---------------------------------------------------------------- rotations

NaryForest rotation_forest(const Params& p, int k) {
  const int h = hbar(p);
  if (k < 0 || k > h)
    throw std::out_of_range("rotation height " + std::to_string(k) + " outside 0.." +
                            std::to_string(h));
  const int n = static_cast<int>(p.n), m = static_cast<int>(p.m);
  std::vector<LeafAddress> leaves;
  std::deque<LeafAddress> queue;
  for (int r = 0; r < m; ++r) {
    leaves.push_back(LeafAddress{static_cast<std::uint32_t>(r), {}});
    queue.push_back(leaves.back());
  }
  for (int step = 0; step < k; ++step) {
    const LeafAddress node = queue.front();
    queue.pop_front();
    const auto it = std::find(leaves.begin(), leaves.end(), node);
    split(leaves, static_cast<std::size_t>(it - leaves.begin()), n);
    for (int d = 0; d < n; ++d) queue.push_back(node.child(static_cast<std::uint8_t>(d)));
  }
  return NaryForest(n, m, std::move(leaves));
}

TreePairElement rotation_element(const Params& p, int k) {
  NaryForest t = rotation_forest(p, k);
  return TreePairElement::make(t, t, 1);
}

TreePairElement evaluate_rotation_word(const Params& p, const Word& w) {
  std::vector<TreePairElement> gens;
  for (int k = 0; k <= hbar(p); ++k) gens.push_back(rotation_element(p, k));
  TreePairElement acc = TreePairElement::identity(static_cast<int>(p.n), static_cast<int>(p.m));
  for (const auto& s : w.syllables()) {
    const std::string& g = s.generator;
    std::size_t k = gens.size();
    if (g.size() > 1 && g[0] == 'r' &&
        std::all_of(g.begin() + 1, g.end(), [](char c) { return c >= '0' && c <= '9'; }))
      k = std::stoul(g.substr(1));
    if (k >= gens.size()) throw std::invalid_argument("no rotation element for generator '" + g + "'");
    if (!s.exponent.fits_slong_p()) throw std::invalid_argument("exponent too large");
    acc = compose(power(gens[k], s.exponent.get_si()), acc);
  }
  return acc;
}

// ---------------------------------------------------------------- dynamics

long theta_modulus(int arity, int roots) { return std::gcd(static_cast<long>(roots), static_cast<long>(arity - 1)); }

long theta(const TreePairElement& g) {
  return mod(g.reduced().shift(), theta_modulus(g.arity(), g.roots()));
}

namespace {

std::size_t leaf_containing(const NaryForest& f, const Rational& x) {
  for (std::size_t i = 0; i < f.leaf_count(); ++i) {
    const Rational a = f.leaf_start(i);
    if (a <= x && x < a + f.leaf_width(i)) return i;
  }
  throw std::invalid_argument("point outside the circle");
}

Rational normalize(const Rational& x, int m) {
  Rational q = x / m;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = x - Rational(fl * m);
  r.canonicalize();
  return r;
}

std::size_t image_index(const TreePairElement& g, std::size_t i) {
  return static_cast<std::size_t>(mod(static_cast<long>(i) + g.shift(), static_cast<long>(g.leaf_count())));
}

long log_slope(const TreePairElement& g, std::size_t i) {
  return static_cast<long>(g.domain().leaves()[i].depth()) -
         static_cast<long>(g.range().leaves()[image_index(g, i)].depth());
}

}  // namespace

Rational apply(const TreePairElement& g, const Rational& x) {
  const Rational y = normalize(x, g.roots());
  const std::size_t i = leaf_containing(g.domain(), y);
  const std::size_t j = image_index(g, i);
  Rational out = g.range().leaf_start(j) +
                 (y - g.domain().leaf_start(i)) * g.range().leaf_width(j) / g.domain().leaf_width(i);
  out.canonicalize();
  return out;
}

std::pair<long, long> slopes_at(const TreePairElement& g, const Rational& x) {
  const Rational y = normalize(x, g.roots());
  if (apply(g, y) != y)
    throw std::invalid_argument("slopes_at: element does not fix " + y.get_str());
  const std::size_t right = leaf_containing(g.domain(), y);
  std::size_t left = right;
  if (g.domain().leaf_start(right) == y)
    left = right == 0 ? g.leaf_count() - 1 : right - 1;
  return {log_slope(g, left), log_slope(g, right)};
}

std::vector<Rational> isolated_fixed_points(const TreePairElement& g) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < g.leaf_count(); ++i) {
    const std::size_t j = image_index(g, i);
    const Rational a = g.domain().leaf_start(i), w = g.domain().leaf_width(i);
    const Rational b = g.range().leaf_start(j);
    const Rational s = g.range().leaf_width(j) / w;
    if (s == 1) continue;
    Rational x = (b - s * a) / (1 - s);
    x.canonicalize();
    if (a <= x && x < a + w) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<long> element_order(const TreePairElement& g, long bound) {
  if (bound < 1) throw std::invalid_argument("element_order: bound must be >= 1");
  TreePairElement acc = g.reduced();
  for (long t = 1; t <= bound; ++t) {
    if (acc.is_identity()) return t;
    acc = compose(g, acc);
  }
  return std::nullopt;
}

VerificationReport verify_T_presentation(const Params& p) {
  VerificationReport report;
  report.subject = "T_{" + std::to_string(p.n) + "," + std::to_string(p.m) + "} tree-pair model";
  const FinitePresentation pres = build_T(p);
  for (std::size_t i = 0; i < pres.relators().size(); ++i) {
    const Word& w = pres.relators()[i];
    report.checks.push_back(RelatorCheck{pres.label(i).value_or(std::to_string(i)), w.to_string(),
                                         evaluate_rotation_word(p, w).is_identity()});
  }
  return report;
}

}  // namespace brt
