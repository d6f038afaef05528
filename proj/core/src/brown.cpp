#include "brt/brown.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "brt/abelian.hpp"

namespace brt {

namespace {

std::string vertex_tag(const BrownInput& in, std::size_t v) {
  if (v < in.vertex_names.size() && !in.vertex_names[v].empty()) return in.vertex_names[v];
  return "v" + std::to_string(v);
}

void require_over(const Word& w, const FinitePresentation& p, const std::string& where) {
  for (const auto& s : w.syllables())
    if (!p.has_generator(s.generator))
      throw PresentationError(where + " uses generator '" + s.generator +
                              "' not declared at that vertex");
}

}  // namespace

void BrownInput::validate() const {
  const std::size_t nv = vertices.size();
  if (!vertex_names.empty() && vertex_names.size() != nv)
    throw PresentationError("vertex_names must be empty or name every vertex");
  for (const auto& name : vertex_names)
    if (!is_valid_label(name)) throw PresentationError("invalid vertex name '" + name + "'");

  std::set<std::string> seen;
  for (std::size_t v = 0; v < nv; ++v)
    for (const auto& g : vertices[v].generators())
      if (!seen.insert(g).second)
        throw PresentationError("generator '" + g + "' declared at more than one vertex");

  // Tree check: nv-1 edges, no cycles (union-find).
  if (nv > 0 && edges.size() != nv - 1)
    throw PresentationError("edges do not form a tree: " + std::to_string(edges.size()) +
                            " edges on " + std::to_string(nv) + " vertices");
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    const std::string where = "edge " + std::to_string(e);
    if (edge.origin >= nv || edge.terminal >= nv)
      throw PresentationError(where + " has an endpoint outside the vertex list");
    const std::size_t a = find(edge.origin), b = find(edge.terminal);
    if (a == b) throw PresentationError(where + " closes a cycle");
    parent[a] = b;
    for (const auto& g : edge.edge_gens) {
      if (!is_valid_generator_name(g))
        throw PresentationError(where + " has invalid generator name '" + g + "'");
      auto o = edge.into_origin.find(g);
      auto t = edge.into_terminal.find(g);
      if (o == edge.into_origin.end() || t == edge.into_terminal.end())
        throw PresentationError(where + " injection is not defined on '" + g + "'");
      require_over(o->second, vertices[edge.origin], where + " origin image of " + g);
      require_over(t->second, vertices[edge.terminal], where + " terminal image of " + g);
    }
  }

  for (std::size_t s = 0; s < squares.size(); ++s) {
    const auto& sq = squares[s];
    const std::string where = "square " + (sq.name.empty() ? std::to_string(s) : sq.name);
    if (!sq.name.empty() && !is_valid_label(sq.name))
      throw PresentationError("invalid square name '" + sq.name + "'");
    if (sq.steps.empty()) throw PresentationError(where + " has no steps");
    for (const auto& step : sq.steps) {
      if (step.vertex >= nv) throw PresentationError(where + " step names an unknown vertex");
      require_over(step.element, vertices[step.vertex], where + " step");
    }
    require_over(sq.closer, vertices[sq.steps.front().vertex], where + " closer");
  }
}

FinitePresentation assemble(const BrownInput& input) {
  input.validate();
  std::vector<std::string> gens;
  std::vector<Word> rels;
  std::map<std::size_t, std::string> labels;

  for (std::size_t v = 0; v < input.vertices.size(); ++v) {
    const auto& stab = input.vertices[v];
    gens.insert(gens.end(), stab.generators().begin(), stab.generators().end());
    for (std::size_t i = 0; i < stab.relators().size(); ++i) {
      const auto l = stab.label(i);
      labels[rels.size()] = "stab_" + vertex_tag(input, v) + "_" + (l ? *l : std::to_string(i));
      rels.push_back(stab.relators()[i]);
    }
  }
  for (const auto& edge : input.edges) {
    for (const auto& g : edge.edge_gens) {
      labels[rels.size()] = "edge_" + vertex_tag(input, edge.origin) + "_" +
                            vertex_tag(input, edge.terminal) + "_" + g;
      rels.push_back(free_reduce(edge.into_origin.find(g)->second *
                                 edge.into_terminal.find(g)->second.inverse()));
    }
  }
  for (std::size_t s = 0; s < input.squares.size(); ++s) {
    const auto& sq = input.squares[s];
    Word w;
    for (const auto& step : sq.steps) w = w * step.element;
    labels[rels.size()] = "square_" + (sq.name.empty() ? std::to_string(s) : sq.name);
    rels.push_back(free_reduce(w * sq.closer.inverse()));
  }
  return FinitePresentation(std::move(gens), std::move(rels), std::move(labels));
}

BrownInput d4_fixture() {
  auto stab = [](const std::string& g) {
    return FinitePresentation({g}, {Word::generator(g, 2)}, {{0, "order2_" + g}});
  };
  const Word one;
  const Word sA = Word::generator("sA"), sB = Word::generator("sB"), sC = Word::generator("sC");
  BrownInput in;
  in.vertex_names = {"A", "B", "C"};
  in.vertices = {stab("sA"), stab("sB"), stab("sC")};
  in.edges = {BrownEdge{1, 0, {}, {}, {}}, BrownEdge{2, 1, {}, {}, {}}};
  // Vertex indices: A = 0, B = 1, C = 2.
  in.squares.push_back(BrownSquare{"ABCD", {{2, one}, {1, one}, {0, sA}, {1, one}}, sC});
  in.squares.push_back(BrownSquare{
      "BCDEFGHI",
      {{1, one}, {2, sC}, {1, sB}, {2, sC}, {1, sB}, {2, sC}, {1, sB}, {2, sC}},
      sB.inverse()});
  return in;
}

BrownInput brT_brown_input(const Params& p) {
  const int h = hbar(p);
  auto local = [](long i, long k) { return twist_name(i) + "_" + std::to_string(k); };
  auto localize = [&](const Word& w, long k) {
    std::vector<Syllable> out;
    for (const auto& s : w.syllables()) {
      const bool twist = s.generator.front() == 't';
      out.push_back(Syllable{twist ? s.generator + "_" + std::to_string(k) : s.generator,
                             s.exponent});
    }
    return Word(std::move(out));
  };

  BrownInput in;
  for (int k = 0; k <= h; ++k) {
    const FinitePresentation stab = build_stab(k, p);
    std::vector<std::string> gens;
    for (const auto& g : stab.generators())
      gens.push_back(g.front() == 't' ? g + "_" + std::to_string(k) : g);
    std::vector<Word> rels;
    for (const auto& w : stab.relators()) rels.push_back(localize(w, k));
    in.vertex_names.push_back("S" + std::to_string(k));
    in.vertices.emplace_back(std::move(gens), std::move(rels), stab.labels());
  }
  for (int k = 0; k < h; ++k) {
    BrownEdge e;
    e.origin = static_cast<std::size_t>(k);
    e.terminal = static_cast<std::size_t>(k + 1);
    for (long i = 1; i <= k; ++i) {
      const std::string g = twist_name(i);
      e.edge_gens.push_back(g);
      e.into_origin[g] = Word::generator(local(i, k));
      e.into_terminal[g] = Word::generator(local(i, k + 1));
    }
    in.edges.push_back(std::move(e));
  }
  for (int i = 1; i <= h - 1; ++i) {
    const auto [eta, gamma] = eta_gamma(i, p);
    const auto ui = static_cast<std::size_t>(i);
    for (long j = 1; j <= square_count(p, i); ++j) {
      const Word h2 = Word::generator(rotation_name(i), j - 1);
      const Word h3 =
          (localize(eta, i + 1) * Word::generator(rotation_name(i + 1), j - 1 + p.n)).inverse();
      const Word h4 = (localize(gamma, i) * Word::generator(rotation_name(i), -j - p.n)).inverse();
      BrownSquare sq;
      sq.name = "i" + std::to_string(i) + "_j" + std::to_string(j);
      sq.steps = {{ui - 1, Word{}}, {ui, h2}, {ui + 1, free_reduce(h3)}, {ui, free_reduce(h4)}};
      sq.closer = Word::generator(rotation_name(i - 1), j);
      in.squares.push_back(std::move(sq));
    }
  }
  return in;
}

FinitePresentation merge_identified(const FinitePresentation& p) {
  const auto& gens = p.generators();
  std::map<std::string, std::string> parent;
  for (const auto& g : gens) parent[g] = g;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    const std::string& up = parent.at(x);
    if (up == x) return x;
    std::string root = find(up);
    parent[x] = root;
    return root;
  };
  auto identifies = [](const Word& w) {
    const auto& s = w.syllables();
    return s.size() == 2 && s[0].generator != s[1].generator &&
           ((s[0].exponent == 1 && s[1].exponent == -1) ||
            (s[0].exponent == -1 && s[1].exponent == 1));
  };
  for (const auto& w : p.relators()) {
    if (!identifies(w)) continue;
    std::string a = find(w.syllables()[0].generator), b = find(w.syllables()[1].generator);
    if (a == b) continue;
    if (generator_less(b, a)) std::swap(a, b);
    parent[b] = a;
  }
  Substitution map;
  std::vector<std::string> survivors;
  for (const auto& g : gens) {
    const std::string root = find(g);
    map[g] = Word::generator(root);
    if (root == g) survivors.push_back(g);
  }
  std::vector<Word> rels;
  std::map<std::size_t, std::string> labels;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (identifies(p.relators()[i])) continue;
    Word w = substitute(p.relators()[i], map);
    if (w.empty()) continue;
    if (auto l = p.label(i)) labels[rels.size()] = *l;
    rels.push_back(std::move(w));
  }
  return FinitePresentation(std::move(survivors), std::move(rels), std::move(labels));
}

FinitePresentation relabel(const FinitePresentation& p,
                           const std::map<std::string, std::string>& renaming) {
  auto rename = [&](const std::string& g) {
    auto it = renaming.find(g);
    return it == renaming.end() ? g : it->second;
  };
  std::vector<std::string> gens;
  for (const auto& g : p.generators()) gens.push_back(rename(g));
  std::vector<Word> rels;
  for (const auto& w : p.relators()) {
    std::vector<Syllable> out;
    for (const auto& s : w.syllables()) out.push_back(Syllable{rename(s.generator), s.exponent});
    rels.emplace_back(std::move(out));
  }
  return FinitePresentation(std::move(gens), std::move(rels), p.labels());
}

std::vector<std::string> relator_set_up_to_inversion(const FinitePresentation& p) {
  std::set<std::string> out;
  for (const auto& w : p.relators()) {
    if (w.empty()) continue;
    std::string a = w.to_string(), b = w.inverse().to_string();
    out.insert(std::min(a, b));
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::ordered_json substitution_json(const Substitution& s) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : s) j[k] = v.to_string();
  return j;
}

Substitution substitution_from_json(const nlohmann::json& j) {
  Substitution s;
  for (const auto& [k, v] : j.items()) s[k] = Word::parse(v.get<std::string>());
  return s;
}

}  // namespace

std::string BrownInput::to_json(int indent) const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    nlohmann::ordered_json entry;
    entry["name"] = vertex_tag(*this, v);
    entry["stabilizer"] = nlohmann::ordered_json::parse(vertices[v].to_json());
    verts.push_back(std::move(entry));
  }
  j["vertices"] = std::move(verts);
  nlohmann::ordered_json es = nlohmann::ordered_json::array();
  for (const auto& e : edges) {
    nlohmann::ordered_json entry;
    entry["origin"] = e.origin;
    entry["terminal"] = e.terminal;
    entry["edge_gens"] = e.edge_gens;
    entry["into_origin"] = substitution_json(e.into_origin);
    entry["into_terminal"] = substitution_json(e.into_terminal);
    es.push_back(std::move(entry));
  }
  j["edges"] = std::move(es);
  nlohmann::ordered_json sqs = nlohmann::ordered_json::array();
  for (const auto& s : squares) {
    nlohmann::ordered_json entry;
    entry["name"] = s.name;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& st : s.steps)
      steps.push_back({{"vertex", st.vertex}, {"element", st.element.to_string()}});
    entry["steps"] = std::move(steps);
    entry["closer"] = s.closer.to_string();
    sqs.push_back(std::move(entry));
  }
  j["squares"] = std::move(sqs);
  return j.dump(indent);
}

BrownInput BrownInput::parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid Brown input JSON: ") + e.what(), 1, e.byte);
  }
  BrownInput in;
  try {
    for (const auto& v : j.at("vertices")) {
      in.vertex_names.push_back(v.value("name", std::string{}));
      in.vertices.push_back(FinitePresentation::parse_json(v.at("stabilizer").dump()));
    }
    for (const auto& e : j.at("edges")) {
      BrownEdge edge;
      edge.origin = e.at("origin").get<std::size_t>();
      edge.terminal = e.at("terminal").get<std::size_t>();
      edge.edge_gens = e.at("edge_gens").get<std::vector<std::string>>();
      edge.into_origin = substitution_from_json(e.at("into_origin"));
      edge.into_terminal = substitution_from_json(e.at("into_terminal"));
      in.edges.push_back(std::move(edge));
    }
    for (const auto& s : j.at("squares")) {
      BrownSquare sq;
      sq.name = s.value("name", std::string{});
      for (const auto& st : s.at("steps"))
        sq.steps.push_back(SquareStep{st.at("vertex").get<std::size_t>(),
                                      Word::parse(st.at("element").get<std::string>())});
      sq.closer = Word::parse(s.at("closer").get<std::string>());
      in.squares.push_back(std::move(sq));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed Brown input: ") + e.what(), 0, 0);
  }
  in.validate();
  return in;
}

// ---------------------------------------------------------------- checks

VerificationReport verify_d4() {
  VerificationReport report;
  report.subject = "dihedral fixture";
  const FinitePresentation p = assemble(d4_fixture());
  const std::vector<std::string> expected = {"sA^2", "sB^2", "sC^2", "sA sC^-1",
                                             "sC sB sC sB sC sB sC sB"};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const bool present = i < p.relators().size() && p.relators()[i].to_string() == expected[i];
    report.checks.push_back({p.label(i).value_or("relator_" + std::to_string(i)), expected[i], present});
  }
  report.checks.push_back({"relator_count", std::to_string(p.relators().size()) + " relators",
                           p.relators().size() == expected.size()});
  const AbelianGroup ab = abelianisation(p);
  report.checks.push_back({"abelianisation", ab.to_string(),
                           ab == AbelianGroup::from_cyclic_orders({Integer(2), Integer(2)})});
  return report;
}

VerificationReport verify_brown_brT(const Params& p) {
  VerificationReport report;
  report.subject = "assembled brT_{" + std::to_string(p.n) + "," + std::to_string(p.m) + "}";
  const FinitePresentation assembled = assemble(brT_brown_input(p));
  const FinitePresentation direct = build_brT(p);
  const FinitePresentation merged = merge_identified(assembled);
  std::map<std::string, std::string> renaming;
  for (const auto& g : merged.generators()) {
    const auto cut = g.find('_');
    if (cut != std::string::npos) renaming[g] = g.substr(0, cut);
  }
  const FinitePresentation local = relabel(merged, renaming);

  std::vector<std::string> a = local.generators(), b = direct.generators();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  report.checks.push_back({"generators", std::to_string(a.size()) + " generators", a == b});
  const auto ra = relator_set_up_to_inversion(local), rb = relator_set_up_to_inversion(direct);
  report.checks.push_back({"relator_set", std::to_string(ra.size()) + " distinct relators", ra == rb});
  const AbelianGroup x = abelianisation(assembled), y = abelianisation(direct);
  report.checks.push_back({"abelianisation", x.to_string() + " vs " + y.to_string(), x == y});
  return report;
}

}  // namespace brt
