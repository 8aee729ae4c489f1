#include "borbit/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace borbit {

namespace {

std::vector<int> one_based(const std::vector<int>& word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int i : word) out.push_back(i + 1);
  return out;
}

std::vector<Vec> set_coefficients(const RootSystem& rs, const OrthogonalSet& s) {
  std::vector<Vec> out;
  out.reserve(s.roots.size());
  for (int r : s.roots) out.push_back(rs.roots[r]);
  return out;
}

void fill_edges(PosetDocument& doc, const OrbitPoset& p) {
  doc.edges = p.covers;
  for (const auto& d : p.decorations)
    doc.decorations.push_back({d[0], d[1], d[2] + 1});
}

}  // namespace

bool PosetDocument::Node::operator==(const Node& o) const {
  if (id != o.id || v != o.v || dim != o.dim || L != o.L || sigma != o.sigma ||
      nu != o.nu || S.size() != o.S.size())
    return false;
  for (std::size_t i = 0; i < S.size(); ++i)
    if (!exact_eq(S[i], o.S[i])) return false;
  return true;
}

bool PosetDocument::operator==(const PosetDocument& o) const {
  return cartan_type == o.cartan_type && rank == o.rank && node == o.node &&
         space == o.space && version == o.version && nodes == o.nodes &&
         edges == o.edges && decorations == o.decorations &&
         has_decorations == o.has_decorations;
}

PosetDocument build_nilradical_document(const ParabolicQuotient& q,
                                        BruhatCache& cache) {
  const RootSystem& rs = q.ctx.rs;
  PosetDocument doc;
  doc.cartan_type = std::string(1, rs.cartan_type);
  doc.rank = rs.rank;
  doc.node = q.ctx.node + 1;
  doc.space = "pu";

  std::vector<OrthogonalSet> sets = enumerate_nilradical(q.ctx);
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
    PosetDocument::Node n;
    n.id = i;
    n.S = set_coefficients(rs, sets[i]);
    Involution s = sigma_of(rs, [&] {
      std::vector<int> img;
      for (int r : sets[i].roots) img.push_back(apply_root(rs, q.w_P, r));
      std::sort(img.begin(), img.end());
      return img;
    }());
    n.sigma = one_based(s.element.word);
    n.L = s.L;
    n.dim = nilradical_dim(q, sets[i]);
    doc.nodes.push_back(std::move(n));
  }
  OrbitPoset p = nilradical_order(q, sets, cache);
  fill_edges(doc, p);
  return doc;
}

PosetDocument build_hermitian_document(const HermitianOrbits& orb,
                                       BruhatCache& cache, int threads,
                                       bool restrict_by_length) {
  const ParabolicQuotient& q = orb.q;
  const RootSystem& rs = q.ctx.rs;
  PosetDocument doc;
  doc.cartan_type = std::string(1, rs.cartan_type);
  doc.rank = rs.rank;
  doc.node = q.ctx.node + 1;
  doc.space = "gl";
  doc.has_decorations = true;

  for (int i = 0; i < orb.size(); ++i) {
    const AdmissiblePair& p = orb.pairs[i];
    PosetDocument::Node n;
    n.id = i;
    n.v = one_based(q.elements[p.v].word);
    n.S = set_coefficients(rs, p.S);
    n.dim = p.dim;
    n.L = p.L;
    n.sigma = one_based(p.sigma.element.word);
    n.nu = one_based(q.elements[p.nu].word);
    doc.nodes.push_back(std::move(n));
  }
  OrbitPoset p = rr_order(orb, cache, threads, restrict_by_length);
  fill_edges(doc, p);
  return doc;
}

PosetDocument build_fiber_document(const ParabolicQuotient& q,
                                   const WeylElement& v, BruhatCache& cache) {
  const RootSystem& rs = q.ctx.rs;
  PosetDocument doc;
  doc.cartan_type = std::string(1, rs.cartan_type);
  doc.rank = rs.rank;
  doc.node = q.ctx.node + 1;
  doc.space = "fiber:" + word_str(one_based(v.word));

  std::vector<OrthogonalSet> sets = enumerate_fiber_inductive(q, v);
  const int psi_size = static_cast<int>(q.ctx.psi.size());
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
    PosetDocument::Node n;
    n.id = i;
    n.v = one_based(v.word);
    n.S = set_coefficients(rs, sets[i]);
    std::vector<int> img;
    for (int r : sets[i].roots) img.push_back(apply_root(rs, v, r));
    std::sort(img.begin(), img.end());
    Involution s = sigma_of(rs, img);
    n.sigma = one_based(s.element.word);
    n.L = s.L;
    n.dim = psi_size + s.L;
    WeylElement v_sigma = mul(rs, v, sigma_of(rs, sets[i].roots).element);
    n.nu = one_based(min_coset_rep(rs, q.ctx, v_sigma).word);
    doc.nodes.push_back(std::move(n));
  }
  OrbitPoset p = fiber_order(q, v, sets, cache);
  fill_edges(doc, p);
  return doc;
}

// ---------------------------------------------------------------------------
// JSON

std::string to_json(const PosetDocument& doc) {
  using json = nlohmann::ordered_json;
  json j;
  j["header"] = {{"cartan_type", doc.cartan_type},
                 {"rank", doc.rank},
                 {"node", doc.node},
                 {"space", doc.space},
                 {"version", doc.version}};
  j["nodes"] = json::array();
  for (const auto& n : doc.nodes) {
    json S = json::array();
    for (const Vec& r : n.S) {
      json t = json::array();
      for (Eigen::Index k = 0; k < r.size(); ++k) t.push_back(r[k]);
      S.push_back(t);
    }
    j["nodes"].push_back({{"id", n.id},
                          {"v", n.v},
                          {"S", S},
                          {"dim", n.dim},
                          {"L", n.L},
                          {"sigma", n.sigma},
                          {"nu", n.nu}});
  }
  j["edges"] = json::array();
  for (auto [c, p] : doc.edges) j["edges"].push_back({c, p});
  if (doc.has_decorations) {
    j["decorations"] = json::array();
    for (const auto& d : doc.decorations)
      j["decorations"].push_back(
          {{"edge", {d.child, d.parent}}, {"alpha", d.alpha}});
  }
  return j.dump(2) + "\n";
}

PosetDocument parse_json(const std::string& text) {
  using json = nlohmann::ordered_json;
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw input_error(std::string("bad poset document: ") + e.what());
  }
  try {
    PosetDocument doc;
    const auto& h = j.at("header");
    doc.cartan_type = h.at("cartan_type").get<std::string>();
    doc.rank = h.at("rank").get<int>();
    doc.node = h.at("node").get<int>();
    doc.space = h.at("space").get<std::string>();
    doc.version = h.at("version").get<std::string>();
    for (const auto& nj : j.at("nodes")) {
      PosetDocument::Node n;
      n.id = nj.at("id").get<int>();
      n.v = nj.at("v").get<std::vector<int>>();
      for (const auto& t : nj.at("S")) {
        Vec r(t.size());
        for (std::size_t k = 0; k < t.size(); ++k) r[k] = t[k].get<Int>();
        n.S.push_back(std::move(r));
      }
      n.dim = nj.at("dim").get<int>();
      n.L = nj.at("L").get<int>();
      n.sigma = nj.at("sigma").get<std::vector<int>>();
      n.nu = nj.at("nu").get<std::vector<int>>();
      doc.nodes.push_back(std::move(n));
    }
    for (const auto& e : j.at("edges"))
      doc.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("decorations")) {
      doc.has_decorations = true;
      for (const auto& d : j.at("decorations"))
        doc.decorations.push_back({d.at("edge").at(0).get<int>(),
                                   d.at("edge").at(1).get<int>(),
                                   d.at("alpha").get<int>()});
    }
    return doc;
  } catch (const json::exception& e) {
    throw input_error(std::string("bad poset document: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// DOT

std::string word_str(const std::vector<int>& one_based_word) {
  if (one_based_word.empty()) return "e";
  bool wide = std::any_of(one_based_word.begin(), one_based_word.end(),
                          [](int i) { return i > 9; });
  std::string s;
  for (std::size_t k = 0; k < one_based_word.size(); ++k) {
    if (wide && k) s += ",";
    s += std::to_string(one_based_word[k]);
  }
  return s;
}

std::string roots_str(const std::vector<Vec>& roots) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (Eigen::Index k = 0; k < roots[i].size(); ++k)
      os << (k ? "," : "") << roots[i][k];
    os << "]";
  }
  os << "}";
  return os.str();
}

std::string to_dot(const PosetDocument& doc) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (const auto& n : doc.nodes) {
    os << "  n" << n.id << " [label=\"v=" << word_str(n.v)
       << "; S=" << roots_str(n.S) << "; dim=" << n.dim << "\"];\n";
  }
  for (auto [c, p] : doc.edges) {
    std::string labels;
    for (const auto& d : doc.decorations)
      if (d.child == c && d.parent == p)
        labels += (labels.empty() ? "" : ",") + std::to_string(d.alpha);
    os << "  n" << c << " -> n" << p;
    if (!labels.empty()) os << " [label=\"" << labels << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace borbit
