#pragma once

// PosetDocument: the serialized form of an orbit poset. JSON is the golden
// fixture format (stable key order, byte-identical across runs and thread
// counts); DOT is for visualization only.
//
// Schema: header {cartan_type, rank, node, space, version}; nodes
// [{id, v, S, dim, L, sigma, nu}]; edges [[child, parent], ...]; for the
// hermitian space also decorations [{edge: [child, parent], alpha}, ...].
// Words are arrays of 1-based simple-reflection indices (lexicographically
// minimal reduced word); S entries are coefficient tuples over the simple
// roots. Nilradical nodes have empty v and nu, and sigma = sigma_{w_P(S)}.

#include "borbit/orbits.hpp"

#include <string>

namespace borbit {

struct PosetDocument {
  std::string cartan_type;
  int rank = 0;
  int node = 0;  // 1-based
  std::string space;
  std::string version = "1";

  struct Node {
    int id = 0;
    std::vector<int> v;      // 1-based word
    std::vector<Vec> S;      // coefficient tuples
    int dim = 0;
    int L = 0;
    std::vector<int> sigma;  // 1-based word
    std::vector<int> nu;     // 1-based word

    bool operator==(const Node& o) const;
  };
  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> edges;
  struct Decoration {
    int child = 0, parent = 0, alpha = 0;  // alpha 1-based
    bool operator==(const Decoration&) const = default;
  };
  std::vector<Decoration> decorations;
  bool has_decorations = false;  // key emitted only for the hermitian space

  bool operator==(const PosetDocument& o) const;
};

PosetDocument build_nilradical_document(const ParabolicQuotient& q,
                                        BruhatCache& cache);
PosetDocument build_hermitian_document(const HermitianOrbits& orb,
                                       BruhatCache& cache, int threads = 1,
                                       bool restrict_by_length = false);
PosetDocument build_fiber_document(const ParabolicQuotient& q,
                                   const WeylElement& v, BruhatCache& cache);

std::string to_json(const PosetDocument& doc);
PosetDocument parse_json(const std::string& text);  // input_error on bad input
std::string to_dot(const PosetDocument& doc);

// Rendering helpers shared with the CLI listings.
std::string word_str(const std::vector<int>& one_based_word);  // "212", "e"
std::string roots_str(const std::vector<Vec>& roots);          // "{[0,1],[2,1]}"

}  // namespace borbit
