#ifndef TILTN_IO_HPP
#define TILTN_IO_HPP

#include <sstream>
#include <string>

#include <json.hpp>

#include "counting.hpp"
#include "sigma.hpp"
#include "tilt.hpp"

namespace tiltn {

using Json = nlohmann::ordered_json;

inline Json perm_json(const Perm &p) {
  Json a = Json::array();
  for (int v : p.word()) a.push_back(v);
  return a;
}

inline Json braid_json(const PositiveBraid &x) {
  Json j;
  j["n"] = x.rank();
  Json f = Json::array();
  for (const Perm &p : x.factors()) f.push_back(perm_json(p));
  j["factors"] = f;
  return j;
}

inline Json matrix_json(const Mat &m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json module_json(const RightModule &M) {
  int n = M.rank();
  Json j;
  j["dims"] = M.dim_vector();
  Json arrows;
  for (int i = 1; i < n; ++i) arrows["a" + std::to_string(i)] = matrix_json(M.alpha(i));
  for (int i = 2; i <= n; ++i) arrows["b" + std::to_string(i)] = matrix_json(M.beta(i));
  j["arrows"] = std::move(arrows);
  return j;
}

inline std::string perm_label(const Perm &p) {
  std::string s;
  for (std::size_t k = 0; k < p.word().size(); ++k) {
    if (k) s += ',';
    s += std::to_string(p.word()[k]);
  }
  return s;
}

/// "v|w" pair label of an interval element.
inline std::string node_label(const PositiveBraid &x) {
  auto [v, w] = pair_form(x);
  return perm_label(v) + "|" + perm_label(w);
}

inline Json poset_json(const TiltingPoset &P) {
  Json j;
  Json nodes = Json::array();
  for (std::size_t x = 0; x < P.nodes.size(); ++x) {
    auto [v, w] = pair_form(P.nodes[x]);
    Json node;
    node["id"] = x;
    node["v"] = perm_json(v);
    node["w"] = perm_json(w);
    if (!P.objects.empty()) node["dims"] = P.objects[x]->dim_vectors();
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  Json arrows = Json::array();
  for (const auto &[from, to, slot] : P.arrows) {
    Json a;
    a["from"] = from;
    a["to"] = to;
    a["slot"] = slot;
    arrows.push_back(std::move(a));
  }
  j["arrows"] = std::move(arrows);
  return j;
}

inline std::string poset_dot(const TiltingPoset &P) {
  std::ostringstream out;
  out << "digraph tilt {\n";
  for (const auto &x : P.nodes) out << "  \"" << node_label(x) << "\";\n";
  for (const auto &[from, to, slot] : P.arrows)
    out << "  \"" << node_label(P.nodes[from]) << "\" -> \"" << node_label(P.nodes[to])
        << "\" [label=\"" << slot << "\"];\n";
  out << "}\n";
  return out.str();
}

inline Json complex_json(const SigmaComplex &S) {
  Json j;
  Json vertices = Json::array();
  std::vector<int> sizes(S.num_classes, 0);
  for (int c : S.vertex_class) ++sizes[c];
  for (int c = 0; c < S.num_classes; ++c) {
    Json v;
    v["id"] = c;
    v["slot"] = S.class_slot[c];
    v["size"] = sizes[c];
    vertices.push_back(std::move(v));
  }
  j["vertices"] = std::move(vertices);
  j["facets"] = S.facets;
  Json bd = Json::array();
  for (const auto &[ridge, m] : S.ridge_multiplicity())
    if (m == 1) bd.push_back(ridge);
  j["boundary_facets"] = std::move(bd);
  return j;
}

inline Json count_report_json(const CountReport &r) {
  Json j;
  j["n"] = r.n;
  j["c"] = r.c.get_str();
  j["t_recursive"] = r.t_rec.get_str();
  if (r.t_pairs) j["t_by_pairs"] = r.t_pairs->get_str();
  if (r.t_interval) j["t_interval"] = r.t_interval->get_str();
  if (r.p) j["p"] = *r.p;
  j["consistent"] = r.consistent;
  return j;
}

/// One row "n,c_n,t_n" per rank up to n.
inline std::string counts_csv(int n) {
  std::ostringstream out;
  out << "n,c_n,t_n\n";
  for (int m = 1; m <= n; ++m)
    out << m << "," << factorial(m).get_str() << "," << t_recursive(m).get_str() << "\n";
  return out.str();
}

/// One row "n,p_1,...,p_n,total" per rank up to n (n <= 5).
inline std::string p_table_csv(int n) {
  std::ostringstream out;
  out << "n,p_values,total\n";
  for (int m = 1; m <= n; ++m) {
    auto p = p_counts(m);
    long total = 0;
    out << m << ",";
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << " ";
      out << p[k];
      total += p[k];
    }
    out << "," << total << "\n";
  }
  return out.str();
}

} // namespace tiltn

#endif
