#include "nij/json_io.hpp"

#include <fstream>

namespace nij::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& j, const char* name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end()) bad(where, std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const json& j, const char* name, const std::string& where) {
  const json& f = field(j, name, where);
  if (!f.is_number_integer()) bad(where, std::string("field '") + name + "' must be an integer");
  return f.get<int>();
}

// "[1]" or "[1,2]" (1-based) -> 0-based indices
std::vector<int> parse_index_key(const std::string& key, const std::string& where) {
  if (key.size() < 2 || key.front() != '[' || key.back() != ']')
    bad(where, "bad index key '" + key + "'");
  std::vector<int> idx;
  std::string body = key.substr(1, key.size() - 2);
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      idx.push_back(std::stoi(tok) - 1);
    } catch (...) {
      bad(where, "bad index key '" + key + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return idx;
}

std::string index_key(const std::vector<int>& idx) {
  std::string key = "[";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(idx[i] + 1);
  }
  return key + "]";
}

json poly_matrix_json(const PolyOneOne& n) {
  json rows = json::array();
  for (int i = 0; i < n.n; ++i) {
    json row = json::array();
    for (int j = 0; j < n.n; ++j) row.push_back(n.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

PolyOneOne parse_poly_matrix(const json& j, int n, const std::string& where) {
  if (!j.is_array() || (int)j.size() != n) bad(where, "matrix must have n rows");
  PolyOneOne m(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || (int)j[i].size() != n) bad(where, "matrix row has wrong length");
    for (int k = 0; k < n; ++k) {
      if (!j[i][k].is_string()) bad(where, "matrix entries must be polynomial strings");
      m.at(i, k) = MultiPoly::parse(j[i][k].get<std::string>(), n);
    }
  }
  return m;
}

json component_map_json(const std::map<FormIndex, MultiPoly>& comp) {
  json obj = json::object();
  for (const auto& [idx, c] : comp) obj[index_key(idx)] = c.str();
  return obj;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& c : v.x) a.push_back(c.str());
  return a;
}

json to_json(const BilinearOp& op) {
  json c = json::array();
  for (int i = 0; i < op.dim(); ++i) {
    json ci = json::array();
    for (int j = 0; j < op.dim(); ++j) {
      json cij = json::array();
      for (int k = 0; k < op.dim(); ++k) cij.push_back(op.c(i, j, k).str());
      ci.push_back(cij);
    }
    c.push_back(ci);
  }
  return json{{"dim", op.dim()}, {"c", c}};
}

json to_json(const OneOneTensor& n) {
  return json{{"dim", n.dim()}, {"m", to_json(n.matrix())}};
}

json to_json(const CheckReport& r) {
  json w;
  if (r.witness) {
    w = json{{"identity", r.witness->identity},
             {"inputs", r.witness->inputs},
             {"lhs", r.witness->lhs},
             {"rhs", r.witness->rhs}};
  } else {
    w = nullptr;
  }
  return json{{"verdict", r.pass ? "pass" : "fail"}, {"witness", w},
              {"certificate", r.certificate}};
}

json to_json(const Pairing& p) { return json{{"dim", p.dim}, {"g", to_json(p.g)}}; }

json to_json(const CourantStructure& cs) {
  return json{{"op", to_json(cs.op)}, {"pairing", to_json(cs.pairing)}};
}

json to_json(const LieBialgebra& b) {
  return json{{"dim_e", b.dim_e},
              {"bracket_e", to_json(b.bracket_e)},
              {"bracket_estar", to_json(b.bracket_estar)}};
}

json to_json(const BlockTensor& n) {
  return json{{"n_e", n.n_e},
              {"N_E", to_json(n.n_e_block)},
              {"Lambda", to_json(n.lambda)},
              {"Omega", to_json(n.omega)},
              {"N_Estar", to_json(n.n_estar_block)}};
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis) basis.push_back(to_json(v));
  return json{{"ambient_dim", s.ambient_dim}, {"basis", basis}};
}

json to_json(const PolyOneOne& n) { return json{{"n", n.n}, {"m", poly_matrix_json(n)}}; }

json to_json(const PolyVectorField& x) {
  json comps = json::array();
  for (const auto& c : x.comp) comps.push_back(c.str());
  return json{{"n", x.n}, {"type", "vector_field"}, {"components", comps}};
}

json to_json(const PolyForm& w) {
  return json{{"n", w.vars()},
              {"type", "form"},
              {"degree", w.degree()},
              {"components", component_map_json(w.components())}};
}

json to_json(const PolyBivector& b) {
  json obj = json::object();
  for (const auto& [ij, c] : b.comp) obj[index_key({ij.first, ij.second})] = c.str();
  return json{{"n", b.n}, {"type", "bivector"}, {"components", obj}};
}

json to_json(const CourantTensor& n) {
  json lam = json::object();
  for (const auto& [ij, c] : n.lambda.comp) lam[index_key({ij.first, ij.second})] = c.str();
  return json{{"n", n.n},
              {"N0", poly_matrix_json(n.n0)},
              {"Lambda", lam},
              {"Omega", component_map_json(n.omega.components())},
              {"N1", poly_matrix_json(n.n1t)}};
}

Rational parse_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad(where, "rational entries must be strings like \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

RatMatrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) bad(where, "matrix must be a nonempty array of rows");
  int rows = (int)j.size();
  if (!j[0].is_array()) bad(where, "matrix rows must be arrays");
  int cols = (int)j[0].size();
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || (int)j[i].size() != cols) bad(where, "ragged matrix");
    for (int k = 0; k < cols; ++k) m.at(i, k) = parse_rational(j[i][k], where);
  }
  return m;
}

Vec parse_vec(const json& j, int dim, const std::string& where) {
  if (!j.is_array() || (int)j.size() != dim) bad(where, "vector length mismatch");
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v.x[i] = parse_rational(j[i], where);
  return v;
}

BilinearOp parse_bilinear_op(const json& j) {
  const std::string where = "BilinearOp";
  int dim = int_field(j, "dim", where);
  const json& c = field(j, "c", where);
  if (!c.is_array() || (int)c.size() != dim) bad(where, "'c' must have dim slices");
  BilinearOp op(dim);
  for (int i = 0; i < dim; ++i) {
    if (!c[i].is_array() || (int)c[i].size() != dim) bad(where, "'c' slice shape mismatch");
    for (int jj = 0; jj < dim; ++jj) {
      if (!c[i][jj].is_array() || (int)c[i][jj].size() != dim)
        bad(where, "'c' row shape mismatch");
      for (int k = 0; k < dim; ++k) op.c(i, jj, k) = parse_rational(c[i][jj][k], where);
    }
  }
  return op;
}

OneOneTensor parse_one_one(const json& j) {
  const std::string where = "OneOneTensor";
  int dim = int_field(j, "dim", where);
  RatMatrix m = parse_matrix(field(j, "m", where), where);
  if (m.rows() != dim || m.cols() != dim) bad(where, "'m' shape mismatch");
  return OneOneTensor(std::move(m));
}

Pairing parse_pairing(const json& j) {
  const std::string where = "Pairing";
  int dim = int_field(j, "dim", where);
  RatMatrix g = parse_matrix(field(j, "g", where), where);
  if (g.rows() != dim || g.cols() != dim) bad(where, "'g' shape mismatch");
  try {
    return Pairing(dim, std::move(g));
  } catch (const PreconditionError& e) {
    bad(where, e.what());
  }
}

CourantStructure parse_courant_structure(const json& j) {
  const std::string where = "CourantStructure";
  CourantStructure cs{parse_bilinear_op(field(j, "op", where)),
                      parse_pairing(field(j, "pairing", where))};
  if (cs.pairing.dim != cs.op.dim()) bad(where, "op and pairing dimensions differ");
  return cs;
}

LieBialgebra parse_lie_bialgebra(const json& j) {
  const std::string where = "LieBialgebra";
  LieBialgebra b;
  b.dim_e = int_field(j, "dim_e", where);
  b.bracket_e = parse_bilinear_op(field(j, "bracket_e", where));
  b.bracket_estar = parse_bilinear_op(field(j, "bracket_estar", where));
  if (b.bracket_e.dim() != b.dim_e || b.bracket_estar.dim() != b.dim_e)
    bad(where, "bracket dimension mismatch");
  return b;
}

BlockTensor parse_block_tensor(const json& j) {
  const std::string where = "BlockTensor";
  BlockTensor n;
  n.n_e = int_field(j, "n_e", where);
  n.n_e_block = parse_matrix(field(j, "N_E", where), where + ".N_E");
  n.lambda = parse_matrix(field(j, "Lambda", where), where + ".Lambda");
  n.omega = parse_matrix(field(j, "Omega", where), where + ".Omega");
  n.n_estar_block = parse_matrix(field(j, "N_Estar", where), where + ".N_Estar");
  for (const RatMatrix* m : {&n.n_e_block, &n.lambda, &n.omega, &n.n_estar_block})
    if (m->rows() != n.n_e || m->cols() != n.n_e) bad(where, "block shape mismatch");
  return n;
}

Subspace parse_subspace(const json& j) {
  const std::string where = "Subspace";
  Subspace s;
  s.ambient_dim = int_field(j, "ambient_dim", where);
  const json& basis = field(j, "basis", where);
  if (!basis.is_array()) bad(where, "'basis' must be an array of vectors");
  for (const auto& row : basis) s.basis.push_back(parse_vec(row, s.ambient_dim, where));
  try {
    s.validate();
  } catch (const std::runtime_error& e) {
    bad(where, e.what());
  }
  return s;
}

PolyOneOne parse_poly_one_one(const json& j) {
  const std::string where = "PolyOneOne";
  int n = int_field(j, "n", where);
  return parse_poly_matrix(field(j, "m", where), n, where);
}

PolyVectorField parse_poly_vector_field(const json& j) {
  const std::string where = "PolyVectorField";
  int n = int_field(j, "n", where);
  const json& comps = field(j, "components", where);
  if (!comps.is_array() || (int)comps.size() != n) bad(where, "'components' must have n entries");
  PolyVectorField x(n);
  for (int i = 0; i < n; ++i) {
    if (!comps[i].is_string()) bad(where, "components must be polynomial strings");
    x.comp[i] = MultiPoly::parse(comps[i].get<std::string>(), n);
  }
  return x;
}

PolyForm parse_poly_form(const json& j) {
  const std::string where = "PolyForm";
  int n = int_field(j, "n", where);
  int degree = int_field(j, "degree", where);
  PolyForm w(n, degree);
  const json& comps = field(j, "components", where);
  if (!comps.is_object()) bad(where, "'components' must be an object keyed by index tuples");
  for (auto it = comps.begin(); it != comps.end(); ++it) {
    std::vector<int> idx = parse_index_key(it.key(), where);
    if ((int)idx.size() != degree) bad(where, "index arity mismatch in key " + it.key());
    for (size_t a = 0; a + 1 < idx.size(); ++a)
      if (idx[a] >= idx[a + 1]) bad(where, "index key " + it.key() + " must be increasing");
    for (int i : idx)
      if (i < 0 || i >= n) bad(where, "index out of range in key " + it.key());
    if (!it.value().is_string()) bad(where, "components must be polynomial strings");
    w.add_component(idx, MultiPoly::parse(it.value().get<std::string>(), n));
  }
  return w;
}

PolyBivector parse_poly_bivector(const json& j) {
  const std::string where = "PolyBivector";
  int n = int_field(j, "n", where);
  PolyBivector b(n);
  const json& comps = field(j, "components", where);
  if (!comps.is_object()) bad(where, "'components' must be an object keyed by index pairs");
  for (auto it = comps.begin(); it != comps.end(); ++it) {
    std::vector<int> idx = parse_index_key(it.key(), where);
    if (idx.size() != 2) bad(where, "bivector keys must be pairs");
    if (!it.value().is_string()) bad(where, "components must be polynomial strings");
    b.add_component(idx[0], idx[1], MultiPoly::parse(it.value().get<std::string>(), n));
  }
  return b;
}

CourantTensor parse_courant_tensor(const json& j) {
  const std::string where = "CourantTensor";
  int n = int_field(j, "n", where);
  CourantTensor t(n);
  t.n0 = parse_poly_matrix(field(j, "N0", where), n, where + ".N0");
  t.n1t = parse_poly_matrix(field(j, "N1", where), n, where + ".N1");
  const json& lam = field(j, "Lambda", where);
  if (!lam.is_object()) bad(where, "'Lambda' must be an object keyed by index pairs");
  for (auto it = lam.begin(); it != lam.end(); ++it) {
    std::vector<int> idx = parse_index_key(it.key(), where + ".Lambda");
    if (idx.size() != 2) bad(where, "'Lambda' keys must be pairs");
    t.lambda.add_component(idx[0], idx[1],
                           MultiPoly::parse(it.value().get<std::string>(), n));
  }
  const json& om = field(j, "Omega", where);
  if (!om.is_object()) bad(where, "'Omega' must be an object keyed by index pairs");
  for (auto it = om.begin(); it != om.end(); ++it) {
    std::vector<int> idx = parse_index_key(it.key(), where + ".Omega");
    if (idx.size() != 2 || idx[0] >= idx[1] || idx[0] < 0 || idx[1] >= n)
      bad(where, "'Omega' keys must be increasing pairs");
    t.omega.add_component(idx, MultiPoly::parse(it.value().get<std::string>(), n));
  }
  return t;
}

}  // namespace nij::io
