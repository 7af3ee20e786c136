#ifndef NIJ_JSON_IO_HPP
#define NIJ_JSON_IO_HPP

#include <json.hpp>

#include "nij/algebra.hpp"
#include "nij/cartan.hpp"
#include "nij/courant_fd.hpp"
#include "nij/courant_tm.hpp"
#include "nij/report.hpp"

namespace nij::io {

using json = nlohmann::json;

// Rational entries serialize as strings "p" or "p/q"; polynomial entries use
// the term grammar "3/2*x1^2*x2 - x3".

json to_json(const Rational& r);
json to_json(const RatMatrix& m);
json to_json(const Vec& v);
json to_json(const BilinearOp& op);
json to_json(const OneOneTensor& n);
json to_json(const CheckReport& r);
json to_json(const Pairing& p);
json to_json(const CourantStructure& cs);
json to_json(const LieBialgebra& b);
json to_json(const BlockTensor& n);
json to_json(const Subspace& s);
json to_json(const PolyOneOne& n);
json to_json(const PolyVectorField& x);
json to_json(const PolyForm& w);
json to_json(const PolyBivector& b);
json to_json(const CourantTensor& n);

Rational parse_rational(const json& j, const std::string& where);
RatMatrix parse_matrix(const json& j, const std::string& where);
Vec parse_vec(const json& j, int dim, const std::string& where);
BilinearOp parse_bilinear_op(const json& j);
OneOneTensor parse_one_one(const json& j);
Pairing parse_pairing(const json& j);
CourantStructure parse_courant_structure(const json& j);
LieBialgebra parse_lie_bialgebra(const json& j);
BlockTensor parse_block_tensor(const json& j);
Subspace parse_subspace(const json& j);
PolyOneOne parse_poly_one_one(const json& j);
PolyVectorField parse_poly_vector_field(const json& j);
PolyForm parse_poly_form(const json& j);
PolyBivector parse_poly_bivector(const json& j);
CourantTensor parse_courant_tensor(const json& j);

json load_json_file(const std::string& path);  // throws ParseError with location info

}  // namespace nij::io

#endif
