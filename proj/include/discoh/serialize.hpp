#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "discoh/cohomology.hpp"
#include "discoh/group_ring.hpp"
#include "discoh/matrix.hpp"

namespace discoh {

using Json = nlohmann::ordered_json;

struct MatrixRecord {
  int n = 0, ell = 0, q = 0;
  Matrix<Rational> matrix;
};

/// {"n","ell","q","rows","cols","entries":[[r,c,"num/den"],...]}; sparse,
/// 0-based, row-major order.
Json matrix_to_json(int n, int ell, int q, const Matrix<Rational>& m);
MatrixRecord matrix_from_json(const Json& j);

/// Group-ring matrix: each entry is [[coefficient, [[i,j,exp],...]], ...].
Json grmatrix_to_json(int n, int ell, int q, const GRMatrix& m);
GRMatrix grmatrix_from_json(const Json& j);

Json basis_to_json(const std::vector<BasisIndex>& basis);

/// {"dims","betti","euler","provenance"} plus "consensus" when present.
Json betti_to_json(const BettiReport& r);
BettiReport betti_from_json(const Json& j);

Json linearization_to_json(const LinearizationReport& r);
Json probe_to_json(const TangentConeProbe& p);
Json scan_to_json(const ArrangementParams& params, const ScanResult& s);
Json sandwich_to_json(const SandwichReport& s);

/// Header lambda_<i>_<j>,...,k,m,member,b_k then one row per record.
std::string scan_to_csv(const ArrangementParams& params, const ScanResult& s);

}  // namespace discoh
