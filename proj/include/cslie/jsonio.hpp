// JSON encodings of the exact data types. Rationals are strings "p/q" or "p".
#pragma once

#include "cslie/cotangent.hpp"
#include "cslie/lattice.hpp"
#include "cslie/oxidation.hpp"

#include <json.hpp>

namespace cslie {

using Json = nlohmann::ordered_json;

/// Thrown for malformed JSON input.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json to_json(const QVec& v);
QVec vec_from_json(const Json& j);
Json to_json(const QMat& m);
QMat mat_from_json(const Json& j);
/// Integers fitting in 64 bits become JSON numbers, larger ones strings.
Json int_to_json(const mpz_class& z);

Json to_json(const LieAlgebra& L);
/// Antisymmetric closure applied; Jacobi is checked unless check_jacobi is false.
LieAlgebra algebra_from_json(const Json& j, bool check_jacobi = true);

Json to_json(const CSStructure& S);
CSStructure structure_from_json(const Json& j);

Json to_json(const CotangentData& D);
CotangentData cotangent_from_json(const Json& j);

Json to_json(const OxidationData& D);
OxidationData oxidation_from_json(const Json& j);

Json to_json(const VerifyReport& r);
Json to_json(const ConditionReport& r);
Json to_json(const Fingerprint& f);
Json to_json(const LatticeReport& r);
Json to_json(const OxidationValidation& v);
/// {"exists", "case", "unique"}; "case" is the violated condition when exists is false.
Json classification_json(const QMat& f);

} // namespace cslie
