#pragma once

// JSON forms of every value type. Integers are JSON numbers (all values fit
// in 64 bits); rationals are strings "p/q". Clopen sets and points omit their
// base, which comes from the enclosing object or the command line. Readers
// throw ParseError for malformed or invalid data and let ResourceError
// through.

#include "ample/gen_perm.hpp"
#include "ample/nowhere_dense.hpp"
#include "ample/property_e.hpp"
#include "ample/stabilizers.hpp"
#include "ample/towers.hpp"

#include <json.hpp>

namespace ample {

using Json = nlohmann::ordered_json;

Json to_json(const BaseSequence& base);
/// Accepts {"pre": [...], "period": [...]} or a single radix.
BaseSequence base_from_json(const Json& j);

Json to_json(const ClopenSet& u);
ClopenSet clopen_from_json(const Json& j, const BaseSequence& base);

Json to_json(const Point& x);
/// Accepts {"pre": [...], "period": [...]} or an integer.
Point point_from_json(const Json& j, const BaseSequence& base);

Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

Json to_json(const TfgElement& g);
/// The "base" field is optional and defaults to the given base.
TfgElement element_from_json(const Json& j, const BaseSequence& base);

Json to_json(const WreathForm& w);

Json to_json(const GenPermSpec& spec);
GenPermSpec genperm_from_json(const Json& j, const BaseSequence& base);

Json to_json(const TwoCycleSpec& spec);
TwoCycleSpec two_cycle_from_json(const Json& j, const BaseSequence& base);

Json to_json(const KRPartition& kr);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j, const BaseSequence& base);

Json to_json(const TorsionFactorization& t);

Json to_json(const StabilizerClass& c);

Json to_json(const NDConstruction& c);
NDConstruction construction_from_json(const Json& j, const BaseSequence& base);

std::string to_string(const Rational& q);

}  // namespace ample
