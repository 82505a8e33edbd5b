#pragma once

/* Canonical JSON for everything the CLI prints.  Key order is fixed by
 * insertion, coefficients are decimal strings (GMP values overflow
 * doubles), and terms follow the descending-lex basis order, so equal
 * objects always serialize to identical bytes.
 */

#include <string>
#include <vector>

#include "json.hpp"

#include "kschur/kspace.hpp"
#include "kschur/partition.hpp"
#include "kschur/schur.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/tpoly.hpp"
#include "kschur/verify.hpp"

namespace kschur {

using Json = nlohmann::ordered_json;

Json json_of(const Partition& p);
/* coefficient list from t^0 upward; ["0"] for the zero polynomial */
Json json_of(const TPoly& c);
/* {"basis", "k"?, "terms"}; k only for the leveled bases */
Json json_of(const SymFunc& f);
Json json_of(const Straightened& st);
Json json_of(const KSplit& sp);
Json json_of(const Reduction& red);
/* {"id", "params", "pass", "witness"?}; millis only when timings is set,
 * keeping default output byte-stable across runs */
Json json_of(const VerifyReport& rep, bool timings = false);

/* unicode rendering for --format pretty */
std::string pretty_poly(const TPoly& c);
std::string pretty_symfunc(const SymFunc& f);

}  // namespace kschur
