#ifndef FJ_SERIALIZE_HPP
#define FJ_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "fj/fjseries.hpp"
#include "fj/lattice.hpp"
#include "fj/siegel.hpp"

namespace fj {

using Json = nlohmann::ordered_json;

Json to_json(const Cyc& v);
Json to_json(const QSeries& s);
Json to_json(const QZSeries& s);
Json to_json(const JacobiForm& f);
Json to_json(const Representation& r);
Json to_json(const DiscriminantForm& d);
Json to_json(const FormalFJSeries& f);
Json to_json(const SiegelForm& f);

Cyc cyc_from_json(const Json& j);
QSeries qseries_from_json(const Json& j);
QZSeries qzseries_from_json(const Json& j);
JacobiForm jacobi_from_json(const Json& j);
Representation rep_from_json(const Json& j);
DiscriminantForm disc_from_json(const Json& j);
FormalFJSeries fjseries_from_json(const Json& j);
SiegelForm siegel_from_json(const Json& j);

// canonical text: 2-space indent, ordered keys, trailing newline
std::string dumps(const Json& j);
Json loads(const std::string& text);  // throws ParseError

}  // namespace fj

#endif
