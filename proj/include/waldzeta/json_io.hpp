#pragma once

// JSON (de)serialization for the exact types and the configuration schemas.
//
// Conventions:
//   coefficient  {"a":"p/q","b":"...","c":"...","d":"..."}  (exact rational
//                strings; absent keys read as 0; a bare string or integer is
//                shorthand for a pure rational value)
//   rational fn  {"num":[coeff...],"den":[coeff...]}
//   torus char   {"conductor":c, "w":coeff} | {"conductor":c,"wL":coeff}
//                | {"conductor":c,"w1":coeff,"w2":coeff}
//   local setup  {"q":int,"legendre":-1|0|1,
//                 "rep":{"type":"unramified","alpha1":..,"alpha2":..}
//                      |{"type":"steinberg","chi":..},
//                 "omega":{...},"omega1":{...},"omega2":{...}}
// Outputs use ordered keys so identical inputs give byte-identical JSON.

#include <nlohmann/json.hpp>

#include "waldzeta/global.hpp"

namespace waldzeta {

using Json = nlohmann::ordered_json;

Json coeff_to_json(const CoeffElem& v);
CoeffElem coeff_from_json(const Json& j, std::int64_t q);

Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j, std::int64_t q);

Json torus_char_to_json(const TorusChar& om);
TorusChar torus_char_from_json(const Json& j, const LocalField& f);

Json local_setup_to_json(const LocalSetup& ls);
LocalSetup local_setup_from_json(const Json& j);

GlobalConfig global_config_from_json(const Json& j);

Json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const Json& j);

}  // namespace waldzeta
