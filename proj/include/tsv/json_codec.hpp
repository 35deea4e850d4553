#pragma once

// JSON file formats. All scalars are strings in the scalar codec and all
// elements are strings in the element grammar.
//
//   automorphism: {"alpha": "1", "b": {"-2": "3", "1": "1/2"}, "beta": "0",
//                  "c": {}, "gamma": "-2/5", "i": 0, "u": "2", "w": "1/3"}
//   derivation:   {"c1": "...", "c2": "...", "c3": "...", "inner": "<element>"}
//   window map:   {"radius": N, "images": {"L[1]": "<element>", ..., "C": "..."}}

#include "tsv/autgroup.hpp"
#include "tsv/derivations.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace tsv {

class CodecError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

nlohmann::json to_json(const AutomorphismParams &p);
AutomorphismParams automorphism_from_json(const nlohmann::json &j);

nlohmann::json to_json(const ClassifiedDerivation &d);
ClassifiedDerivation derivation_from_json(const nlohmann::json &j);

nlohmann::json to_json(const WindowMap &m);
WindowMap window_map_from_json(const nlohmann::json &j);

/// Reads and parses a JSON file; CodecError on I/O or syntax failure.
nlohmann::json read_json_file(const std::string &path);

} // namespace tsv
