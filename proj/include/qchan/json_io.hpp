#pragma once

// Channel files are JSON objects with a "kind" plus exactly the parameter
// group belonging to that kind:
//   {"kind": "pauli",        "c": [c1, c2, c3]}
//   {"kind": "fano",         "lambda": [[..3x3..]], "l": [l1, l2, l3]}
//   {"kind": "kraus",        "kraus_re": [[[..]]], "kraus_im": [[[..]]]}
//   {"kind": "identity"}
//   {"kind": "phase_flip",   "x": 0.3}
//   {"kind": "depolarizing", "x": 0.3}
// Structural problems raise SchemaError; physically invalid channels
// (non-TP Kraus sets, c outside the tetrahedron, non-CP affine forms)
// raise InvariantError.

#include "qchan/channel.hpp"

#include <json.hpp>

#include <string>

namespace qchan {

Channel channel_from_json(const nlohmann::json& doc);
Channel load_channel(const std::string& path);
nlohmann::ordered_json channel_to_json(const Channel& channel);

}  // namespace qchan
