#pragma once

#include "toric/gorenstein.hpp"

#include <json.hpp>

namespace toric {

using Json = nlohmann::ordered_json;

// Integers that fit 53 bits go out as JSON numbers, larger ones as strings,
// so cross-language consumers never lose precision.
Json json_int(const Int& v);
Json json_rat(const Rat& v);
Json json_vec(const IntVec& v);
Json json_vec(const RatVec& v);

Cone parse_cone_json(const Json& j);
LatticePolygon parse_polygon_json(const Json& j);
Cone parse_cone_file(const std::string& path);
LatticePolygon parse_polygon_file(const std::string& path);

Json serialize_cone(const Cone& c);
Json serialize_polygon(const LatticePolygon& q);

IntVec parse_degree(const std::string& csv, size_t rank);

// Run envelope: input echo with a content hash, tool version, the payload,
// and timing (timing is excluded from the determinism contract).
Json run_report(const std::string& command, const std::string& input_path, const Json& payload,
                long long elapsed_ms);

// Subcommand payload builders shared by the CLI and the verification suite.
Json hilbert_report(const Cone& c, const HilbertBasis& hb);
Json t1_report(const Cone& c, const HilbertBasis& hb, const IntVec& R);
Json t2_report(const Cone& c, const HilbertBasis& hb, const IntVec& R);
Json scan_report(const Cone& c, const HilbertBasis& hb, const Int& bound);
Json cup_report(const Cone& c, const HilbertBasis& hb, const IntVec& R, const IntVec& S,
                size_t phi_index, size_t psi_index);
Json gorenstein_report(const LatticePolygon& q, const Int& kmax, bool verify);

}  // namespace toric
