#ifndef LIECOMB_JSON_IO_HPP
#define LIECOMB_JSON_IO_HPP

// JSON views of the public types.  Weights serialize as plain integer
// arrays ([21,6]), GL partitions likewise ([27,6,0]); the composite
// schemas are documented in the README.  Output uses insertion-ordered
// objects so identical inputs serialize byte-identically.

#include <json.hpp>

#include "liecomb/conjmap.hpp"
#include "liecomb/honeycomb.hpp"
#include "liecomb/multiplicity.hpp"
#include "liecomb/oracle.hpp"
#include "liecomb/pictograph.hpp"
#include "liecomb/polygon.hpp"
#include "liecomb/weights.hpp"

namespace liecomb::json {

using ojson = nlohmann::ordered_json;

ojson to_json(const Weight& w);
ojson to_json(const GlPartition& p);
ojson to_json(const DecompositionTable& t);
ojson to_json(const MultiplicityCensus& c);
ojson to_json(const Theorem1Report& r);
ojson to_json(const Theorem2Report& r);
ojson to_json(const honeycomb::AlphaInterval& iv);
ojson to_json(const honeycomb::Honeycomb& h);
ojson to_json(const honeycomb::Hive& h);
ojson to_json(const polygon::TensorPolygon& p);
ojson to_json(const polygon::LayerDiagram& d);
ojson to_json(const conjmap::MappedPoint& p);
ojson to_json(const conjmap::BijectionReport& r);
ojson to_json(const pictograph::Pictograph& p);
ojson to_json(const oracle::Su4PolytopeReport& r);

// Parses "21,6" or "[21,6]" into a Weight.
Weight parse_weight(const std::string& text);

}  // namespace liecomb::json

#endif
