#pragma once

// JSON wire formats. Every writer has a matching reader that accepts its output.
//
//   Weight           [c_1, ..., c_n]
//   DrinfeldPoly     {"type": "A2", "rank": 2,
//                     "support": [{"node": i, "magnitude": "p/q", "phase": "k/m", "mult": c}, ...]}
//   XiFunction       {"points": [{"magnitude": "p/q", "phase": "k/m", "gamma": [r_1, ...]}],
//                     "gamma_factors": [d_1, ...]}
//   SimpleLabel      {"pi": <DrinfeldPoly>, "s": s}
//   GradedWeight     {"weight": [...], "grade": n}
//   CharacterTable   {"highest": [...], "weights": [{"coords": [...], "mult": m}, ...]}
//   RootSystem       {"format": "loopblocks-root-system", "version": 1, "type": "A2", "cartan": ...,
//                     "positive_roots": ..., "theta": ..., "theta_short": ..., "involution": ...,
//                     "gamma": {"factors": ..., "projection": ..., "elements": ..., "minimal_reps": ...}}

#include "json.hpp"

#include "loopblocks/blocks.hpp"
#include "loopblocks/characters.hpp"
#include "loopblocks/cyclotomic.hpp"
#include "loopblocks/drinfeld.hpp"
#include "loopblocks/graded_loop.hpp"
#include "loopblocks/root_system.hpp"

namespace loopblocks {

using Json = nlohmann::ordered_json;

inline constexpr int kRootSystemFormatVersion = 1;

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j, int rank);

Json to_json(const RootVector& r);
RootVector root_vector_from_json(const Json& j);

Json to_json(const GammaGroup& g);
GammaGroup gamma_from_json(const Json& j);

Json to_json(const RootSystem& rs);
/// Reads the Gamma table and checks every other field against a fresh build;
/// throws DomainError on any mismatch.
RootSystem root_system_from_json(const Json& j);

Json point_fields(const ExactPoint& p);
ExactPoint point_from_json(const Json& j);

Json to_json(const DrinfeldPoly& pi);
DrinfeldPoly drinfeld_from_json(const Json& j);

Json to_json(const CyclotomicNumber& c);
CyclotomicNumber cyclotomic_from_json(const Json& j);

Json to_json(const PolyCoeffs& c);

Json to_json(const XiFunction& chi);
XiFunction xi_from_json(const Json& j);

Json to_json(const XiOrbitKey& key);

Json to_json(const SimpleLabel& label);
SimpleLabel label_from_json(const Json& j);

Json to_json(const GradedWeight& gw);
GradedWeight graded_weight_from_json(const Json& j, int rank);

Json to_json(const CharacterTable& table);
CharacterTable character_table_from_json(const Json& j, int rank);

/// Integer when it fits in int64, decimal string otherwise.
Json to_json(const BigInt& n);

} // namespace loopblocks
