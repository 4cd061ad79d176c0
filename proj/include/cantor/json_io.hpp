#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "cantor/assembly.hpp"
#include "cantor/density.hpp"
#include "cantor/faithful.hpp"
#include "cantor/graphing.hpp"

namespace cantor {

using Json = nlohmann::json;

/// {"num": n, "exp": e} for n / 2^e.
Json to_json(const DyadicRational& x);
/// "a/b".
Json to_json(const Rational& x);
Json to_json(const DyadicSet& s);
Json to_json(const PairList& pairs);
Json to_json(const PrefixExchange& t);
Json to_json(const PartialDyadicIso& t);
Json to_json(const Graphing& g);
Json to_json(const GeneratorPlan& plan);
Json to_json(const LedgerEntry& e);
Json to_json(const AssembleResult& a);
Json to_json(const HFCheck& h);
Json to_json(const TranslateFamily& f);
/// Level summaries; full witness sets when with_witnesses is set.
Json to_json(const TowerResult& t, bool with_witnesses);
Json to_json(const SchreierGraph& g);
Json to_json(const StabilizerSignature& s);
Json to_json(const PipelineResult& r);

/// Graphing as an array of members, each an array of [src, dst] pairs.
Graphing graphing_from_json(const Json& j);

/// FNV-1a 64-bit digest of the compact dump, as 16 hex digits.
std::string digest(const Json& j);
std::string digest(const std::string& text);

}  // namespace cantor
