#pragma once

#include <string>

#include "rgw/coloured_graph.hpp"
#include "rgw/matroids.hpp"
#include "rgw/search.hpp"
#include "rgw/verify.hpp"

namespace rgw {

// Certificate JSON: {"kind","length","edges":[[u,v,colour],...]} for coloured
// hosts, [[tail,head],...] for digraphs. Infinite values are the string "inf".
std::string to_json(const CycleCertificate& c, const ColouredMultigraph& host);
std::string to_json(const CycleCertificate& c, const Digraph& host);
std::string to_json(const CircuitCertificate& c, const BinaryColouredMatroid& host);
std::string to_json(const CocycleCertificate& c, const ColouredMultigraph& host);

std::string outcome_json(const SearchOutcome& o, const ColouredMultigraph& host);
std::string outcome_json(const SearchOutcome& o, const Digraph& host);
std::string outcome_json(const CircuitOutcome& o, const BinaryColouredMatroid& host);
std::string outcome_json(const CocycleOutcome& o, const ColouredMultigraph& host);

// Suite report JSON: {"family","instances","failures":[...],"elapsed_ms"}.
std::string to_json(const SuiteReport& r);
std::string to_json(const FTableEntry& e);

}  // namespace rgw
