#pragma once

#include <json.hpp>

#include "zpi/filtration.hpp"
#include "zpi/graph_space.hpp"
#include "zpi/hermitian.hpp"
#include "zpi/milnor.hpp"
#include "zpi/realization.hpp"

// JSON forms of every externally visible value. Parsing throws DomainError
// on malformed input; serialization is canonical (terms in group order, maps
// sorted) so equal values produce identical bytes.
namespace zpi::io {

using json = nlohmann::ordered_json;

json group_to_json(const GroupPtr& g);
GroupPtr group_from_json(const json& j);

json element_to_json(const Group& g, const GroupElement& x);
GroupElement element_from_json(const Group& g, const json& j);

json int_to_json(const Int& v);  // int64 when it fits, decimal string otherwise
Int int_from_json(const json& j);

// Bare term array [{"g":..., "c":...}]; the group comes from context.
json ring_terms_to_json(const GroupRingElement& x);
GroupRingElement ring_terms_from_json(const GroupPtr& g, const json& j);
// Standalone object {"group":..., "terms":[...]}.
json ring_to_json(const GroupRingElement& x);
GroupRingElement ring_from_json(const json& j);

json quotient_to_json(const QuotientMap& q);
QuotientMap quotient_from_json(const json& j);

json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const json& j);
json hermitian_to_json(const HermitianMatrix& m);
HermitianMatrix hermitian_from_json(const json& j);

json certificate_to_json(const StableCongruenceCertificate& c);
StableCongruenceCertificate certificate_from_json(const json& j);

json profile_to_json(const MultisignatureProfile& p);

json moves_to_json(const Group& g, const std::vector<RealizationMove>& moves);
std::vector<RealizationMove> moves_from_json(const Group& g, const json& j);

json normlike_to_json(const Group& g, const std::vector<NormLikeTerm>& terms);
std::vector<NormLikeTerm> normlike_from_json(const Group& g, const json& j);

json graph_to_json(const DecoratedGraph& g);
DecoratedGraph graph_from_json(const json& j);

json decoration_to_json(const Pi1Decoration& d);
Pi1Decoration decoration_from_json(const json& j);

json report_to_json(const GradedGroupReport& r);

json mu_to_json(const MuCollection& c);
MuCollection mu_from_json(const json& j);  // reconstructs the full closure

json formal_sum_to_json(const FormalSum& s);
FormalSum formal_sum_from_json(const json& j);

json parse_text(const std::string& text);  // wraps nlohmann errors in DomainError

}  // namespace zpi::io
