#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "dechain/phi_global.hpp"
#include "dechain/sset.hpp"

namespace dechain {

using Json = nlohmann::ordered_json;

/// {"dims": top, "simplices": {"<dim>": [{"id", "faces": [{"surj", "base"}]}]}}
Json sset_to_json(const SSet& X);
/// Throws std::invalid_argument on malformed input or broken face tables.
SSet sset_from_json(const Json& j);

/// delta:n | boundary:n | sphere:k | product:(a,b) | quotient:(a,sub) | skeleton:(a,k) | file:path
/// In quotient:(a,sub) the subcomplex is any expression whose simplex ids all occur in a.
SSet build_space(std::string_view expr);

/// {"degree", "terms": [{"simplex", "dim", "theta": [{"coef", "t", "w"}]}]}; "t" lists exponents of
/// t_0..t_n (any representative), "w" the wedge indices.
Json phi_chain_to_json(const SSet& X, const PhiChain& c);
PhiChain phi_chain_from_json(const SSet& X, const Json& j);
/// Same layout with "form" and "ds" in place of "theta" and "w".
Json cochain_to_json(const SSet& X, const CochainForm& w);
CochainForm cochain_from_json(const SSet& X, const Json& j);

Json homology_report_to_json(const HomologyReport& r);

}  // namespace dechain
