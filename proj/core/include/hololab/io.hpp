#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "hololab/cs.hpp"
#include "hololab/group.hpp"
#include "hololab/homomorphism.hpp"
#include "hololab/liealg.hpp"
#include "hololab/lifting.hpp"
#include "hololab/permutation.hpp"
#include "hololab/regsub.hpp"

/// JSON forms of the library types. The stable schemas are listed in
/// docs/formats.md; every reader validates and throws hololab::Error with
/// InvalidParameter (or the group-validation codes) on malformed input.
namespace hololab::io {

using json = nlohmann::ordered_json;

json to_json(const GroupTable& g);
GroupTable group_from_json(const json& j);

json to_json(const Subgroup& s);
Subgroup subgroup_from_json(const json& j, const GroupTable& g);

json to_json(const Homomorphism& h);
Homomorphism homomorphism_from_json(const json& j, const GroupTable& domain,
                                    const GroupTable& codomain);

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);
/// {"degree", "order", "generators"} plus "elements" when requested.
json to_json(const PermSubgroup& s, bool with_elements = false);
PermSubgroup perm_subgroup_from_json(const json& j, const Limits& limits = {});

json to_json(const LieVector& v);
LieVector lie_vector_from_json(const json& j, const std::shared_ptr<const LieAlgebra>& alg);

json to_json(const CsElement& x);
CsElement cs_element_from_json(const json& j, const CsGroup& g);
json build_certificate(const CsGroup& g);
json to_json(const CenterCertificate& c, const CsGroup& g);

json to_json(const std::vector<NamedCheck>& checks);
json to_json(const FpfPair& p);
json to_json(const MinimalityVerdict& v);
json to_json(const Thm13Report& r);
json to_json(const LiftReport& r);
json to_json(const AssemblyReport& r);

}  // namespace hololab::io
