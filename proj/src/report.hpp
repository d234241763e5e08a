#pragma once

#include <optional>
#include <string>

#include "degen/algebra.hpp"
#include "degen/deformation.hpp"
#include "degen/degeneration.hpp"
#include "degen/koszul.hpp"
#include "degen/lie3.hpp"

namespace degen::report {

// Every function renders either the plain-text line grammar or, with json
// set, a sorted-key JSON document. Both end in a newline.

std::string identities(const Algebra& A, const IdentityReport<Rational>& r, bool json);
std::string label(const ClassLabel& l, bool json);
std::string witness(const Algebra& A, const WitnessVerdict& v, const std::string& witness_id, bool json);
std::string battery(const ObstructionReport& r, bool json);
std::string deformation(const DeformationFamily& D, const IdentityReport<TruncSeries>& r,
                        const std::optional<LeadingAnalysis>& lead, const FiberInvariants& fiber, bool json);
std::string rigidity(const RigidityCertificate& c, bool json);
std::string koszul(const KoszulVerdict& v, const TorTable& t, bool json);
std::string diagram(const Diagram& d, bool json);

}  // namespace degen::report
