#pragma once

// JSON forms of covers, reports, presentations and check results.  Key
// order is fixed so output is byte-stable.

#include <json.hpp>

#include "cyclicaut/classifier.hpp"
#include "cyclicaut/curve.hpp"
#include "cyclicaut/fuchsian.hpp"
#include "cyclicaut/grouptheory.hpp"
#include "cyclicaut/verify.hpp"

namespace cyclicaut::serialize {

using Json = nlohmann::ordered_json;

Json to_json(const curve::CyclicCover& cover);
curve::CyclicCover cover_from_json(const Json& j);

Json to_json(const curve::Signature& sig);

Json to_json(const grouptheory::Presentation& pres);
/// Accepts {"generators": [...], "relators": [[1,1],[2,-1]]} or
/// {"generator_count": 2, "relators": ...}.
grouptheory::Presentation presentation_from_json(const Json& j);

Json to_json(const grouptheory::AbelianInvariants& inv);
Json to_json(const grouptheory::Fingerprint& fp);

Json to_json(const classifier::StructureTag& tag);
classifier::StructureTag structure_tag_from_json(const Json& j);

Json to_json(const fuchsian::ChainStep& step);
Json to_json(const fuchsian::Chain& chain);

Json to_json(const classifier::ClassificationReport& report);
classifier::ClassificationReport report_from_json(const Json& j);

Json gs_table_json();

Json to_json(const verify::Enumeration& e);
/// Class records from one enumeration object, or an array of them.
std::vector<verify::ClassRecord> records_from_json(const Json& j);

Json to_json(const verify::CrossCheckReport& report);

}  // namespace cyclicaut::serialize
