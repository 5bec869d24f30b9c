#pragma once

// Paired JSON / text encodings of the domain values. Both encodings of a
// value carry the same content; the CLI emits one or the other.
//
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are always strings "p" or "p/q".

#include <string>

#include <json.hpp>

#include "kleinvcy/homology.hpp"
#include "kleinvcy/isotropy.hpp"
#include "kleinvcy/models.hpp"

namespace kleinvcy {

using Json = nlohmann::ordered_json;

Json encode(const Integer& x);
Json encode(const Rational& q);
Json encode(const GroupElement& g);
Json encode(const PlanePoint& p);
Json encode(const CyclicSubgroup& s);
Json encode(const Line& l);
Json encode(const CommClass& c);
Json encode(const SubgroupFamily& f);
Json encode(const FixedSet& f);
Json encode(const AbelianGroup& a);
/// {"0": {"rank": 1}, "1": {}, "2": {"rank": 1, "torsion": [2]}} up to the
/// highest nonzero degree; zero ranks and empty torsion lists are omitted.
Json encode(const GradedGroups& h);
Json encode(const ModelDescriptor& d);

std::string text(const GroupElement& g);
std::string text(const PlanePoint& p);
std::string text(const CyclicSubgroup& s);
std::string text(const Line& l);
std::string text(const CommClass& c);
std::string text(const SubgroupFamily& f);
std::string text(const FixedSet& f);

/// "inf" or p/q, as accepted on the command line.
Line parse_line(std::string_view slope, std::string_view intercept);

}  // namespace kleinvcy
