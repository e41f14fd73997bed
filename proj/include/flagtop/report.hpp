#pragma once

#include "flagtop/isotropy.hpp"
#include "flagtop/lattice.hpp"
#include "flagtop/pi2.hpp"
#include "flagtop/root_system.hpp"
#include "flagtop/weyl.hpp"

#include "json.hpp"

#include <string>

namespace flagtop {

using Json = nlohmann::ordered_json;

/// Version tag carried by every per-instance report.
inline constexpr int kSchemaVersion = 1;

Json to_json(const Integer& z);
/// Integers as JSON numbers, other rationals as "p/q" strings.
Json to_json(const Rational& q);
Json to_json(const Root& r);
Json to_json(const DualRoot& d);
/// 1-based simple-root indices.
Json to_json(const ThetaSubset& t);
/// 1-based letters.
Json to_json(const ReflectionWord& w);
Json to_json(const QuotientGroup& q);
Json to_json(const RootSystem& s);
Json to_json(const IsotropyDecomposition& d);
Json to_json(const RigidityReport& r);
Json to_json(const Pi1Report& r);
Json to_json(const SphereClass& c);

/// One entry per root: coordinates, sign, length class, dual coordinates.
Json roots_json(const RootSystem& s);

/// Per-instance report: pi2 rank and basis, rigidity per class, pi1 data.
Json pi2_report_json(const RootSystem& s, const ThetaSubset& theta, GroupPreset preset,
                     bool include_spheres);

}  // namespace flagtop
