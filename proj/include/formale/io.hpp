#pragma once

// JSON encodings. Arbitrary-size integers are written as decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "formale/asd.hpp"
#include "formale/curve.hpp"
#include "formale/local.hpp"
#include "formale/lseries.hpp"
#include "formale/series.hpp"

namespace formale {

using Json = nlohmann::ordered_json;

Json to_json(const std::array<Integer, 5>& curve);
std::array<Integer, 5> curve_from_json(const Json& j);

/// {statement, curve, p, n, s, modulus, residual, pass, variant?, note?}
Json to_json(const CongruenceReport& report);
CongruenceReport report_from_json(const Json& j);

/// {p, type, A_p, t_p, u_p}
Json to_json(const LocalData& local);
LocalData local_data_from_json(const Json& j);

/// Decimal strings, lowest degree first.
Json to_json(const IntSeries& series);
Json to_json(const RatSeries& series);

/// Plain JSON integers c_1..c_N.
Json to_json(const DirichletCoefficients& c);
DirichletCoefficients dirichlet_from_json(const Json& j);

/// Trace cache file: {"a1,a2,a3,a4,a6|p": {A_p, t_p, u_p, type}, ...}.
void load_cache(const std::string& path, TraceCache& cache);
void save_cache(const std::string& path, const TraceCache& cache);

} // namespace formale
