#pragma once

// Group definition files and JSON report fragments.
//
// A group file is a JSON object:
//   name              string
//   N                 half the dimension of V
//   cyclotomic_order  m, the order of z in the literals below (optional when
//                     no literal mentions z)
//   omega             2N x 2N matrix (optional; default ((0, I), (-I, 0)))
//   generators        list of 2N x 2N matrices
//   eta               optional map "eta<k>" -> rational literal or "symbolic"
// Matrix entries are cyclotomic literals such as "1/2 + 1/2*z^3", or integers.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sra/traces.hpp"

namespace sra {

using Json = nlohmann::ordered_json;

struct GroupFile {
  std::shared_ptr<const Group> group;
  /// One entry per eta variable; empty means symbolic.
  std::vector<std::optional<Rational>> eta;

  AlgebraParams params() const;
};

/// Throws GroupError(BadInput) for malformed content, plus the closure errors.
GroupFile read_group(const Json& j, const GroupOptions& base = {});
GroupFile load_group_file(const std::string& path, const GroupOptions& base = {});
/// Writes the generators and form of a group in the file format, with every
/// eta symbolic unless values are given.
Json write_group(const Group& group, const std::vector<std::optional<Rational>>& eta = {});

Json cyclotomic_json(const Cyclotomic& c, int m);
Json eta_json(const EtaPolynomial& p, int m);
Json trace_value_json(const TraceValue& v, int m);
Json provenance(const Group& group, std::optional<int> kappa = std::nullopt);

}  // namespace sra
