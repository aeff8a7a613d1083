#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "octosl/invariants.hpp"
#include "octosl/lorentz.hpp"
#include "octosl/quaternion_check.hpp"
#include "octosl/twistor.hpp"

namespace octosl {

/// Malformed or ill-typed input; the message carries the location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json to_json(const Octonion& x);
Json to_json(const Spinor& s);
Json to_json(const Twistor& t);
Json to_json(const LorentzVector& f);
Json to_json(const ConformalGenerator& g);
Json to_json(const ConformalWord& w);
Json to_json(const Rho& rho);
Json to_json(const QMat2& m);
Json to_json(const NormalForm& nf);

// `where` names the value in error messages, e.g. "psi1.phi_minus".
Octonion octonion_from_json(const Json& j, const std::string& where = "$");
Spinor spinor_from_json(const Json& j, const std::string& where = "$");
Twistor twistor_from_json(const Json& j, const std::string& where = "$");
LorentzVector lorentz_from_json(const Json& j, const std::string& where = "$");
ConformalGenerator generator_from_json(const Json& j,
                                       const std::string& where = "$");
ConformalWord word_from_json(const Json& j, const std::string& where = "$");
/// Accepts {"psi1", "psi2"} or {"matrix": [[oct, oct], [oct, oct]]}.
Rho rho_from_json(const Json& j, const std::string& where = "$");
QMat2 qmat2_from_json(const Json& j, const std::string& where = "$");
Eigen::Matrix2d matrix2_from_json(const Json& j,
                                  const std::string& where = "$");

/// Parses text; syntax errors report line and column.
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);

}  // namespace octosl
