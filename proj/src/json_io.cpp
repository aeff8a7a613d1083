#include "octosl/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "octosl/error.hpp"

namespace octosl {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "non-finite number");
  return v;
}

template <std::size_t N>
std::array<double, N> numbers(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != N)
    fail(where, "expected an array of " + std::to_string(N) + " numbers");
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i)
    out[i] = number(j[i], where + "[" + std::to_string(i) + "]");
  return out;
}

Json vec_json(const Vector8& v) { return to_json(v.coords); }

}  // namespace

Json to_json(const Octonion& x) { return Json(x.coords()); }

Json to_json(const Spinor& s) {
  return {{"chirality", s.chirality == Chirality::Plus ? "+" : "-"},
          {"coords", to_json(s.coords)}};
}

Json to_json(const Twistor& t) {
  return {{"duality", t.duality == Duality::Primal ? "primal" : "dual"},
          {"phi_minus", to_json(t.phi_minus.coords)},
          {"phi_plus", to_json(t.phi_plus.coords)}};
}

Json to_json(const LorentzVector& f) {
  return {{"a", f.a}, {"b", vec_json(f.b)}, {"c", f.c}};
}

Json to_json(const ConformalGenerator& g) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Translation>)
          return {{"type", "translation"}, {"t", vec_json(x.t)}};
        else if constexpr (std::is_same_v<T, Reflection>)
          return {{"type", "reflection"}, {"n", vec_json(x.normal())}};
        else if constexpr (std::is_same_v<T, Inversion>)
          return {{"type", "inversion"}};
        else
          return {{"type", "dilation"}, {"lambda", x.lambda()}};
      },
      g);
}

Json to_json(const ConformalWord& w) {
  Json out = Json::array();
  for (const auto& g : w.letters()) out.push_back(to_json(g));
  return out;
}

Json to_json(const Rho& rho) {
  return {{"psi1", to_json(rho.psi1)}, {"psi2", to_json(rho.psi2)}};
}

Json to_json(const QMat2& m) {
  return {{"entries", {m.a.q, m.b.q, m.c.q, m.d.q}}};
}

Json to_json(const NormalForm& nf) {
  return {{"rho", to_json(nf.rho)},
          {"word", to_json(nf.word)},
          {"P", {{nf.p(0, 0), nf.p(0, 1)}, {nf.p(1, 0), nf.p(1, 1)}}}};
}

Octonion octonion_from_json(const Json& j, const std::string& where) {
  return Octonion(numbers<8>(j, where));
}

Spinor spinor_from_json(const Json& j, const std::string& where) {
  const Json& c = field(j, "chirality", where);
  Spinor s;
  if (c == "+")
    s.chirality = Chirality::Plus;
  else if (c == "-")
    s.chirality = Chirality::Minus;
  else
    fail(where + ".chirality", "expected \"+\" or \"-\"");
  s.coords = octonion_from_json(field(j, "coords", where), where + ".coords");
  return s;
}

Twistor twistor_from_json(const Json& j, const std::string& where) {
  const Json& d = field(j, "duality", where);
  Duality dual;
  if (d == "primal")
    dual = Duality::Primal;
  else if (d == "dual")
    dual = Duality::Dual;
  else
    fail(where + ".duality", "expected \"primal\" or \"dual\"");
  const Octonion lo =
      octonion_from_json(field(j, "phi_minus", where), where + ".phi_minus");
  const Octonion hi =
      octonion_from_json(field(j, "phi_plus", where), where + ".phi_plus");
  return dual == Duality::Primal ? Twistor::primal(lo, hi)
                                 : Twistor::dual(lo, hi);
}

LorentzVector lorentz_from_json(const Json& j, const std::string& where) {
  return {number(field(j, "a", where), where + ".a"),
          {octonion_from_json(field(j, "b", where), where + ".b")},
          number(field(j, "c", where), where + ".c")};
}

ConformalGenerator generator_from_json(const Json& j,
                                       const std::string& where) {
  const Json& type = field(j, "type", where);
  try {
    if (type == "translation")
      return Translation{
          {octonion_from_json(field(j, "t", where), where + ".t")}};
    if (type == "reflection")
      return Reflection(
          {octonion_from_json(field(j, "n", where), where + ".n")});
    if (type == "inversion") return Inversion{};
    if (type == "dilation")
      return Dilation(number(field(j, "lambda", where), where + ".lambda"));
  } catch (const PreconditionError& e) {
    fail(where, e.what());
  }
  fail(where + ".type", "unknown generator type");
}

ConformalWord word_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of generators");
  ConformalWord w;
  for (std::size_t i = 0; i < j.size(); ++i)
    w.push_back(generator_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return w;
}

Rho rho_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  if (j.contains("matrix")) {
    const Json& m = j["matrix"];
    const std::string w = where + ".matrix";
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() ||
        m[0].size() != 2 || !m[1].is_array() || m[1].size() != 2)
      fail(w, "expected [[oct, oct], [oct, oct]]");
    return Rho::from_matrix(octonion_from_json(m[0][0], w + "[0][0]"),
                            octonion_from_json(m[0][1], w + "[0][1]"),
                            octonion_from_json(m[1][0], w + "[1][0]"),
                            octonion_from_json(m[1][1], w + "[1][1]"));
  }
  const Twistor p1 = twistor_from_json(field(j, "psi1", where), where + ".psi1");
  const Twistor p2 = twistor_from_json(field(j, "psi2", where), where + ".psi2");
  if (p1.duality != Duality::Primal || p2.duality != Duality::Primal)
    fail(where, "rho twistors must be primal");
  return {p1, p2};
}

QMat2 qmat2_from_json(const Json& j, const std::string& where) {
  const Json& e = field(j, "entries", where);
  if (!e.is_array() || e.size() != 4) fail(where + ".entries", "expected 4 entries");
  QMat2 m;
  Quaternion* slots[4] = {&m.a, &m.b, &m.c, &m.d};
  for (std::size_t k = 0; k < 4; ++k)
    slots[k]->q = numbers<4>(e[k], where + ".entries[" + std::to_string(k) + "]");
  return m;
}

Eigen::Matrix2d matrix2_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected a 2x2 array");
  const auto r0 = numbers<2>(j[0], where + "[0]");
  const auto r1 = numbers<2>(j[1], where + "[1]");
  Eigen::Matrix2d p;
  p << r0[0], r0[1], r1[0], r1[1];
  return p;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

}  // namespace octosl
