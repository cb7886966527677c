#include "k3lat/json_io.hpp"

#include <limits>

#include "k3lat/error.hpp"

namespace k3lat {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error("malformed_json", what); }

bool fits_int64(const Integer& n) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return n >= lo && n <= hi;
}

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_decimal(std::string s) {
  if (!is_decimal(s)) malformed("expected an integer, got \"" + s + "\"");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

}  // namespace

Json to_json(const Integer& n) {
  if (fits_int64(n)) return Json(static_cast<std::int64_t>(std::stoll(n.get_str())));
  return Json(n.get_str());
}

Json to_json(const Rational& r) {
  if (r.get_den() == 1) return to_json(Integer(r.get_num()));
  return Json(r.get_str());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  malformed("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) return Rational(integer_from_json(j));
  const std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_decimal(s));
  Integer num = parse_decimal(s.substr(0, slash));
  Integer den = parse_decimal(s.substr(slash + 1));
  if (den == 0) malformed("zero denominator in \"" + s + "\"");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array of integers");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

RatVector rat_vector_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array of rationals");
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("expected a nonempty array of rows");
  std::size_t cols = 0;
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    rows.push_back(int_vector_from_json(r));
    if (rows.size() == 1) cols = rows[0].size();
    if (rows.back().size() != cols || cols == 0) malformed("ragged or empty matrix rows");
  }
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
  return m;
}

Json lattice_to_json(const Lattice& l) {
  Json out = Json::object();
  if (!l.name().empty()) out["name"] = l.name();
  if (!l.labels().empty()) out["labels"] = l.labels();
  out["gram"] = to_json(l.gram());
  return out;
}

Lattice lattice_from_json(const Json& j) {
  if (!j.is_object()) malformed("a lattice must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "name" && key != "labels" && key != "gram") malformed("unknown lattice field \"" + key + "\"");
  if (!j.contains("gram")) malformed("lattice is missing \"gram\"");
  IntMatrix gram = int_matrix_from_json(j.at("gram"));
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) malformed("\"name\" must be a string");
    name = j.at("name").get<std::string>();
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& lj = j.at("labels");
    if (!lj.is_array()) malformed("\"labels\" must be an array of strings");
    for (const auto& x : lj) {
      if (!x.is_string()) malformed("\"labels\" must be an array of strings");
      labels.push_back(x.get<std::string>());
    }
    if (labels.size() != gram.rows()) malformed("label count does not match the rank");
  }
  return Lattice(std::move(gram), std::move(labels), std::move(name));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
}

}  // namespace k3lat
