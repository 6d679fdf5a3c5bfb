#include "rcech/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace rcech {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing field '" + key + "'");
  return *it;
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) fail(where + ": unknown field '" + it.key() + "'");
  }
}

std::size_t index_in(const Json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where + ": expected a nonnegative index");
  auto v = j.get<unsigned long long>();
  if (v >= bound) fail(where + ": index " + std::to_string(v) + " out of range (size " +
                       std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

std::vector<std::size_t> index_list(const Json& j, std::size_t count, std::size_t bound,
                                    const std::string& where) {
  if (!j.is_array()) fail(where + ": expected a list");
  if (j.size() != count)
    fail(where + ": expected " + std::to_string(count) + " entries, got " +
         std::to_string(j.size()));
  std::vector<std::size_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(index_in(j[i], bound, where + "[" + std::to_string(i) + "]"));
  return out;
}

FiniteGroup group_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where + ": expected an object");
  check_keys(j, {"orders", "involution"}, where);
  const Json& jo = field(j, "orders", where);
  if (!jo.is_array() || jo.empty()) fail(where + ".orders: expected a nonempty list");
  std::vector<std::size_t> orders;
  for (const Json& o : jo) {
    if (!o.is_number_integer() || o.get<long long>() < 1)
      fail(where + ".orders: entries must be positive integers");
    orders.push_back(o.get<std::size_t>());
  }
  std::string inv = j.value("involution", std::string("trivial"));
  if (inv != "trivial" && inv != "inversion")
    fail(where + ".involution: expected \"trivial\" or \"inversion\"");
  return FiniteGroup::product_of_cyclics(orders, inv);
}

RealGroupoid explicit_groupoid_from_json(const Json& j) {
  check_keys(j, {"objects", "arrows", "compose", "inverse", "involution"}, "groupoid");
  RealGroupoid g;

  const Json& jobj = field(j, "objects", "groupoid");
  if (jobj.is_number_integer() && jobj.get<long long>() >= 0) {
    g.num_objects = jobj.get<std::size_t>();
  } else if (jobj.is_array()) {
    g.num_objects = jobj.size();
    for (const Json& name : jobj) {
      if (!name.is_string()) fail("groupoid.objects: names must be strings");
      g.object_names.push_back(name.get<std::string>());
    }
  } else {
    fail("groupoid.objects: expected a count or a list of names");
  }

  const Json& jarr = field(j, "arrows", "groupoid");
  if (!jarr.is_array()) fail("groupoid.arrows: expected a list");
  for (std::size_t i = 0; i < jarr.size(); ++i) {
    const Json& a = jarr[i];
    std::string where = "groupoid.arrows[" + std::to_string(i) + "]";
    if (!a.is_object()) fail(where + ": expected an object");
    check_keys(a, {"id", "src", "tgt"}, where);
    if (a.contains("id") && index_in(a["id"], jarr.size(), where + ".id") != i)
      fail(where + ".id: ids must equal list positions");
    g.arrows.push_back({index_in(field(a, "src", where), g.num_objects, where + ".src"),
                        index_in(field(a, "tgt", where), g.num_objects, where + ".tgt")});
  }
  std::size_t n = g.arrows.size();

  g.compose_table.assign(n, std::vector<long long>(n, -1));
  const Json& jcomp = field(j, "compose", "groupoid");
  if (!jcomp.is_array()) fail("groupoid.compose: expected a list of triples");
  for (std::size_t i = 0; i < jcomp.size(); ++i) {
    std::string where = "groupoid.compose[" + std::to_string(i) + "]";
    std::vector<std::size_t> t = index_list(jcomp[i], 3, n, where);
    long long& slot = g.compose_table[t[0]][t[1]];
    if (slot != -1 && slot != static_cast<long long>(t[2]))
      fail(where + ": contradicts an earlier entry for the same pair");
    slot = static_cast<long long>(t[2]);
  }

  g.inverse = index_list(field(j, "inverse", "groupoid"), n, n, "groupoid.inverse");

  const Json& jinv = field(j, "involution", "groupoid");
  if (!jinv.is_object()) fail("groupoid.involution: expected an object");
  check_keys(jinv, {"objects", "arrows"}, "groupoid.involution");
  g.obj_involution = index_list(field(jinv, "objects", "groupoid.involution"), g.num_objects,
                                g.num_objects, "groupoid.involution.objects");
  g.arr_involution =
      index_list(field(jinv, "arrows", "groupoid.involution"), n, n, "groupoid.involution.arrows");
  return g;
}

RealGroupoid recipe_groupoid_from_json(const Json& j) {
  std::string kind = field(j, "kind", "recipe").get<std::string>();
  if (kind == "group") {
    check_keys(j, {"kind", "orders", "involution"}, "recipe");
    Json params = j;
    params.erase("kind");
    return group_groupoid(group_from_json(params, "recipe"));
  }
  if (kind == "pair" || kind == "real_space") {
    check_keys(j, {"kind", "points", "involution"}, "recipe");
    const Json& jp = field(j, "points", "recipe");
    if (!jp.is_number_integer() || jp.get<long long>() < 1)
      fail("recipe.points: expected a positive count");
    std::size_t npoints = jp.get<std::size_t>();
    std::vector<std::size_t> inv(npoints);
    for (std::size_t i = 0; i < npoints; ++i) inv[i] = i;
    if (j.contains("involution"))
      inv = index_list(j["involution"], npoints, npoints, "recipe.involution");
    return kind == "pair" ? pair_groupoid(npoints, inv) : real_space_groupoid(npoints, inv);
  }
  if (kind == "swap_double") {
    check_keys(j, {"kind", "of"}, "recipe");
    return swap_double(groupoid_from_json(field(j, "of", "recipe")));
  }
  if (kind == "orientifold") {
    check_keys(j, {"kind", "points", "point_involution", "group", "action", "allow_non_free"},
               "recipe");
    const Json& jp = field(j, "points", "recipe");
    if (!jp.is_number_integer() || jp.get<long long>() < 1)
      fail("recipe.points: expected a positive count");
    std::size_t npoints = jp.get<std::size_t>();
    std::vector<std::size_t> pinv =
        index_list(field(j, "point_involution", "recipe"), npoints, npoints,
                   "recipe.point_involution");
    FiniteGroup grp = group_from_json(field(j, "group", "recipe"), "recipe.group");
    const Json& jact = field(j, "action", "recipe");
    if (!jact.is_array() || jact.size() != npoints)
      fail("recipe.action: expected one row per point");
    std::vector<std::vector<std::size_t>> action;
    for (std::size_t x = 0; x < npoints; ++x)
      action.push_back(index_list(jact[x], grp.size, npoints,
                                  "recipe.action[" + std::to_string(x) + "]"));
    bool allow = j.value("allow_non_free", false);
    return orientifold_groupoid(npoints, pinv, grp, action, allow);
  }
  fail("recipe.kind: unknown kind '" + kind + "'");
}

Json matrix_rows(const CMat& m, bool imag) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back(imag ? m(i, k).imag() : m(i, k).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

Int int_from(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer");
  return Int(j.get<long long>());
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("json: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    fail(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail("failed writing '" + path + "'");
}

RealGroupoid groupoid_from_json(const Json& j) {
  if (!j.is_object()) fail("groupoid: expected an object");
  RealGroupoid g = j.contains("kind") ? recipe_groupoid_from_json(j) : explicit_groupoid_from_json(j);
  g.validate();
  return g;
}

RealGroupoid load_groupoid(const std::string& path) {
  return groupoid_from_json(load_json_file(path));
}

Json groupoid_to_json(const RealGroupoid& g) {
  Json j = Json::object();
  if (g.object_names.empty()) {
    j["objects"] = g.num_objects;
  } else {
    j["objects"] = g.object_names;
  }
  Json arrows = Json::array();
  for (std::size_t i = 0; i < g.arrows.size(); ++i)
    arrows.push_back({{"id", i}, {"src", g.arrows[i].src}, {"tgt", g.arrows[i].tgt}});
  j["arrows"] = std::move(arrows);
  Json compose = Json::array();
  for (std::size_t a = 0; a < g.arrows.size(); ++a)
    for (std::size_t b = 0; b < g.arrows.size(); ++b)
      if (g.compose_table[a][b] != -1) compose.push_back({a, b, g.compose_table[a][b]});
  j["compose"] = std::move(compose);
  j["inverse"] = g.inverse;
  j["involution"] = {{"objects", g.obj_involution}, {"arrows", g.arr_involution}};
  return j;
}

RealCoefficient coefficient_from_token(const std::string& token) {
  if (token == "S1") return coeff_circle();
  if (token == "Z") return coeff_Z(+1);
  if (token == "Z(0,1)") return coeff_Z(-1);
  std::smatch m;
  if (std::regex_match(token, m, std::regex(R"(Zm\(([0-9]+),([+-]?1)\))"))) {
    Int order(m[1].str());
    if (order < 2) fail("coefficient: Zm order must be at least 2");
    return coeff_Zm(order, m[2].str() == "-1" ? -1 : +1);
  }
  if (std::regex_match(token, m, std::regex(R"(Z([0-9]+))"))) {
    Int order(m[1].str());
    if (order < 2) fail("coefficient: Z<m> needs m at least 2");
    return coeff_Zm(order, +1);
  }
  fail("coefficient: unknown literal '" + token +
       "' (use Z, Z(0,1), Z<m>, Zm(m,+1), Zm(m,-1), or S1)");
}

CMat cmatrix_from_json(const Json& j) {
  if (!j.is_object()) fail("matrix: expected {\"re\": rows, \"im\": rows}");
  check_keys(j, {"re", "im"}, "matrix");
  const Json& re = field(j, "re", "matrix");
  if (!re.is_array() || re.empty() || !re[0].is_array() || re[0].empty())
    fail("matrix.re: expected a nonempty list of rows");
  std::size_t rows = re.size(), cols = re[0].size();
  CMat out(rows, cols);
  auto read_part = [&](const Json& part, const char* name, bool imag) {
    if (part.size() != rows) fail(std::string("matrix.") + name + ": row count mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
      if (!part[i].is_array() || part[i].size() != cols)
        fail(std::string("matrix.") + name + ": ragged rows");
      for (std::size_t k = 0; k < cols; ++k) {
        if (!part[i][k].is_number()) fail(std::string("matrix.") + name + ": entries must be numbers");
        double v = part[i][k].get<double>();
        if (imag)
          out(i, k).imag(v);
        else
          out(i, k) = std::complex<double>(v, 0.0);
      }
    }
  };
  read_part(re, "re", false);
  if (j.contains("im")) read_part(j["im"], "im", true);
  return out;
}

Json cmatrix_to_json(const CMat& m) {
  return {{"re", matrix_rows(m, false)}, {"im", matrix_rows(m, true)}};
}

TypeModel type_model_from_json(const Json& j) {
  if (!j.is_object()) fail("model: expected an object");
  check_keys(j, {"gamma", "U", "odd", "lambda"}, "model");
  TypeModel m;
  m.gamma = cmatrix_from_json(field(j, "gamma", "model"));
  m.U = cmatrix_from_json(field(j, "U", "model"));
  if (j.contains("odd")) {
    if (!j["odd"].is_boolean()) fail("model.odd: expected a boolean");
    m.odd = j["odd"].get<bool>();
  }
  if (j.contains("lambda")) {
    if (!j["lambda"].is_number_integer()) fail("model.lambda: expected +1 or -1");
    m.lambda = j["lambda"].get<int>();
  }
  return m;
}

Json type_model_to_json(const TypeModel& m) {
  return {{"gamma", cmatrix_to_json(m.gamma)},
          {"U", cmatrix_to_json(m.U)},
          {"odd", m.odd},
          {"lambda", m.lambda}};
}

ValueTable value_table_from_json(const Nerve& nv, const RealCoefficient& a, std::size_t level,
                                 const Json& j) {
  if (!j.is_object()) fail("cochain: expected an object");
  check_keys(j, {"level", "values"}, "cochain");
  if (field(j, "level", "cochain").get<long long>() != static_cast<long long>(level))
    fail("cochain.level: expected level " + std::to_string(level));
  if (nv.max_level < level) fail("cochain: nerve too shallow for this level");
  ValueTable t;
  t.level = level;
  t.values.assign(nv.level_size(level), a.zero());
  std::vector<char> seen(nv.level_size(level), 0);
  const Json& jv = field(j, "values", "cochain");
  if (!jv.is_array()) fail("cochain.values: expected a list of [simplex, coordinates]");
  for (std::size_t e = 0; e < jv.size(); ++e) {
    std::string where = "cochain.values[" + std::to_string(e) + "]";
    const Json& entry = jv[e];
    if (!entry.is_array() || entry.size() != 2) fail(where + ": expected [simplex, coordinates]");
    std::size_t s = index_in(entry[0], nv.level_size(level), where);
    if (seen[s]) fail(where + ": simplex " + std::to_string(s) + " listed twice");
    seen[s] = 1;
    const Json& coords = entry[1];
    if (!coords.is_array() || coords.size() != a.ngens())
      fail(where + ": expected " + std::to_string(a.ngens()) + " coordinates");
    IntVec v(a.ngens());
    for (std::size_t c = 0; c < a.ngens(); ++c)
      v[c] = int_from(coords[c], where + " coordinate " + std::to_string(c));
    t.values[s] = a.reduce(std::move(v));
  }
  std::string why;
  if (!is_real_table(nv, a, t, &why)) fail("cochain: not Real: " + why);
  return t;
}

Json value_table_to_json(const ValueTable& t) {
  Json values = Json::array();
  for (std::size_t s = 0; s < t.values.size(); ++s) {
    bool zero = true;
    Json coords = Json::array();
    for (const Int& c : t.values[s]) {
      if (c != 0) zero = false;
      coords.push_back(static_cast<long long>(c));
    }
    if (!zero) values.push_back({s, std::move(coords)});
  }
  return {{"level", t.level}, {"values", std::move(values)}};
}

RationalCochain rational_cochain_from_json(const Nerve& nv, std::size_t level, const Json& j) {
  if (!j.is_object()) fail("cochain: expected an object");
  check_keys(j, {"level", "den", "values"}, "cochain");
  if (field(j, "level", "cochain").get<long long>() != static_cast<long long>(level))
    fail("cochain.level: expected level " + std::to_string(level));
  if (nv.max_level < level) fail("cochain: nerve too shallow for this level");
  RationalCochain out;
  out.level = level;
  out.den = int_from(field(j, "den", "cochain"), "cochain.den");
  if (out.den < 1) fail("cochain.den: expected a positive denominator");
  out.numerators.assign(nv.level_size(level), 0);
  std::vector<char> seen(nv.level_size(level), 0);
  const Json& jv = field(j, "values", "cochain");
  if (!jv.is_array()) fail("cochain.values: expected a list of [simplex, numerator]");
  for (std::size_t e = 0; e < jv.size(); ++e) {
    std::string where = "cochain.values[" + std::to_string(e) + "]";
    const Json& entry = jv[e];
    if (!entry.is_array() || entry.size() != 2) fail(where + ": expected [simplex, numerator]");
    std::size_t s = index_in(entry[0], nv.level_size(level), where);
    if (seen[s]) fail(where + ": simplex " + std::to_string(s) + " listed twice");
    seen[s] = 1;
    Int num = int_from(entry[1], where + " numerator") % out.den;
    if (num < 0) num += out.den;
    out.numerators[s] = num;
  }
  for (std::size_t s = 0; s < out.numerators.size(); ++s) {
    std::size_t c = nv.involution(level, s);
    if ((out.numerators[s] + out.numerators[c]) % out.den != 0)
      fail("cochain: not Real: conjugate simplices " + std::to_string(s) + ", " +
           std::to_string(c) + " must carry opposite values mod 1");
  }
  if (nv.max_level > level) {
    for (std::size_t t = 0; t < nv.level_size(level + 1); ++t) {
      Int sum = 0;
      int sign = 1;
      for (std::size_t k = 0; k <= level + 1; ++k, sign = -sign)
        sum += sign * out.numerators[nv.face(level + 1, k, t)];
      if (sum % out.den != 0)
        fail("cochain: not a cocycle: face sum at simplex " + std::to_string(t) +
             " of the next level is nonzero mod 1");
    }
  }
  return out;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fingerprint_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a(buf.str())));
  return std::string("fnv1a:") + hex;
}

const char* const kScopeNote =
    "Exact algebra over finite groupoids with involution: Real cohomology, graded "
    "extension classes, Brauer type assembly, and mod 8 matrix type checks. Analytic "
    "invariants are out of scope; the type table and the folding comparisons carry "
    "their algebraic content.";

void Report::note_input(const std::string& path) {
  inputs.emplace_back(path, fingerprint_file(path));
}

Json Report::to_json() const {
  Json j = Json::object();
  j["scope"] = kScopeNote;
  j["command"] = command;
  Json ins = Json::array();
  for (const auto& [path, print] : inputs) ins.push_back({{"path", path}, {"fingerprint", print}});
  j["inputs"] = std::move(ins);
  j["results"] = results;
  j["oracle"] = oracle;
  j["warnings"] = warnings;
  j["output"] = lines;
  return j;
}

std::string Report::render() const { return to_json().dump(2) + "\n"; }

}  // namespace rcech
