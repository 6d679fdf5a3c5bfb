#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rcech/budget.hpp"
#include "rcech/cohomology.hpp"
#include "rcech/extensions.hpp"
#include "rcech/io.hpp"
#include "rcech/oracle.hpp"
#include "rcech/types_algebra.hpp"

namespace {

using namespace rcech;

constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kBudgetExceeded = 2;
constexpr int kOracleMismatch = 3;

struct Options {
  std::string groupoid_path;
  std::string coeff = "Z2";
  std::string in_path;
  std::string report_path;
  std::size_t degree = 0;
  std::size_t max_level = 3;
  bool oracle = false;
  bool table = false;
};

std::string join_ints(const IntVec& v) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  s << "]";
  return s.str();
}

Json element_json(const ExtElement& e) {
  Json j = Json::object();
  j["grading"] = Json::array();
  for (const Int& c : e.grading) j["grading"].push_back(static_cast<long long>(c));
  j["twist"] = Json::array();
  for (const Int& c : e.twist_num) j["twist"].push_back(static_cast<long long>(c));
  return j;
}

std::string element_text(const ExtElement& e) {
  return "grading " + join_ints(e.grading) + ", twist " + join_ints(e.twist_num);
}

// Emit the collected text and, on request, the structured file.
void finish(const Report& r, const Options& opt) {
  for (const std::string& line : r.lines) std::cout << line << "\n";
  if (!opt.report_path.empty()) write_text_file(opt.report_path, r.render());
}

int cmd_validate(Report& r, const Options& opt) {
  RealGroupoid g = load_groupoid(opt.groupoid_path);
  std::size_t fo = 0, fa = 0;
  for (std::size_t x = 0; x < g.num_objects; ++x) fo += g.obj_involution[x] == x;
  for (std::size_t a = 0; a < g.arrows.size(); ++a) fa += g.arr_involution[a] == a;
  r.lines.push_back("valid");
  r.lines.push_back("objects: " + std::to_string(g.num_objects) +
                    ", arrows: " + std::to_string(g.arrows.size()));
  r.lines.push_back(involution_is_free(g)
                        ? std::string("involution: free")
                        : "involution: fixes " + std::to_string(fo) + " objects, " +
                              std::to_string(fa) + " arrows");
  r.results = {{"objects", g.num_objects},
               {"arrows", g.arrows.size()},
               {"free_involution", involution_is_free(g)},
               {"fixed_objects", fo},
               {"fixed_arrows", fa}};
  finish(r, opt);
  return kOk;
}

int cmd_nerve(Report& r, const Options& opt) {
  RealGroupoid g = load_groupoid(opt.groupoid_path);
  Nerve nv = build_nerve(g, opt.max_level);
  Json levels = Json::array();
  for (std::size_t n = 0; n <= nv.max_level; ++n) {
    LevelOrbits o = level_orbits(nv, n);
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < nv.level_size(n); ++i) fixed += nv.involution(n, i) == i;
    r.lines.push_back("level " + std::to_string(n) + ": " + std::to_string(nv.level_size(n)) +
                      " simplices, " + std::to_string(o.num_orbits()) + " orbits, " +
                      std::to_string(fixed) + " fixed");
    levels.push_back({{"level", n},
                      {"simplices", nv.level_size(n)},
                      {"orbits", o.num_orbits()},
                      {"fixed", fixed}});
  }
  r.results["levels"] = std::move(levels);
  finish(r, opt);
  return kOk;
}

int cmd_cohomology(Report& r, const Options& opt) {
  RealGroupoid g = load_groupoid(opt.groupoid_path);
  RealCoefficient a = coefficient_from_token(opt.coeff);
  std::string group;
  Nerve nv = build_nerve(g, opt.degree + 1);
  if (a.circle) {
    if (opt.oracle)
      throw std::invalid_argument("the oracle enumerates finite coefficients only, not S1");
    group = circle_cohomology(nv, opt.degree).to_string();
  } else {
    group = real_cohomology(nv, opt.degree, a).invariants.to_string();
  }
  r.lines.push_back("HR^" + std::to_string(opt.degree) + " = " + group);
  r.results = {{"degree", opt.degree}, {"coefficients", opt.coeff}, {"group", group}};
  if (opt.oracle) {
    if (!a.is_finite())
      throw std::invalid_argument("the oracle enumerates finite coefficients only");
    std::string check = oracle_cohomology(nv, opt.degree, a).to_string();
    if (check == group) {
      r.oracle = "ok";
      r.lines.push_back("oracle OK");
    } else {
      r.oracle = "mismatch";
      r.lines.push_back("oracle MISMATCH: matrix route " + group + ", brute force " + check);
      r.results["oracle_group"] = check;
      finish(r, opt);
      return kOracleMismatch;
    }
    r.results["oracle_group"] = check;
  }
  finish(r, opt);
  return kOk;
}

int cmd_brauer(Report& r, const Options& opt) {
  RealGroupoid g = load_groupoid(opt.groupoid_path);
  BrauerGroup bg = brauer_group(g);
  r.lines.push_back("type part: " + bg.type_part.to_string());
  r.lines.push_back("extension part: " + bg.ext_finite.to_string() +
                    (bg.ext_splits ? " (splits over the grading)" : " (does not split)"));
  if (bg.circle_rank > 0)
    r.lines.push_back("circle factors: (S1)^" + std::to_string(bg.circle_rank));
  r.lines.push_back("total: " + bg.to_string());
  r.lines.push_back("total order: " + (bg.circle_rank > 0 ? std::string("infinite")
                                                          : bg.total_finite().order().str()));
  if (bg.free_involution_note) {
    std::string note =
        "free involution: this groupoid is a doubled theory; its order eight type factor "
        "reads modulo two in the plain graded picture";
    r.warnings.push_back(note);
    r.lines.push_back("note: " + note);
  }
  r.results = {{"type_part", bg.type_part.to_string()},
               {"extension_part", bg.ext_finite.to_string()},
               {"extension_splits", bg.ext_splits},
               {"circle_rank", bg.circle_rank},
               {"total", bg.to_string()}};
  if (bg.circle_rank == 0) r.results["total_order"] = bg.total_finite().order().str();

  if (opt.table) {
    Int order = bg.circle_rank > 0 ? Int(-1) : bg.total_finite().order();
    if (bg.circle_rank > 0 || order > 64) {
      std::string note = "Cayley table omitted: the group is not small";
      r.warnings.push_back(note);
      r.lines.push_back(note);
    } else {
      // Elements are (type part coordinates) x (extension element); the
      // type part sums coordinatewise, the extension part multiplies with
      // its twist.
      Nerve nv = build_nerve(g, 3);
      ExtGroup ext(nv);
      std::vector<ExtElement> exts = ext.elements();
      const std::vector<Int>& torders = bg.type_part.torsion;
      std::vector<IntVec> types;
      types.push_back(IntVec(torders.size(), 0));
      for (std::size_t f = 0; f < torders.size(); ++f) {
        std::size_t block = types.size();
        for (Int v = 1; v < torders[f]; ++v)
          for (std::size_t i = 0; i < block; ++i) {
            IntVec t = types[i];
            t[f] = v;
            types.push_back(std::move(t));
          }
      }
      struct Entry {
        IntVec type;
        ExtElement e;
      };
      std::vector<Entry> all;
      for (const IntVec& t : types)
        for (const ExtElement& e : exts) all.push_back({t, e});
      auto index_of = [&](const IntVec& t, const ExtElement& e) {
        for (std::size_t i = 0; i < all.size(); ++i)
          if (all[i].type == t && all[i].e == e) return i;
        throw std::logic_error("product left the element list");
      };
      Json legend = Json::array();
      for (std::size_t i = 0; i < all.size(); ++i) {
        r.lines.push_back("g" + std::to_string(i) + " = type " + join_ints(all[i].type) + ", " +
                          element_text(all[i].e));
        Json row = element_json(all[i].e);
        row["type"] = Json::array();
        for (const Int& c : all[i].type) row["type"].push_back(static_cast<long long>(c));
        legend.push_back(std::move(row));
      }
      Json table = Json::array();
      for (std::size_t i = 0; i < all.size(); ++i) {
        std::string line = "g" + std::to_string(i) + ":";
        Json trow = Json::array();
        for (std::size_t j = 0; j < all.size(); ++j) {
          IntVec t(torders.size());
          for (std::size_t f = 0; f < torders.size(); ++f)
            t[f] = (all[i].type[f] + all[j].type[f]) % torders[f];
          std::size_t k = index_of(t, ext.multiply(all[i].e, all[j].e));
          line += " g" + std::to_string(k);
          trow.push_back(k);
        }
        r.lines.push_back(line);
        table.push_back(std::move(trow));
      }
      r.results["elements"] = std::move(legend);
      r.results["table"] = std::move(table);
    }
  }
  finish(r, opt);
  return kOk;
}

ExtElement read_element(const ExtGroup& ext, const Nerve& nv, const Json& j,
                        const std::string& name) {
  if (!j.is_object()) throw std::invalid_argument(name + ": expected an object");
  auto delta_it = j.find("delta");
  auto omega_it = j.find("omega");
  if (delta_it == j.end() || omega_it == j.end())
    throw std::invalid_argument(name + ": expected fields 'delta' and 'omega'");
  ValueTable delta = value_table_from_json(nv, coeff_Zm(2, +1), 1, *delta_it);
  RationalCochain omega = rational_cochain_from_json(nv, 2, *omega_it);
  return ext.element_from_cochains(nv, delta, omega.numerators, omega.den);
}

int cmd_ext(Report& r, const Options& opt, bool multiply) {
  RealGroupoid g = load_groupoid(opt.groupoid_path);
  Json in = load_json_file(opt.in_path);
  Nerve nv = build_nerve(g, 3);
  ExtGroup ext(nv);
  r.lines.push_back("grading classes: " + ext.grading_invariants().to_string());
  r.lines.push_back("twist classes: " + ext.twist().to_string());
  r.results["grading_classes"] = ext.grading_invariants().to_string();
  r.results["twist_classes"] = ext.twist().to_string();

  ExtElement a = read_element(ext, nv, in.is_object() && in.contains("a") ? in["a"] : Json(),
                              "input.a");
  r.lines.push_back("a: " + element_text(a));
  r.results["a"] = element_json(a);
  if (multiply) {
    ExtElement b = read_element(ext, nv, in.contains("b") ? in["b"] : Json(), "input.b");
    ExtElement p = ext.multiply(a, b);
    r.lines.push_back("b: " + element_text(b));
    r.lines.push_back("a * b: " + element_text(p));
    r.results["b"] = element_json(b);
    r.results["product"] = element_json(p);
  } else {
    ExtElement inv = ext.inverse(a);
    r.lines.push_back("a^-1: " + element_text(inv));
    r.results["inverse"] = element_json(inv);
  }
  finish(r, opt);
  return kOk;
}

int cmd_types_table(Report& r, const Options& opt) {
  r.lines.push_back("graded tensor product types, row plus column mod 8:");
  Json rows = Json::array();
  for (int s = 0; s < 8; ++s) {
    std::string line = std::to_string(s) + ":";
    Json row = Json::array();
    for (int t = 0; t < 8; ++t) {
      int v = classify_type(realize(graded_tensor(reference_model(s), reference_model(t))));
      line += " " + std::to_string(v);
      row.push_back(v);
    }
    r.lines.push_back(line);
    rows.push_back(std::move(row));
  }
  r.results["table"] = std::move(rows);
  finish(r, opt);
  return kOk;
}

int cmd_types_classify(Report& r, const Options& opt) {
  TypeModel m = type_model_from_json(load_json_file(opt.in_path));
  int t = classify_type(realize(m));
  r.lines.push_back("type = " + std::to_string(t));
  r.results = {{"type", t}, {"odd", m.odd}};
  finish(r, opt);
  return kOk;
}

int cmd_fold(Report& r, const Options& opt) {
  RealGroupoid h = load_groupoid(opt.groupoid_path);
  RealCoefficient a = coefficient_from_token(opt.coeff);
  if (a.circle) throw std::invalid_argument("fold compares finite or integer coefficients");
  bool trivial = true;
  for (std::size_t x = 0; x < h.num_objects && trivial; ++x) trivial = h.obj_involution[x] == x;
  for (std::size_t g = 0; g < h.arrows.size() && trivial; ++g) trivial = h.arr_involution[g] == g;
  if (!trivial) {
    std::string note = "the input involution is ignored; the swap double carries its own";
    r.warnings.push_back(note);
    r.lines.push_back("note: " + note);
  }
  std::string plain = plain_cohomology(h, opt.degree, a).to_string();
  Nerve nv = build_nerve(swap_double(h), opt.degree + 1);
  std::string real = real_cohomology(nv, opt.degree, a).invariants.to_string();
  r.lines.push_back("H^" + std::to_string(opt.degree) + "(underlying) = " + plain);
  r.lines.push_back("HR^" + std::to_string(opt.degree) + "(swap double) = " + real);
  r.results = {{"degree", opt.degree},
               {"coefficients", opt.coeff},
               {"plain", plain},
               {"swap_double", real}};
  if (plain != real) {
    r.oracle = "mismatch";
    r.lines.push_back("MISMATCH: folding must reproduce the plain theory");
    finish(r, opt);
    return kOracleMismatch;
  }
  r.oracle = "ok";
  r.lines.push_back("folding OK");
  finish(r, opt);
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Real cohomology, graded extensions, and Brauer type arithmetic "
               "for finite groupoids with involution"};
  app.require_subcommand(1);
  Options opt;

  auto add_report = [&](CLI::App* c) {
    c->add_option("--report", opt.report_path, "write a structured json report to this file");
  };
  auto add_groupoid = [&](CLI::App* c) {
    c->add_option("--groupoid", opt.groupoid_path, "groupoid file, explicit or recipe form")
        ->required();
  };

  CLI::App* validate = app.add_subcommand("validate", "check every groupoid axiom");
  add_groupoid(validate);
  add_report(validate);

  CLI::App* nerve = app.add_subcommand("nerve", "composable string counts per level");
  add_groupoid(nerve);
  nerve->add_option("--max-level", opt.max_level, "deepest level to build (default 3)");
  add_report(nerve);

  CLI::App* coh = app.add_subcommand("cohomology", "Real cohomology in one degree");
  add_groupoid(coh);
  coh->add_option("--coeff", opt.coeff, "Z, Z(0,1), Z<m>, Zm(m,+1), Zm(m,-1), or S1")->required();
  coh->add_option("--degree", opt.degree, "cohomological degree")->required();
  coh->add_flag("--oracle", opt.oracle, "cross check against brute force enumeration");
  add_report(coh);

  CLI::App* brauer = app.add_subcommand("brauer", "graded Brauer group of the groupoid");
  add_groupoid(brauer);
  brauer->add_flag("--table", opt.table, "print the Cayley table when the group is small");
  add_report(brauer);

  CLI::App* ext = app.add_subcommand("ext", "graded extension class arithmetic");
  ext->require_subcommand(1);
  CLI::App* ext_mul = ext->add_subcommand("mul", "multiply two classes given as cochains");
  CLI::App* ext_inv = ext->add_subcommand("inv", "invert a class given as cochains");
  for (CLI::App* c : {ext_mul, ext_inv}) {
    add_groupoid(c);
    c->add_option("--in", opt.in_path, "cochain data: {\"a\": {\"delta\",\"omega\"}, ...}")
        ->required();
    add_report(c);
  }

  CLI::App* types = app.add_subcommand("types", "mod 8 type arithmetic of matrix models");
  types->require_subcommand(1);
  CLI::App* types_table = types->add_subcommand("table", "classify all 64 reference products");
  add_report(types_table);
  CLI::App* types_classify = types->add_subcommand("classify", "classify one model file");
  types_classify->add_option("--in", opt.in_path, "model file with gamma, U, odd, lambda")
      ->required();
  add_report(types_classify);

  CLI::App* fold = app.add_subcommand("fold", "compare a swap double against the plain theory");
  add_groupoid(fold);
  fold->add_option("--coeff", opt.coeff, "finite or integer coefficients")->required();
  fold->add_option("--degree", opt.degree, "cohomological degree")->required();
  add_report(fold);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  Report r;
  // The report destination is not an input; keeping it out of the echo
  // keeps reports byte-identical across destinations.
  for (int i = 0; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--report") {
      ++i;
      continue;
    }
    if (arg.rfind("--report=", 0) == 0) continue;
    r.command.push_back(std::move(arg));
  }
  if (!opt.groupoid_path.empty()) r.note_input(opt.groupoid_path);
  if (!opt.in_path.empty()) r.note_input(opt.in_path);

  if (validate->parsed()) return cmd_validate(r, opt);
  if (nerve->parsed()) return cmd_nerve(r, opt);
  if (coh->parsed()) return cmd_cohomology(r, opt);
  if (brauer->parsed()) return cmd_brauer(r, opt);
  if (ext->parsed()) return cmd_ext(r, opt, ext_mul->parsed());
  if (types->parsed())
    return types_table->parsed() ? cmd_types_table(r, opt) : cmd_types_classify(r, opt);
  if (fold->parsed()) return cmd_fold(r, opt);
  return kInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}
