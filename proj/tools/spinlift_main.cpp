// Command-line front end: classification queries, table and density output,
// characteristic classes, and the Clifford-algebra lift oracle.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spinlift/characters.hpp"
#include "spinlift/lift_oracle.hpp"
#include "spinlift/partition.hpp"
#include "spinlift/rep.hpp"
#include "spinlift/spinoriality.hpp"
#include "spinlift/stiefel_whitney.hpp"
#include "spinlift/tables.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace spinlift;

json json_int(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return static_cast<long long>(v);
  return v.str();  // decimal string once past 64 bits
}

json json_shape(const Partition& shape) {
  json arr = json::array();
  for (int p : shape.parts()) arr.push_back(p);
  return arr;
}

// Generic CSV for an object or an array of uniform objects; keys keep
// insertion order, arrays are rendered as quoted comma joins.
std::string json_to_csv(const json& j) {
  auto cell = [](const json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s = "\"";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].dump();
      }
      return s + "\"";
    }
    if (v.is_null()) return "";
    return v.dump();
  };
  const json& rows = j.is_array() ? j : json::array({j});
  std::string header, body;
  bool first_row = true;
  for (const auto& row : rows) {
    std::string line;
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (first_row) {
        if (!header.empty()) header += ',';
        header += it.key();
      }
      if (!line.empty()) line += ',';
      line += cell(it.value());
    }
    first_row = false;
    body += line + "\n";
  }
  return header + "\n" + body;
}

void emit(const json& j, const std::string& format) {
  if (format == "csv")
    std::cout << json_to_csv(j);
  else
    std::cout << j.dump(2) << "\n";
}

json report_json(const SpinReport& r) {
  json j;
  j["schema"] = 1;
  j["n"] = r.n;
  if (r.n2 > 0) j["n2"] = r.n2;
  j["degree"] = json_int(r.degree);
  j["g"] = json_int(r.g);
  j["h"] = json_int(r.h);
  if (r.chiral.has_value())
    j["chiral"] = *r.chiral;
  else
    j["chiral"] = nullptr;
  j["spinorial"] = r.spinorial;
  j["lift_count"] = r.lift_count;
  return j;
}

RepDescriptor descriptor_for(const Partition& shape, bool perm) {
  return perm ? RepDescriptor::perm_module(shape) : RepDescriptor::specht(shape);
}

struct Options {
  std::string group = "sn";
  std::string shape;
  std::string shape2;
  std::string variant;
  std::string cycle_type;
  std::string outer;
  std::string inner;
  std::string format = "json";
  std::string matrices_file;
  bool perm = false;
  bool perm2 = false;
  bool exhaustive = false;
  int max_n = 0;
  int opt_n = -1;
  int threads = 1;
  double tolerance = 1e-8;
};

int run_classify(const Options& o) {
  Partition shape = Partition::parse(o.shape);
  if (o.group == "sn") {
    SpinReport r = classify_sn(descriptor_for(shape, o.perm));
    json j = report_json(r);
    j["group"] = "sn";
    j["shape"] = json_shape(shape);
    j["perm"] = o.perm;
    j["w1"] = r.w1_coord;
    j["w2"] = json::array({r.w2_coords.first, r.w2_coords.second});
    emit(j, o.format);
    return 0;
  }
  if (o.group == "an") {
    SpinReport r;
    std::string variant = o.variant.empty() ? "restriction" : o.variant;
    if (variant == "restriction") {
      // Restriction of the described representation, reducible or not.
      r = classify_an_restriction(descriptor_for(shape, o.perm));
    } else {
      AnVariant v = variant == "plus" ? AnVariant::Plus : AnVariant::Minus;
      r = classify_an_irreducible(AnIrreducibleLabel::make(shape, v));
    }
    json j = report_json(r);
    j["group"] = "an";
    j["shape"] = json_shape(shape);
    j["variant"] = variant;
    emit(j, o.format);
    return 0;
  }
  if (o.group == "product") {
    if (o.shape2.empty())
      throw std::invalid_argument("classify --group product needs --shape2");
    Partition shape2 = Partition::parse(o.shape2);
    RepDescriptor left = descriptor_for(shape, o.perm);
    RepDescriptor right = descriptor_for(shape2, o.perm2);
    SpinReport r = classify_product(left, right);
    json j = report_json(r);
    j["group"] = "product";
    j["shape"] = json_shape(shape);
    j["shape2"] = json_shape(shape2);
    CharTriple tl = triple_of(left), tr = triple_of(right);
    GhPair gl = g_and_h(tl), gr = g_and_h(tr);
    j["factors"] = json::array(
        {json{{"degree", json_int(tl.degree)}, {"g", json_int(gl.g)}, {"h", json_int(gl.h)}},
         json{{"degree", json_int(tr.degree)}, {"g", json_int(gr.g)}, {"h", json_int(gr.h)}}});
    emit(j, o.format);
    return 0;
  }
  throw std::invalid_argument("unknown group '" + o.group + "'");
}

int run_character(const Options& o) {
  Partition shape = Partition::parse(o.shape);
  CycleType cycles{Partition::parse(o.cycle_type)};
  BigInt value = character_value(shape, cycles);
  if (o.format == "json") {
    // The default output is the bare integer; JSON wrapping is available
    // through an explicit --format json.
    std::cout << value.str() << "\n";
  } else {
    json j{{"schema", 1},
           {"shape", json_shape(shape)},
           {"cycle_type", json_shape(cycles.lengths())},
           {"value", json_int(value)}};
    emit(j, o.format);
  }
  return 0;
}

int run_skew(const Options& o) {
  Partition outer = Partition::parse(o.outer);
  Partition inner = Partition::parse(o.inner);
  BigInt value = skew_syt_count(outer, inner);
  if (o.format == "json") {
    std::cout << value.str() << "\n";  // bare integer by default
  } else {
    json j{{"schema", 1},
           {"outer", json_shape(outer)},
           {"inner", json_shape(inner)},
           {"value", json_int(value)}};
    emit(j, o.format);
  }
  return 0;
}

int run_sw(const Options& o) {
  Partition shape = Partition::parse(o.shape);
  if (o.opt_n >= 0 && o.opt_n != shape.size())
    throw std::invalid_argument("--n must equal the size of --shape");
  RepDescriptor rep = descriptor_for(shape, o.perm);
  H1Class w1 = w1_of(rep);
  H2Class w2 = w2_of(rep);
  json j{{"schema", 1},
         {"shape", json_shape(shape)},
         {"n", shape.size()},
         {"w1", w1.sgn_coef},
         {"w2", json::array({w2.e_cup_coef(), w2.w2_std_coef()})},
         {"spinorial", spin_via_w(rep)}};
  emit(j, o.format);
  return 0;
}

int run_sw_product(const Options& o) {
  if (o.shape2.empty()) throw std::invalid_argument("sw-product needs --shape2");
  RepDescriptor left = descriptor_for(Partition::parse(o.shape), o.perm);
  RepDescriptor right = descriptor_for(Partition::parse(o.shape2), o.perm2);
  auto [w1l, w1r] = w1_product(left, right);
  H2ProductClass w2 = w2_product(left, right);
  json j{{"schema", 1},
         {"shape", json_shape(Partition::parse(o.shape))},
         {"shape2", json_shape(Partition::parse(o.shape2))},
         {"w1", json::array({w1l.sgn_coef, w1r.sgn_coef})},
         {"w2_left", json::array({w2.left.e_cup_coef(), w2.left.w2_std_coef()})},
         {"w2_cross", w2.cross},
         {"w2_right", json::array({w2.right.e_cup_coef(), w2.right.w2_std_coef()})},
         {"spinorial", product_spin_via_w(left, right)}};
  emit(j, o.format);
  return 0;
}

int run_density(const Options& o) {
  if (o.max_n < 4) throw std::invalid_argument("density needs --max-n >= 4");
  json rows = json::array();
  for (int n = 4; n <= o.max_n; ++n) {
    DensityPoint p = density_sweep(n, o.threads);
    rows.push_back(json{{"n", p.n},
                        {"count", p.achiral_spinorial},
                        {"p_n", p.total},
                        {"fraction", p.fraction()}});
  }
  emit(rows, o.format);
  return 0;
}

int run_table1(const Options& o) {
  if (o.format == "csv") {
    std::cout << table1_csv();
    return 0;
  }
  json rows = json::array();
  for (const TableRow& row : emit_table1())
    rows.push_back(json{{"shape", json_shape(row.shape)},
                        {"chirality", row.chiral ? "chiral" : "achiral"},
                        {"spinoriality_sn", row.sn_spinorial ? "spinorial" : "aspinorial"},
                        {"spinoriality_an", row.an_spinorial ? "spinorial" : "aspinorial"}});
  emit(rows, o.format);
  return 0;
}

int run_table2(const Options& o) {
  if (o.format == "csv") {
    std::cout << table2_csv();
    return 0;
  }
  json rows = json::array();
  for (const Table2Row& row : emit_table2())
    rows.push_back(json{{"shape", json_shape(row.shape)},
                        {"size", row.size},
                        {"spinoriality", row.spinorial ? "spinorial" : "aspinorial"}});
  emit(rows, o.format);
  return 0;
}

OrthogonalRep rep_from_file(const std::string& path, const std::string& group) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrices file: " + path);
  json doc = json::parse(in);
  OrthogonalRep rep;
  rep.n = doc.at("n").get<int>();
  rep.kind = group == "an" ? GeneratorKind::Alternating : GeneratorKind::Symmetric;
  for (const auto& gen : doc.at("generators")) {
    int d = static_cast<int>(gen.size());
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = gen.at(i).at(j).get<double>();
    rep.generators.push_back(std::move(m));
    rep.degree = d;
  }
  return rep;
}

int run_oracle(const Options& o) {
  LiftOptions lift;
  lift.tolerance = o.tolerance;
  lift.exhaustive = o.exhaustive;

  OrthogonalRep rep;
  json shape_field;
  if (!o.matrices_file.empty()) {
    rep = rep_from_file(o.matrices_file, o.group);
    shape_field = nullptr;
  } else {
    Partition shape = Partition::parse(o.shape);
    OrthogonalRep sn_rep = young_orthogonal_matrices(shape);
    rep = o.group == "an" ? alternating_generators(sn_rep) : std::move(sn_rep);
    shape_field = json_shape(shape);
  }

  LiftSearchResult r = o.group == "an" ? verify_an_lift(rep, lift)
                                       : verify_sn_lift(rep, lift);
  json j{{"schema", 1},
         {"group", o.group},
         {"shape", shape_field},
         {"exists", r.exists},
         {"lift_count", r.lift_count},
         {"max_residual", r.max_residual}};
  emit(j, o.format);
  return 0;
}

int run_perm(const Options& o) {
  Partition shape = Partition::parse(o.shape);
  CharTriple t = perm_module_triple(shape);
  json j{{"schema", 1},
         {"shape", json_shape(shape)},
         {"degree", json_int(t.degree)},
         {"at_s1", json_int(t.at_s1)},
         {"at_s1s3", json_int(t.at_s1s3)}};
  emit(j, o.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spinoriality classification for representations of "
               "symmetric and alternating groups"};
  app.require_subcommand(1);

  Options o;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* classify = app.add_subcommand("classify", "Classification verdict");
  classify->add_option("--group", o.group, "sn, an, or product")
      ->required()
      ->check(CLI::IsMember({"sn", "an", "product"}));
  classify->add_option("--shape", o.shape, "Partition, e.g. 3,1")->required();
  classify->add_option("--shape2", o.shape2, "Second factor shape (product)");
  classify->add_option("--variant", o.variant, "plus, minus, or restriction (an)")
      ->check(CLI::IsMember({"plus", "minus", "restriction"}));
  classify->add_flag("--perm", o.perm, "Interpret --shape as a permutation module");
  classify->add_flag("--perm2", o.perm2, "Interpret --shape2 as a permutation module");
  add_format(classify);

  auto* character = app.add_subcommand("character", "Exact character value");
  character->add_option("--shape", o.shape, "Partition")->required();
  character->add_option("--cycle-type", o.cycle_type, "Cycle type, e.g. 2,2,1,1")
      ->required();
  add_format(character);

  auto* skew = app.add_subcommand("skew", "Skew standard tableau count");
  skew->add_option("--outer", o.outer, "Outer shape")->required();
  skew->add_option("--inner", o.inner, "Inner shape")->required();
  add_format(skew);

  auto* sw = app.add_subcommand("sw", "Characteristic class coordinates");
  sw->add_option("--shape", o.shape, "Partition")->required();
  sw->add_option("--n", o.opt_n, "Ambient group size (must equal |shape|)");
  sw->add_flag("--perm", o.perm, "Interpret --shape as a permutation module");
  add_format(sw);

  auto* swp = app.add_subcommand("sw-product", "Classes of an external product");
  swp->add_option("--shape", o.shape, "Left shape")->required();
  swp->add_option("--shape2", o.shape2, "Right shape")->required();
  swp->add_flag("--perm", o.perm, "Left factor as a permutation module");
  swp->add_flag("--perm2", o.perm2, "Right factor as a permutation module");
  add_format(swp);

  auto* density = app.add_subcommand("density", "Achiral-spinorial density scan");
  density->add_option("--max-n", o.max_n, "Scan n = 4..max-n")->required();
  density->add_option("--threads", o.threads, "Worker threads");
  add_format(density);

  auto* table1 = app.add_subcommand("table1", "Classification of all shapes, n = 2..6");
  add_format(table1);
  auto* table2 = app.add_subcommand(
      "table2", "Split constituents of self-conjugate shapes, n = 3..15");
  add_format(table2);

  auto* oracle = app.add_subcommand("oracle", "Clifford-algebra lift search");
  oracle->add_option("--shape", o.shape, "Partition");
  oracle->add_option("--group", o.group, "sn or an")
      ->check(CLI::IsMember({"sn", "an"}));
  oracle->add_flag("--exhaustive", o.exhaustive, "Cross-check with full sign search");
  oracle->add_option("--tolerance", o.tolerance, "Relation residual tolerance");
  oracle->add_option("--matrices", o.matrices_file,
                     "JSON file with {\"n\": int, \"generators\": [...]}");
  add_format(oracle);

  auto* perm = app.add_subcommand("perm", "Permutation module character triple");
  perm->add_option("--shape", o.shape, "Partition")->required();
  add_format(perm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*classify) return run_classify(o);
    if (*character) return run_character(o);
    if (*skew) return run_skew(o);
    if (*sw) return run_sw(o);
    if (*swp) return run_sw_product(o);
    if (*density) return run_density(o);
    if (*table1) return run_table1(o);
    if (*table2) return run_table2(o);
    if (*oracle) {
      if (o.shape.empty() && o.matrices_file.empty())
        throw std::invalid_argument("oracle needs --shape or --matrices");
      return run_oracle(o);
    }
    if (*perm) return run_perm(o);
  } catch (const std::exception& e) {
    nlohmann::ordered_json err{{"schema", 1}, {"error", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 2;
}
