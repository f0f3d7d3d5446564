// Command line surface: every capability behind one reproducible binary.
// Exit codes: 0 success, 1 negative result, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thompson/asymptotics.hpp"
#include "thompson/density.hpp"
#include "thompson/dynamics.hpp"
#include "thompson/errors.hpp"
#include "thompson/freeness.hpp"
#include "thompson/serialize.hpp"
#include "thompson/version.hpp"

namespace {

using nlohmann::json;
using namespace thompson;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << '\n';
      return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << text << '\n';
  }
};

std::string config_comment(const json& config) {
  std::string line = "# version=";
  line += kVersion;
  for (const auto& [key, value] : config.items()) {
    line += ' ';
    line += key;
    line += '=';
    line += value.is_string() ? value.get<std::string>() : value.dump();
  }
  return line;
}

json with_config(json config, json body) {
  json out;
  out["version"] = kVersion;
  out["config"] = std::move(config);
  for (auto& [key, value] : body.items()) out[key] = std::move(value);
  return out;
}

PLMap map_of(const std::string& text) {
  return element_text_group(text) == Group::T ? to_pl_map(parse_t_element(text))
                                              : to_pl_map(parse_v_element(text));
}

int run_catalan(int n, const std::string& format, const Output& out) {
  json config{{"subcommand", "catalan"}, {"n", n}};
  BigInt c = catalan(n);
  if (format == "csv") {
    out.write(config_comment(config) + "\nn,catalan\n" + std::to_string(n) + "," + c.str());
  } else {
    out.write(with_config(config, json{{"catalan", c.str()}}).dump(2));
  }
  return 0;
}

int run_count(Group group, int n, const std::string& format, const Output& out) {
  json config{{"subcommand", "count"}, {"group", group_name(group)}, {"n", n}};
  BigInt c = diagram_count(group, n);
  if (format == "csv") {
    out.write(config_comment(config) + "\ngroup,n,count\n" + group_name(group) + "," +
              std::to_string(n) + "," + c.str());
  } else {
    out.write(with_config(config, json{{"count", c.str()}}).dump(2));
  }
  return 0;
}

int run_eval(const std::string& elem_text, const std::string& x_text, const Output& out) {
  json config{{"subcommand", "eval"}, {"element", elem_text}, {"x", x_text}};
  PLMap m = map_of(elem_text);
  Rational x = rational_mod1(parse_rational(x_text));
  Rational y = m.evaluate(x);
  out.write(with_config(config, json{{"value", rational_str(y)}}).dump(2));
  return 0;
}

int run_compose(const std::string& f_text, const std::string& g_text, bool invert_first,
                bool invert_second, const Output& out) {
  json config{{"subcommand", "compose"},
              {"f", f_text},
              {"g", g_text},
              {"invert_first", invert_first},
              {"invert_second", invert_second}};
  PLMap f = map_of(f_text);
  PLMap g = map_of(g_text);
  if (invert_first) f = invert(f);
  if (invert_second) g = invert(g);
  PLMap h = compose(f, g);
  json branches = json::array();
  for (const auto& br : h.branches()) {
    branches.push_back(json{{"lo", br.dom.lo.str()},
                            {"len", br.dom.len.str()},
                            {"e", br.e},
                            {"b", br.b.str()}});
  }
  out.write(with_config(config, json{{"is_identity", h.is_identity()},
                                     {"branch_count", h.branch_count()},
                                     {"branches", branches}})
                .dump(2));
  return 0;
}

int run_fixed_points(const std::string& elem_text, const Output& out) {
  json config{{"subcommand", "fixed-points"}, {"element", elem_text}};
  DynamicsReport report = fixed_points(map_of(elem_text));
  json body = json::parse(dynamics_report_json(report));
  out.write(with_config(config, std::move(body)).dump(2));
  return 0;
}

int run_density(Group group, int n, int k, const std::string& predicate_name, bool use_mc,
                unsigned long long trials, unsigned long long seed, int workers,
                const std::string& format, const Output& out) {
  SphereSpec spec{group, n, k};
  Predicate predicate = named_predicate(predicate_name);
  DensityEstimate est = use_mc ? mc_density(spec, predicate, trials, seed, workers)
                               : exact_density(spec, predicate, workers);
  json config{{"subcommand", "density"}, {"group", group_name(group)},   {"n", n},
              {"k", k},                  {"predicate", predicate_name},  {"workers", workers},
              {"method", est.method}};
  if (use_mc) {
    config["trials"] = trials;
    config["seed"] = seed;
  }
  if (format == "csv") {
    out.write(config_comment(config) + "\n" + density_csv_header() + "\n" +
              density_csv_row(spec, predicate_name, est));
  } else {
    out.write(with_config(config, json::parse(density_json(spec, predicate_name, est))).dump(2));
  }
  return 0;
}

int run_certify(const std::string& family, int n, unsigned long long index,
                const std::string& pair_file, int max_depth, int word_max_len, int word_count,
                unsigned long long word_seed, const Output& out) {
  std::string u_text;
  std::string v_text;
  if (!pair_file.empty()) {
    std::ifstream in(pair_file);
    if (!in) throw ParseError("cannot open pair file: " + pair_file);
    if (!std::getline(in, u_text) || !std::getline(in, v_text)) {
      throw ParseError("pair file must hold two element lines");
    }
  } else {
    PingPongPair pair = sample_pingpong_pair(parse_group(family), n, index);
    u_text = pair.u_text;
    v_text = pair.v_text;
  }
  PLMap u = map_of(u_text);
  PLMap v = map_of(v_text);
  json config{{"subcommand", "certify-free"}, {"u", u_text},
              {"v", v_text},                  {"max_depth", max_depth},
              {"word_max_len", word_max_len}, {"word_count", word_count},
              {"word_seed", word_seed}};
  if (pair_file.empty()) {
    config["family"] = family;
    config["n"] = n;
    config["index"] = index;
  }
  CertificateSearch search = find_certificate(u, v, max_depth);
  std::vector<std::string> identities = random_word_test(u, v, word_max_len, word_count,
                                                         word_seed);
  json body;
  if (search.certificate.has_value()) {
    body["certificate"] = json::parse(certificate_json(*search.certificate, u_text, v_text));
    body["verified"] = verify_certificate(u, v, *search.certificate);
  } else {
    body["certificate"] = nullptr;
    body["failure"] = search.failure;
  }
  body["word_test"] = json{{"identity_words", identities},
                           {"identities_found", identities.size()}};
  out.write(with_config(config, std::move(body)).dump(2));
  return search.certificate.has_value() ? 0 : 1;
}

int run_asymptotics(const std::string& table, Group group, std::vector<int> ks, bool sphere,
                    const std::string& format, const Output& out) {
  if (table == "limits") {
    json config{{"subcommand", "asymptotics"}, {"table", "limits"}};
    auto rows = limit_table();
    if (format == "csv") {
      std::string text = config_comment(config) + "\nquantity,n,value,limit,abs_gap";
      for (const auto& row : rows) {
        text += "\n" + row.quantity + "," + std::to_string(row.n) + "," + row.value.str(17) +
                "," + row.limit.str(17) + "," + row.abs_gap.str(6);
      }
      out.write(text);
    } else {
      json body = json::array();
      for (const auto& row : rows) {
        body.push_back(json{{"quantity", row.quantity},
                            {"n", row.n},
                            {"value", row.value.str(17)},
                            {"limit", row.limit.str(17)},
                            {"abs_gap", row.abs_gap.str(6)}});
      }
      out.write(with_config(config, json{{"rows", body}}).dump(2));
    }
    return 0;
  }
  if (ks.empty()) ks = {10, 50, 100, 200, 300, 500, 1000};
  json config{{"subcommand", "asymptotics"},
              {"table", "growth"},
              {"group", group_name(group)},
              {"sphere", sphere}};
  std::vector<GrowthSample> samples;
  for (int k : ks) {
    samples.push_back(sphere ? sphere_growth_sample(group, k)
                             : (group == Group::T ? growth_sample_T(k) : growth_sample_V(k)));
  }
  if (format == "csv") {
    std::string text = config_comment(config) + "\n" + growth_csv_header();
    for (const auto& s : samples) text += "\n" + growth_csv_row(s);
    out.write(text);
  } else {
    json body = json::array();
    for (const auto& s : samples) {
      body.push_back(json{{"k", s.k},
                          {"exact_log", s.exact_log.str(20)},
                          {"model_log", s.model_log.str(20)},
                          {"ratio", s.ratio.str(17)}});
    }
    out.write(with_config(config, json{{"rows", body}}).dump(2));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for marked tree-pair circle maps"};
  app.require_subcommand(1);

  std::string group_text = "T";
  std::string format = "json";
  std::string output_path;
  int n = 3;
  int k = 1;
  std::string predicate_name = "ns-family";
  bool use_exact = false;
  bool use_mc = false;
  unsigned long long trials = 100000;
  unsigned long long seed = 12345;
  int workers = 1;
  std::string elem_a;
  std::string elem_b;
  std::string x_text = "0";
  bool invert_first = false;
  bool invert_second = false;
  std::string family = "T";
  unsigned long long index = 0;
  std::string pair_file;
  int max_depth = 8;
  int word_max_len = 10;
  int word_count = 500;
  std::string table = "limits";
  std::vector<int> ks;
  bool sphere = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", output_path, "write the result to a file instead of stdout");
  };

  CLI::App* c_catalan = app.add_subcommand("catalan", "Catalan number C_n");
  c_catalan->add_option("--n", n, "tree size")->required()->check(CLI::NonNegativeNumber);
  add_common(c_catalan);

  CLI::App* c_count = app.add_subcommand("count", "diagram count of the size-n sphere");
  c_count->add_option("--group", group_text, "T or V")->check(CLI::IsMember({"T", "V"}));
  c_count->add_option("--n", n, "diagram size")->required()->check(CLI::NonNegativeNumber);
  add_common(c_count);

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate an element at a rational point");
  c_eval->add_option("element", elem_a, "element text")->required();
  c_eval->add_option("--x", x_text, "rational point p/q")->required();
  add_common(c_eval);

  CLI::App* c_compose = app.add_subcommand("compose", "compose two elements as circle maps");
  c_compose->add_option("f", elem_a, "outer element text")->required();
  c_compose->add_option("g", elem_b, "inner element text")->required();
  c_compose->add_flag("--invert-first", invert_first, "replace f by its inverse");
  c_compose->add_flag("--invert-second", invert_second, "replace g by its inverse");
  add_common(c_compose);

  CLI::App* c_fp = app.add_subcommand("fixed-points", "exact fixed points and classification");
  c_fp->add_option("element", elem_a, "element text")->required();
  add_common(c_fp);

  CLI::App* c_density = app.add_subcommand("density", "predicate density over a sphere");
  c_density->add_option("--group", group_text, "T or V")->check(CLI::IsMember({"T", "V"}));
  c_density->add_option("--n", n, "diagram size")->required();
  c_density->add_option("--k", k, "tuple arity (Monte Carlo only for k > 1)");
  c_density->add_option("--predicate", predicate_name, "named predicate")
      ->required()
      ->check(CLI::IsMember(predicate_names()));
  CLI::Option* exact_flag = c_density->add_flag("--exact", use_exact, "exhaustive census");
  c_density->add_flag("--mc", use_mc, "Monte Carlo estimate")->excludes(exact_flag);
  c_density->add_option("--trials", trials, "Monte Carlo trial count");
  c_density->add_option("--seed", seed, "master seed");
  c_density->add_option("--workers", workers, "parallel workers (bit-identical results)");
  add_common(c_density);

  CLI::App* c_certify = app.add_subcommand("certify-free", "ping-pong freeness certificate");
  CLI::Option* pf = c_certify->add_option("--pair-file", pair_file,
                                          "file with two element lines (u, v)");
  c_certify->add_option("--family", family, "family group T or V")
      ->check(CLI::IsMember({"T", "V"}))
      ->excludes(pf);
  c_certify->add_option("--n", n, "family diagram size")->excludes(pf);
  c_certify->add_option("--index", index, "deterministic family pair index")->excludes(pf);
  c_certify->add_option("--max-depth", max_depth, "deepest dyadic arc level searched");
  c_certify->add_option("--word-max-len", word_max_len, "word test maximum length");
  c_certify->add_option("--word-count", word_count, "word test sample count");
  c_certify->add_option("--seed", seed, "word test seed");
  add_common(c_certify);

  CLI::App* c_asym = app.add_subcommand("asymptotics", "growth series and limit tables");
  c_asym->add_option("--table", table, "limits or growth")
      ->required()
      ->check(CLI::IsMember({"limits", "growth"}));
  c_asym->add_option("--group", group_text, "T or V (growth table)")
      ->check(CLI::IsMember({"T", "V"}));
  c_asym->add_option("--ks", ks, "sizes for the growth table")->delimiter(',');
  c_asym->add_flag("--sphere", sphere, "pair-sphere growth instead of element growth");
  add_common(c_asym);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out{output_path};
  try {
    if (app.got_subcommand(c_catalan)) return run_catalan(n, format, out);
    if (app.got_subcommand(c_count)) return run_count(parse_group(group_text), n, format, out);
    if (app.got_subcommand(c_eval)) return run_eval(elem_a, x_text, out);
    if (app.got_subcommand(c_compose)) {
      return run_compose(elem_a, elem_b, invert_first, invert_second, out);
    }
    if (app.got_subcommand(c_fp)) return run_fixed_points(elem_a, out);
    if (app.got_subcommand(c_density)) {
      return run_density(parse_group(group_text), n, k, predicate_name, use_mc, trials, seed,
                         workers, format, out);
    }
    if (app.got_subcommand(c_certify)) {
      return run_certify(family, n, index, pair_file, max_depth, word_max_len, word_count, seed,
                         out);
    }
    if (app.got_subcommand(c_asym)) {
      return run_asymptotics(table, parse_group(group_text), ks, sphere, format, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
