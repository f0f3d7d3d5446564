#include "thompson/serialize.hpp"

#include <sstream>
#include <vector>

#include "json.hpp"
#include "thompson/errors.hpp"

namespace thompson {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (;;) {
    size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(const std::string& field, const std::string& what) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(field, &used);
  } catch (const std::exception&) {
    throw ParseError(what + " must be an integer, got \"" + field + "\"");
  }
  if (used != field.size()) {
    throw ParseError(what + " must be an integer, got \"" + field + "\"");
  }
  return value;
}

json arc_json(const CircleInterval& arc) {
  return json{{"lo", arc.lo.str()}, {"len", arc.len.str()}};
}

json arcs_json(const IntervalSet& s) {
  json out = json::array();
  for (const auto& arc : s.arcs()) out.push_back(arc_json(arc));
  return out;
}

}  // namespace

std::string element_text(const TElement& e) {
  return "T:" + e.source + ":" + e.target + ":" + std::to_string(e.mark);
}

std::string element_text(const VElement& e) {
  std::string perm;
  for (size_t i = 0; i < e.perm.size(); ++i) {
    if (i > 0) perm += ",";
    perm += std::to_string(e.perm[i]);
  }
  return "V:" + e.source + ":" + e.target + ":" + perm;
}

Group element_text_group(const std::string& text) {
  if (text.rfind("T:", 0) == 0) return Group::T;
  if (text.rfind("V:", 0) == 0) return Group::V;
  throw ParseError("element text must start with \"T:\" or \"V:\"");
}

TElement parse_t_element(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != 4 || parts[0] != "T") {
    throw ParseError("T element text must be \"T:source:target:mark\"");
  }
  return make_t_element(parts[1], parts[2], parse_int(parts[3], "mark"));
}

VElement parse_v_element(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != 4 || parts[0] != "V") {
    throw ParseError("V element text must be \"V:source:target:p0,p1,...\"");
  }
  std::vector<int> perm;
  for (const auto& field : split(parts[3], ',')) {
    perm.push_back(parse_int(field, "permutation entry"));
  }
  return make_v_element(parts[1], parts[2], std::move(perm));
}

std::string double_text(double x) { return json(x).dump(); }

std::string interval_set_json(const IntervalSet& s) { return arcs_json(s).dump(2); }

std::string dynamics_report_json(const DynamicsReport& r) {
  json fps = json::array();
  for (const auto& fp : r.fixed_points) {
    fps.push_back(json{{"location", rational_str(fp.location)},
                       {"kind", fp_kind_name(fp.kind)},
                       {"right_exponent", fp.right_exponent},
                       {"left_exponent", fp.left_exponent}});
  }
  json out{{"fixed_points", fps},
           {"neutral_intervals", arcs_json(r.neutral_intervals)},
           {"is_north_south", r.is_north_south}};
  return out.dump(2);
}

std::string certificate_json(const Certificate& cert, const std::string& u_text,
                             const std::string& v_text) {
  json out{{"P_u", arc_json(cert.P_u)},
           {"Q_u", arc_json(cert.Q_u)},
           {"P_v", arc_json(cert.P_v)},
           {"Q_v", arc_json(cert.Q_v)},
           {"depth", cert.depth},
           {"pair", json{{"u", u_text}, {"v", v_text}}}};
  return out.dump(2);
}

std::string density_json(const SphereSpec& spec, const std::string& predicate,
                         const DensityEstimate& est) {
  json out{{"group", group_name(spec.group)},
           {"n", spec.n},
           {"k", spec.k},
           {"predicate", predicate},
           {"method", est.method},
           {"hits", est.hits},
           {"trials", est.trials},
           {"exact_value", rational_str(est.exact_value)},
           {"estimate", est.estimate},
           {"ci_low", est.ci_low},
           {"ci_high", est.ci_high}};
  if (est.seed.has_value()) out["seed"] = *est.seed;
  return out.dump(2);
}

std::string density_csv_header() {
  return "group,n,k,predicate,method,hits,trials,estimate,ci_low,ci_high,seed";
}

std::string density_csv_row(const SphereSpec& spec, const std::string& predicate,
                            const DensityEstimate& est) {
  std::ostringstream row;
  row << group_name(spec.group) << ',' << spec.n << ',' << spec.k << ',' << predicate << ','
      << est.method << ',' << est.hits << ',' << est.trials << ',' << double_text(est.estimate)
      << ',' << double_text(est.ci_low) << ',' << double_text(est.ci_high) << ',';
  if (est.seed.has_value()) row << *est.seed;
  return row.str();
}

std::string growth_csv_header() { return "k,exact_log,model_log,ratio"; }

std::string growth_csv_row(const GrowthSample& s) {
  std::ostringstream row;
  row << s.k << ',' << s.exact_log.str(20) << ',' << s.model_log.str(20) << ','
      << s.ratio.str(17);
  return row.str();
}

}  // namespace thompson
