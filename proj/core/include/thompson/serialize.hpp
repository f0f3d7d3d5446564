#pragma once

#include <string>

#include "thompson/asymptotics.hpp"
#include "thompson/density.hpp"
#include "thompson/dynamics.hpp"
#include "thompson/element.hpp"
#include "thompson/freeness.hpp"

namespace thompson {

// Text forms "T:source:target:mark" and "V:source:target:p0,p1,...".
std::string element_text(const TElement& e);
std::string element_text(const VElement& e);
Group element_text_group(const std::string& text);
TElement parse_t_element(const std::string& text);
VElement parse_v_element(const std::string& text);

// Shortest round-trip decimal for doubles (CSV and JSON share it).
std::string double_text(double x);

// JSON documents, two-space indent, keys sorted. Arcs appear as
// {"len":"b/2^f","lo":"a/2^e"}; rationals as "p/q".
std::string interval_set_json(const IntervalSet& s);
std::string dynamics_report_json(const DynamicsReport& r);
std::string certificate_json(const Certificate& cert, const std::string& u_text,
                             const std::string& v_text);
std::string density_json(const SphereSpec& spec, const std::string& predicate,
                         const DensityEstimate& est);

// CSV: group,n,k,predicate,method,hits,trials,estimate,ci_low,ci_high,seed.
std::string density_csv_header();
std::string density_csv_row(const SphereSpec& spec, const std::string& predicate,
                            const DensityEstimate& est);

// CSV: k,exact_log,model_log,ratio.
std::string growth_csv_header();
std::string growth_csv_row(const GrowthSample& s);

}  // namespace thompson
