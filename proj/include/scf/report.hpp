#ifndef SCF_REPORT_HPP
#define SCF_REPORT_HPP

#include <string>

#include "scf/experiments.hpp"

namespace scf::report {

/// 12 significant digits, reproducible across runs.
std::string format_float(long double v);

inline const char* kCensusHeader = "t,g,d,R,absL,h,ratio,split_bound";

std::string census_csv(const experiments::Census& census);
std::string census_json(const experiments::Census& census);

std::string tuples_csv(const experiments::TupleReport& rep);
std::string tuples_json(const experiments::TupleReport& rep);

} // namespace scf::report

#endif
