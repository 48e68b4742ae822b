#include "scf/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace scf::report {

using nlohmann::json;

std::string format_float(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12Lg", v);
    return buf;
}

namespace {

std::string census_row_csv(const experiments::CensusRow& r) {
    std::ostringstream os;
    os << r.t << ',' << to_string(r.conductor) << ',' << to_string(r.d) << ','
       << format_float(r.regulator) << ',' << format_float(r.abs_l) << ',' << r.h << ','
       << format_float(r.ratio) << ',' << r.split_bound;
    return os.str();
}

// Big integers are serialized as strings: discriminants exceed 2^53 and JSON
// numbers would silently lose precision.
json census_row_json(const experiments::CensusRow& r) {
    return json{{"t", r.t},
                {"g", to_string(r.conductor)},
                {"d", to_string(r.d)},
                {"R", format_float(r.regulator)},
                {"absL", format_float(r.abs_l)},
                {"h", r.h},
                {"ratio", format_float(r.ratio)},
                {"split_bound", r.split_bound}};
}

json summary_json(const experiments::CensusSummary& s) {
    return json{{"rows", s.rows},
                {"above_main", s.above_main},
                {"above_conjectural", s.above_conjectural},
                {"above_grh", s.above_grh},
                {"rank_correlation", format_float(s.rank_correlation)}};
}

} // namespace

std::string census_csv(const experiments::Census& census) {
    std::ostringstream os;
    os << kCensusHeader << '\n';
    for (const auto& r : census.rows) os << census_row_csv(r) << '\n';
    const auto& s = census.summary;
    os << "# rows=" << s.rows << '\n';
    os << "# above_main=" << s.above_main << '\n';
    os << "# above_conjectural=" << s.above_conjectural << '\n';
    os << "# above_grh=" << s.above_grh << '\n';
    os << "# rank_correlation=" << format_float(s.rank_correlation) << '\n';
    return os.str();
}

std::string census_json(const experiments::Census& census) {
    json rows = json::array();
    for (const auto& r : census.rows) rows.push_back(census_row_json(r));
    json out{{"rows", rows}, {"summary", summary_json(census.summary)}};
    return out.dump(2) + "\n";
}

std::string tuples_csv(const experiments::TupleReport& rep) {
    std::ostringstream os;
    const auto& c = rep.construction;
    os << "# k=" << c.k << " epsilon=" << format_float(c.epsilon)
       << " x=" << to_string(c.x) << " q=" << c.q << '\n';
    for (unsigned j = 0; j < c.k; ++j)
        os << "# a_" << (j + 1) << "=" << c.a[j] << " delta_" << (j + 1) << "="
           << c.deltas[j] << '\n';
    for (const auto& [p, residues] : c.split_table) {
        os << "# p=" << p << " residues=";
        for (size_t i = 0; i < residues.size(); ++i)
            os << (i ? ";" : "") << residues[i];
        os << '\n';
    }
    os << "# X=" << to_string(rep.window_x) << " alpha=" << format_float(rep.alpha)
       << " progression=" << rep.progression_size << " survivors=" << rep.survivors
       << " dropped_outside_window=" << rep.dropped_outside_window << '\n';
    if (rep.empty) {
        os << "# no tuples at this scale\n";
        return os.str();
    }
    os << "tuple,j," << kCensusHeader << ",gap_exponent\n";
    for (size_t i = 0; i < rep.tuples.size(); ++i) {
        const auto& tuple = rep.tuples[i];
        for (size_t j = 0; j < tuple.size(); ++j) {
            os << (i + 1) << ',' << (j + 1) << ',' << census_row_csv(tuple[j]) << ',';
            if (tuple.size() >= 2 && j + 1 == tuple.size())
                os << format_float(rep.gap_exponents[i]);
            os << '\n';
        }
    }
    return os.str();
}

std::string tuples_json(const experiments::TupleReport& rep) {
    const auto& c = rep.construction;
    json construction{{"k", c.k},
                      {"epsilon", format_float(c.epsilon)},
                      {"x", to_string(c.x)},
                      {"q", c.q},
                      {"prime_bound", format_float(c.prime_bound)},
                      {"a", c.a},
                      {"deltas", c.deltas}};
    json table = json::object();
    for (const auto& [p, residues] : c.split_table)
        table[std::to_string(p)] = residues;
    construction["split_table"] = table;
    json tuples = json::array();
    for (size_t i = 0; i < rep.tuples.size(); ++i) {
        json fields = json::array();
        for (const auto& row : rep.tuples[i]) fields.push_back(census_row_json(row));
        json tj{{"fields", fields}};
        if (rep.tuples[i].size() >= 2)
            tj["gap_exponent"] = format_float(rep.gap_exponents[i]);
        tuples.push_back(tj);
    }
    json out{{"construction", construction},
             {"tuples", tuples},
             {"X", to_string(rep.window_x)},
             {"alpha", format_float(rep.alpha)},
             {"progression_size", rep.progression_size},
             {"survivors", rep.survivors},
             {"dropped_outside_window", rep.dropped_outside_window},
             {"empty", rep.empty}};
    return out.dump(2) + "\n";
}

} // namespace scf::report
