#ifndef HENON_REPORT_HPP
#define HENON_REPORT_HPP

#include <nlohmann/json.hpp>

#include "henon/arch_green.hpp"
#include "henon/family.hpp"
#include "henon/heights.hpp"
#include "henon/measure.hpp"
#include "henon/periodic.hpp"
#include "henon/sweep.hpp"

// JSON forms of the result types. Complex numbers are [re, im]; exact
// rationals are strings. Key order is fixed (nlohmann::ordered_json) so that
// identical inputs give byte-identical documents.
namespace henon::report {

using Json = nlohmann::ordered_json;

Json complex(Complex z);
Json point(const NumericPoint& q);
Json point(const ExactPoint& q);

Json green(const GreenValue& g);
Json height(const HeightValue& h);
Json modp(const ModPCycleSet& s, int max_period);
Json rational_periodic(const RationalPeriodicReport& r);
Json cycle(const Cycle& c);
Json numeric_periodic(const NumericPeriodicReport& r);
Json resultant(const ResultantFixedPoints& r);
Json common(const CommonPeriodicReport& r);
Json sweep(const SweepReport& r);
Json unit_locus(const UnitLocusResult& r);
Json curve_mass(const CurveMass& m);
Json dissipativity(const DissipativityReport& r);
Json measure_summary(const MeasureSample& s);
Json comparison(const MeasureComparison& c);

}  // namespace henon::report

#endif  // HENON_REPORT_HPP
