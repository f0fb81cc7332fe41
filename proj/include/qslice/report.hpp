#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "qslice/cohomology.hpp"

namespace qslice {

using Json = nlohmann::json;

struct RunConfig {
  Partition partition{{1}};
  std::optional<int> pyramid_index;  // all pyramids when absent
  std::vector<IsotropicMode> modes = {IsotropicMode::Lagrangian};
  int kmax = 6;
  int imax = 2;
  int workers = 1;
  bool include_timing = true;
};

std::string mode_name(IsotropicMode mode);
Json sudim_json(const SuperDim& s);

Json pyramids_report(const Partition& shape);
Json grading_report(const Partition& shape, std::optional<int> pyramid_index);
Json structure_report(const NilpotentDatum& datum, const Pyramid& pyramid, int pyramid_index,
                      IsotropicMode mode);
Json walgebra_report(const NilpotentDatum& datum, const Partition& shape, int pyramid_index,
                     IsotropicMode mode, int kmax, bool include_timing);
Json cohomology_report(const NilpotentDatum& datum, const Partition& shape, int pyramid_index,
                       IsotropicMode mode, int kmax, int imax, bool include_timing);

// Runs structure + walgebra + cohomology for the selected cases; "pass" is
// the conjunction of every verdict, "first_failure" names the first failed
// check. Cases run on a small worker pool but are assembled in order.
Json verify_report(const RunConfig& config);
Json verify_all_report(int max_n, const RunConfig& config);

bool report_passed(const Json& report);
std::string render_text(const Json& report);

}  // namespace qslice
