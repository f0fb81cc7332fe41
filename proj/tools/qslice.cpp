// qslice: exact structure checks for q(N), its good gradings, and the
// associated finite W-superalgebras, driven from the command line.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qslice/report.hpp"

using namespace qslice;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternalError = 3;

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad partition entry: " + item);
    parts.push_back(v);
  }
  return Partition::of(parts);
}

// accepts "k" or "a..b"
std::vector<int> parse_index_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return {std::stoi(text)};
  int lo = std::stoi(text.substr(0, dots));
  int hi = std::stoi(text.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("empty pyramid index range");
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<IsotropicMode> parse_modes(const std::string& text) {
  if (text == "lagrangian") return {IsotropicMode::Lagrangian};
  if (text == "zero") return {IsotropicMode::Zero};
  if (text == "both") return {IsotropicMode::Lagrangian, IsotropicMode::Zero};
  throw std::invalid_argument("isotropic mode must be lagrangian, zero, or both");
}

void emit(const Json& report, const std::string& format, const std::string& output) {
  std::string payload = format == "text" ? render_text(report) : report.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << payload;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    out << payload;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification harness for q(N) W-superalgebra structure"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string partition_text, pyramid_text, mode_text = "lagrangian";
  std::string format = "json", output;
  int kmax = 6, imax = 2, workers = 1, max_n = 3;

  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output,-o", output, "output path (default stdout)");
  app.add_option("--workers", workers, "worker threads (env QSLICE_WORKERS overrides)");

  auto add_partition = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--partition,-p", partition_text, "partition, e.g. 2,2,3");
    if (required) opt->required();
  };

  CLI::App* cmd_pyramids = app.add_subcommand("pyramids", "enumerate pyramids of a partition");
  add_partition(cmd_pyramids);

  CLI::App* cmd_grading = app.add_subcommand("grading", "gradings attached to pyramids");
  add_partition(cmd_grading);
  cmd_grading->add_option("--pyramid-index", pyramid_text, "single index");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run every structural check");
  add_partition(cmd_verify);
  cmd_verify->add_option("--pyramid-index", pyramid_text, "index or range a..b");
  cmd_verify->add_option("--isotropic-mode", mode_text, "lagrangian | zero | both");
  cmd_verify->add_option("--kmax", kmax, "Kazhdan truncation degree");
  cmd_verify->add_option("--imax", imax, "highest cohomological degree");

  CLI::App* cmd_walgebra = app.add_subcommand("walgebra", "W-algebra dimensions only");
  add_partition(cmd_walgebra);
  cmd_walgebra->add_option("--pyramid-index", pyramid_text, "single index (default 0)");
  cmd_walgebra->add_option("--isotropic-mode", mode_text, "lagrangian | zero");
  cmd_walgebra->add_option("--kmax", kmax, "Kazhdan truncation degree");

  CLI::App* cmd_cohomology = app.add_subcommand("cohomology", "cohomology table only");
  add_partition(cmd_cohomology);
  cmd_cohomology->add_option("--pyramid-index", pyramid_text, "single index (default 0)");
  cmd_cohomology->add_option("--isotropic-mode", mode_text, "lagrangian | zero");
  cmd_cohomology->add_option("--kmax", kmax, "Kazhdan truncation degree");
  cmd_cohomology->add_option("--imax", imax, "highest cohomological degree");

  CLI::App* cmd_all = app.add_subcommand("verify-all", "sweep all partitions up to max-n");
  cmd_all->add_option("--max-n", max_n, "largest N to sweep")->required();
  cmd_all->add_option("--kmax", kmax, "Kazhdan truncation degree");
  cmd_all->add_option("--imax", imax, "highest cohomological degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitBadInput;
  }

  try {
    Json report;
    bool exit_by_verdict = false;

    if (cmd_pyramids->parsed()) {
      report = pyramids_report(parse_partition(partition_text));
    } else if (cmd_grading->parsed()) {
      std::optional<int> index;
      if (!pyramid_text.empty()) index = parse_index_range(pyramid_text).front();
      report = grading_report(parse_partition(partition_text), index);
    } else if (cmd_walgebra->parsed() || cmd_cohomology->parsed()) {
      Partition shape = parse_partition(partition_text);
      int index = pyramid_text.empty() ? 0 : parse_index_range(pyramid_text).front();
      auto pyramids = enumerate_pyramids(shape);
      if (index < 0 || index >= int(pyramids.size()))
        throw std::invalid_argument("pyramid index out of range");
      NilpotentDatum datum = datum_from_pyramid(pyramids[index]);
      IsotropicMode mode = parse_modes(mode_text).front();
      report = cmd_walgebra->parsed()
                   ? walgebra_report(datum, shape, index, mode, kmax, true)
                   : cohomology_report(datum, shape, index, mode, kmax, imax, true);
      exit_by_verdict = true;
    } else if (cmd_verify->parsed()) {
      RunConfig config;
      config.partition = parse_partition(partition_text);
      config.modes = parse_modes(mode_text);
      config.kmax = kmax;
      config.imax = imax;
      config.workers = workers;
      if (!pyramid_text.empty()) {
        std::vector<int> indices = parse_index_range(pyramid_text);
        if (indices.size() == 1) {
          config.pyramid_index = indices.front();
          report = verify_report(config);
        } else {
          Json combined;
          combined["partition"] = config.partition.parts;
          combined["kmax"] = kmax;
          combined["imax"] = imax;
          Json cases = Json::array();
          bool pass = true;
          for (int i : indices) {
            config.pyramid_index = i;
            Json sub = verify_report(config);
            for (Json& c : sub["cases"]) cases.push_back(std::move(c));
            pass = pass && sub["pass"].get<bool>();
          }
          combined["cases"] = std::move(cases);
          combined["pass"] = pass;
          report = std::move(combined);
        }
      } else {
        report = verify_report(config);
      }
      exit_by_verdict = true;
    } else if (cmd_all->parsed()) {
      RunConfig config;
      config.modes = {IsotropicMode::Lagrangian, IsotropicMode::Zero};
      config.kmax = kmax;
      config.imax = imax;
      config.workers = workers;
      report = verify_all_report(max_n, config);
      exit_by_verdict = true;
    }

    emit(report, format, output);
    if (exit_by_verdict && !report_passed(report)) return kExitVerificationFailure;
    return kExitPass;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}
