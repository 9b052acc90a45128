#ifndef FXNET_PIPELINE_HPP
#define FXNET_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fxnet/metrics.hpp"
#include "fxnet/panel.hpp"
#include "fxnet/rolling.hpp"
#include "fxnet/signal.hpp"

namespace fxnet {

/// Full run description. `bases` and `kinds` accept the literal "all".
struct RunConfig {
    std::string input_path;
    PanelSchema schema;
    std::vector<std::string> bases;           // currency codes or "all"
    std::vector<std::string> kinds;           // return/sign/amplitude or "all"
    double clip_sigma = 10.0;
    MissingPolicy missing;
    WindowSpec window;
    bool rolling = false;                     // rolling run instead of static
    std::vector<std::string> rolling_metrics = {"L", "C"};
    PathLengthMode path_mode = PathLengthMode::Weighted;
    std::string out_dir;
    std::vector<std::string> formats;         // dot graphml csv json
    int table_l_decimals = 2;
    int table_c_decimals = 3;

    void validate() const; // throws Usage
};

struct ArtifactEntry {
    std::string path; // relative to the output directory
    std::string kind; // tree | table | series | cache | report
    std::uint64_t bytes = 0;
    std::string sha256;
    bool complete = false;
};

struct Manifest {
    bool complete = false;
    std::string error; // empty when complete
    std::vector<ArtifactEntry> artifacts;

    std::string to_json() const;
};

/// Execute ingest -> rebase -> returns -> clip -> decompose and, per
/// (base, kind), the network build plus requested outputs. Every artifact
/// is written atomically and listed in manifest.json with its SHA-256;
/// identical input and config give byte-identical digests.
Manifest run_pipeline(const RunConfig& config);

/// Re-serialize a cache.json produced by run_pipeline into the requested
/// formats without recomputing anything.
Manifest export_cache(const std::string& cache_path,
                      const std::vector<std::string>& formats,
                      const std::string& out_dir);

} // namespace fxnet

#endif
