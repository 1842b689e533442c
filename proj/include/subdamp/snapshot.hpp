#pragma once

#include <map>
#include <string>
#include <vector>

#include "subdamp/config.hpp"
#include "subdamp/grid.hpp"

namespace subdamp {

/** Metadata carried in snapshot/series headers. */
struct FileMeta {
  std::string model;
  std::string config_hash;
};

/** Text snapshot format: '#' header lines "key = value" (time, topology,
 * n_cells, origin, length, model, config), then rows "x,value" (real) or
 * "x,re,im" (complex), all numerics with 17 significant digits.
 */
void write_snapshot(const std::string& path, const RealField& field,
                    const FileMeta& meta = {});
void write_snapshot(const std::string& path, const ComplexField& field,
                    const FileMeta& meta = {});
RealField read_snapshot(const std::string& path);
ComplexField read_snapshot_complex(const std::string& path);

struct Series {
  std::vector<double> t;
  std::vector<double> v;
};

/** Time-series format: '#' header lines (name, model, config), rows "t,value". */
void write_series(const std::string& path, const std::string& name,
                  const Series& series, const FileMeta& meta = {});
Series read_series(const std::string& path);

/** In-memory result of a run: config echo, diagnostics series, snapshots.
 * Real models fill `snapshots`; the wave model also fills
 * `velocity_snapshots`; nls fills `complex_snapshots`.
 */
struct RunRecord {
  RunConfig config;
  std::map<std::string, Series> series;
  std::vector<RealField> snapshots;
  std::vector<RealField> velocity_snapshots;
  std::vector<ComplexField> complex_snapshots;
};

/** Write manifest + series + snapshots under dir (created if needed). */
void write_record(const std::string& dir, const RunRecord& record);

/** Load a record directory written by write_record. */
RunRecord load_record(const std::string& dir);

}  // namespace subdamp
