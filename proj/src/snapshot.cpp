#include "subdamp/snapshot.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "subdamp/numerics.hpp"

namespace subdamp {

namespace {

namespace fs = std::filesystem;

struct ParsedHeader {
  std::map<std::string, std::string> keys;
  std::vector<std::string> rows;  // non-header lines, in order
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

ParsedHeader parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  ParsedHeader out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string::npos) continue;  // free-form comment
      out.keys[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
      continue;
    }
    out.rows.push_back(line);
  }
  return out;
}

std::vector<double> split_row(const std::string& path, std::size_t row_index,
                              const std::string& row, std::size_t n_cols) {
  std::vector<double> vals;
  std::stringstream ss(row);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      vals.push_back(parse_double_strict(trim(tok)));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + " row " + std::to_string(row_index + 1) +
                               ": " + e.what());
    }
  }
  if (vals.size() != n_cols)
    throw std::runtime_error(path + " row " + std::to_string(row_index + 1) +
                             ": expected " + std::to_string(n_cols) +
                             " columns, got " + std::to_string(vals.size()));
  return vals;
}

double header_double(const ParsedHeader& h, const std::string& path,
                     const std::string& key) {
  auto it = h.keys.find(key);
  if (it == h.keys.end())
    throw std::runtime_error(path + ": missing header key '" + key + "'");
  return parse_double_strict(it->second);
}

Grid1D header_grid(const ParsedHeader& h, const std::string& path) {
  const auto topo_it = h.keys.find("topology");
  if (topo_it == h.keys.end())
    throw std::runtime_error(path + ": missing header key 'topology'");
  Topology topo;
  if (topo_it->second == "periodic") topo = Topology::periodic;
  else if (topo_it->second == "dirichlet") topo = Topology::dirichlet;
  else throw std::runtime_error(path + ": bad topology '" + topo_it->second + "'");
  const double n = header_double(h, path, "n_cells");
  return make_grid(static_cast<std::size_t>(n),
                   header_double(h, path, "length"),
                   header_double(h, path, "origin"), topo);
}

void write_field_header(std::ofstream& out, const Grid1D& grid, double time,
                        const FileMeta& meta) {
  out << "# time = " << format_g17(time) << "\n";
  out << "# topology = "
      << (grid.topology == Topology::periodic ? "periodic" : "dirichlet")
      << "\n";
  out << "# n_cells = " << grid.n_cells << "\n";
  out << "# origin = " << format_g17(grid.origin) << "\n";
  out << "# length = " << format_g17(grid.length) << "\n";
  if (!meta.model.empty()) out << "# model = " << meta.model << "\n";
  if (!meta.config_hash.empty()) out << "# config = " << meta.config_hash << "\n";
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  return out;
}

}  // namespace

void write_snapshot(const std::string& path, const RealField& field,
                    const FileMeta& meta) {
  std::ofstream out = open_out(path);
  write_field_header(out, field.grid, field.time, meta);
  for (std::size_t j = 0; j < field.values.size(); ++j)
    out << format_g17(field.grid.coord(j)) << "," << format_g17(field.values[j])
        << "\n";
}

void write_snapshot(const std::string& path, const ComplexField& field,
                    const FileMeta& meta) {
  std::ofstream out = open_out(path);
  write_field_header(out, field.grid, field.time, meta);
  for (std::size_t j = 0; j < field.values.size(); ++j)
    out << format_g17(field.grid.coord(j)) << ","
        << format_g17(field.values[j].real()) << ","
        << format_g17(field.values[j].imag()) << "\n";
}

RealField read_snapshot(const std::string& path) {
  const ParsedHeader h = parse_file(path);
  RealField field;
  field.grid = header_grid(h, path);
  field.time = header_double(h, path, "time");
  if (h.rows.size() != field.grid.n_values())
    throw std::runtime_error(path + ": expected " +
                             std::to_string(field.grid.n_values()) +
                             " rows, got " + std::to_string(h.rows.size()));
  field.values.reserve(h.rows.size());
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    field.values.push_back(split_row(path, i, h.rows[i], 2)[1]);
  return field;
}

ComplexField read_snapshot_complex(const std::string& path) {
  const ParsedHeader h = parse_file(path);
  ComplexField field;
  field.grid = header_grid(h, path);
  field.time = header_double(h, path, "time");
  if (h.rows.size() != field.grid.n_values())
    throw std::runtime_error(path + ": expected " +
                             std::to_string(field.grid.n_values()) +
                             " rows, got " + std::to_string(h.rows.size()));
  field.values.reserve(h.rows.size());
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    const auto vals = split_row(path, i, h.rows[i], 3);
    field.values.emplace_back(vals[1], vals[2]);
  }
  return field;
}

void write_series(const std::string& path, const std::string& name,
                  const Series& series, const FileMeta& meta) {
  if (series.t.size() != series.v.size())
    throw std::invalid_argument("write_series: length mismatch");
  std::ofstream out = open_out(path);
  out << "# name = " << name << "\n";
  if (!meta.model.empty()) out << "# model = " << meta.model << "\n";
  if (!meta.config_hash.empty()) out << "# config = " << meta.config_hash << "\n";
  for (std::size_t i = 0; i < series.t.size(); ++i)
    out << format_g17(series.t[i]) << "," << format_g17(series.v[i]) << "\n";
}

Series read_series(const std::string& path) {
  const ParsedHeader h = parse_file(path);
  Series s;
  s.t.reserve(h.rows.size());
  s.v.reserve(h.rows.size());
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    const auto vals = split_row(path, i, h.rows[i], 2);
    s.t.push_back(vals[0]);
    s.v.push_back(vals[1]);
  }
  return s;
}

void write_record(const std::string& dir, const RunRecord& record) {
  fs::create_directories(dir);
  const std::string hash = config_hash(record.config);
  FileMeta meta;
  switch (record.config.model) {
    case Model::conservation: meta.model = "conservation"; break;
    case Model::viscous: meta.model = "viscous"; break;
    case Model::wave: meta.model = "wave"; break;
    case Model::nls: meta.model = "nls"; break;
  }
  meta.config_hash = hash;

  {
    std::ofstream out = open_out(dir + "/manifest.txt");
    out << "# config.hash = " << hash << "\n";
    out << serialize_config(record.config);
  }
  for (const auto& [name, series] : record.series)
    write_series(dir + "/series_" + name + ".csv", name, series, meta);

  char buf[32];
  for (std::size_t i = 0; i < record.snapshots.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "snapshot_%06zu.csv", i);
    write_snapshot(dir + "/" + buf, record.snapshots[i], meta);
  }
  for (std::size_t i = 0; i < record.velocity_snapshots.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "velocity_%06zu.csv", i);
    write_snapshot(dir + "/" + buf, record.velocity_snapshots[i], meta);
  }
  for (std::size_t i = 0; i < record.complex_snapshots.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "snapshot_%06zu.csv", i);
    write_snapshot(dir + "/" + buf, record.complex_snapshots[i], meta);
  }
}

RunRecord load_record(const std::string& dir) {
  RunRecord record;
  {
    std::ifstream in(dir + "/manifest.txt");
    if (!in) throw std::runtime_error("cannot open manifest: " + dir);
    std::stringstream buf;
    buf << in.rdbuf();
    record.config = parse_config(buf.str());
  }
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  const bool complex_model = record.config.model == Model::nls;
  for (const auto& p : paths) {
    const std::string name = p.filename().string();
    if (name.rfind("series_", 0) == 0 && p.extension() == ".csv") {
      const std::string key = name.substr(7, name.size() - 11);
      record.series[key] = read_series(p.string());
    } else if (name.rfind("snapshot_", 0) == 0) {
      if (complex_model)
        record.complex_snapshots.push_back(read_snapshot_complex(p.string()));
      else
        record.snapshots.push_back(read_snapshot(p.string()));
    } else if (name.rfind("velocity_", 0) == 0) {
      record.velocity_snapshots.push_back(read_snapshot(p.string()));
    }
  }
  return record;
}

}  // namespace subdamp
