/*
 * Copyright 2026 The meshscramble Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "meshscramble/cli.hpp"
#include "meshscramble/codec.hpp"
#include "meshscramble/error.hpp"
#include "meshscramble/lane_engine.hpp"
#include "meshscramble/mesh_sim.hpp"
#include "meshscramble/randomness.hpp"
#include "meshscramble/scramble_perm.hpp"
#include "meshscramble/verify.hpp"

namespace meshscramble::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::uint32_t order = 4;
  std::uint32_t from = 2;
  std::uint32_t to = 1000;
  std::uint32_t iterations = 1;
  std::uint32_t bucket = 100;
  std::size_t max_k = 100;
  std::string format = "text";
  std::string map = "even1";
  std::string in_path;
  std::string out_path;
  std::string a_path;
  std::string b_path;
  std::string x_path;
  std::string trace_path;
  std::string report_path;
  bool real = false;
  std::uint64_t seed = VerifyOptions{}.seed;
  unsigned threads = 0;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MeshError(ErrorCode::kIo, path + ": cannot open for reading");
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw MeshError(ErrorCode::kIo, path + ": read failed");
  return data;
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw MeshError(ErrorCode::kIo, path + ": cannot open for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw MeshError(ErrorCode::kIo, path + ": write failed");
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

// Writes to --out when given, else to stdout.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    write_file(cfg.out_path, text);
  }
}

std::string label_text(std::uint32_t order, const Label& l) {
  return order < 10 ? std::to_string(l.i) + std::to_string(l.j)
                    : std::to_string(l.i) + "," + std::to_string(l.j);
}

std::string cmd_arrangement(const RunConfig& cfg) {
  const OutputArrangement grid = arrangement(cfg.order);
  const std::uint32_t n = grid.order();
  std::ostringstream out;
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::uint32_t r = 1; r <= n; ++r) {
      json row = json::array();
      for (const Label& l : grid.row(r)) row.push_back({l.i, l.j});
      rows.push_back(std::move(row));
    }
    out << json{{"order", n}, {"grid", std::move(rows)}}.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "row,col,i,j\n";
    for (std::uint32_t r = 1; r <= n; ++r) {
      for (std::uint32_t c = 1; c <= n; ++c) {
        const Label& l = grid.at(r, c);
        out << r << ',' << c << ',' << l.i << ',' << l.j << '\n';
      }
    }
  } else {
    for (std::uint32_t r = 1; r <= n; ++r) {
      for (std::uint32_t c = 1; c <= n; ++c) {
        if (c > 1) out << ' ';
        out << label_text(n, grid.at(r, c));
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string cmd_cycles(const RunConfig& cfg) {
  const CycleDecomposition d = cycles(scrambling_permutation(cfg.order));
  std::ostringstream out;
  if (cfg.format == "json") {
    json list = json::array();
    for (const auto& cycle : d.cycles) {
      json members = json::array();
      for (std::uint32_t p : cycle) {
        const Label l = label_of(d.order, p);
        members.push_back({l.i, l.j});
      }
      list.push_back(std::move(members));
    }
    out << json{{"order", d.order},
                {"cycles", std::move(list)},
                {"lengths", d.lengths},
                {"longest", d.longest},
                {"period", d.period.str()}}
               .dump()
        << '\n';
  } else {
    out << format_cycles(d) << '\n';
    out << "lengths:";
    for (auto len : d.lengths) out << ' ' << len;
    out << "\nlongest: " << d.longest << "\nperiod: " << d.period.str() << '\n';
  }
  return out.str();
}

std::string cmd_table(const RunConfig& cfg) {
  const auto lengths = longest_cycle_lengths(cfg.from, cfg.to, cfg.threads);
  std::ostringstream out;
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t t = 0; t < lengths.size(); ++t) {
      rows.push_back({{"order", cfg.from + t}, {"longest_cycle", lengths[t]}});
    }
    out << rows.dump() << '\n';
  } else {
    const char sep = cfg.format == "csv" ? ',' : '\t';
    out << "order" << sep << "longest_cycle\n";
    for (std::size_t t = 0; t < lengths.size(); ++t) out << cfg.from + t << sep << lengths[t] << '\n';
  }
  return out.str();
}

ParityMapping parse_mapping(const std::string& name) {
  return name == "odd1" ? ParityMapping::kOddIsOne : ParityMapping::kEvenIsOne;
}

std::string cmd_bits(const RunConfig& cfg) {
  const ParitySequence seq = parity_bits(cfg.from, cfg.to, parse_mapping(cfg.map), cfg.threads);
  std::string out;
  out.reserve(seq.bits.size() + 1);
  for (auto bit : seq.bits) out += bit ? '1' : '0';
  out += '\n';
  return out;
}

std::string cmd_autocorr(const RunConfig& cfg) {
  const PolarSequence seq = polar(parity_bits(cfg.from, cfg.to, parse_mapping(cfg.map), cfg.threads));
  std::string out = "k,C\n";
  for (const auto& [k, value] : autocorrelation_series(seq, cfg.max_k)) {
    out += std::to_string(k) + "," + format_fixed6(value) + "\n";
  }
  return out;
}

std::string pad3(std::uint32_t v) {
  std::string s = std::to_string(v);
  return s.size() < 3 ? std::string(3 - s.size(), '0') + s : s;
}

std::string cmd_primes(const RunConfig& cfg) {
  const PrimeBuckets buckets = prime_buckets(cfg.from, cfg.to, cfg.bucket, cfg.threads);
  std::ostringstream out;
  if (cfg.format == "json") {
    json rows = json::array();
    for (const PrimeBucket& b : buckets.buckets) {
      rows.push_back({{"first", b.range_first},
                      {"last", b.range_last},
                      {"orders", b.orders_considered},
                      {"primes", b.prime_count}});
    }
    out << json{{"from", cfg.from}, {"to", cfg.to}, {"bucket_size", buckets.bucket_size}, {"buckets", rows}}.dump()
        << '\n';
  } else {
    for (const PrimeBucket& b : buckets.buckets) {
      out << pad3(b.range_first) << " - " << pad3(b.range_last) << " ---- " << b.prime_count << '\n';
    }
  }
  return out.str();
}

template <typename T>
Matrix<T> load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeshError(ErrorCode::kIo, path + ": cannot open for reading");
  in.imbue(std::locale::classic());
  return read_matrix<T>(in, path);
}

template <typename T>
std::string simulate_as(const RunConfig& cfg) {
  const Matrix<T> a = load_matrix<T>(cfg.a_path);
  const Matrix<T> b = load_matrix<T>(cfg.b_path);
  std::ostringstream out;
  if (cfg.x_path.empty()) {
    const auto result = simulate_product(a, b);
    write_matrix(out, result.c);
    out << "completion_time " << result.completion_time << '\n';
    if (!cfg.trace_path.empty()) write_file(cfg.trace_path, trace_csv(result.trace));
  } else {
    const Matrix<T> x = load_matrix<T>(cfg.x_path);
    const auto result = simulate_triple(a, x, b);
    write_matrix(out, result.y);
    out << "t_z_row1 " << result.milestones.z_row1 << '\n'
        << "t_y_row1_partials " << result.milestones.y_row1_partials << '\n'
        << "t_all " << result.milestones.all << '\n';
    if (!cfg.trace_path.empty()) write_file(cfg.trace_path, trace_csv(result.trace));
  }
  return out.str();
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions options;
  options.seed = cfg.seed;
  options.threads = cfg.threads;
  const VerifyReport report = verify(options);

  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    const char* status = c.passed ? "PASS" : (c.hard ? "FAIL" : "SOFT-MISMATCH");
    out << status << "  " << c.name << "  " << c.detail << '\n';
    checks.push_back({{"name", c.name}, {"hard", c.hard}, {"passed", c.passed}, {"detail", c.detail}});
  }
  const bool ok = report.hard_checks_passed();
  out << (ok ? "all hard checks passed" : "hard check failures") << '\n';
  if (!cfg.report_path.empty()) {
    const json doc{{"seed", report.seed}, {"passed", ok}, {"checks", std::move(checks)}};
    write_file(cfg.report_path, doc.dump(2) + "\n");
  }
  return ok ? 0 : 1;
}

}  // namespace

std::string format_fixed6(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
  std::string s(buf, res.ptr);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mesh array scrambling permutation toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--threads", cfg.threads, "worker threads for range computations (default: MESH_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  const auto order_opt = [&](CLI::App* sub, std::uint32_t min_order) {
    sub->add_option("--order,-n", cfg.order, "matrix order")->required()->check(CLI::Range(min_order, kMaxOrder));
  };
  const auto range_opts = [&](CLI::App* sub) {
    sub->add_option("--from", cfg.from, "first order")->capture_default_str();
    sub->add_option("--to", cfg.to, "last order")->capture_default_str();
  };
  const auto format_opt = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(choices))->capture_default_str();
  };

  auto* arrangement_cmd = app.add_subcommand("arrangement", "print the output arrangement grid");
  order_opt(arrangement_cmd, 1);
  format_opt(arrangement_cmd, {"text", "json", "csv"});

  auto* cycles_cmd = app.add_subcommand("cycles", "cycle decomposition of the scrambling permutation");
  order_opt(cycles_cmd, 1);
  format_opt(cycles_cmd, {"text", "json"});

  auto* period_cmd = app.add_subcommand("period", "lcm of the cycle lengths (exact)");
  order_opt(period_cmd, 1);

  auto* table_cmd = app.add_subcommand("table", "longest cycle per order");
  cfg.to = 1000;
  range_opts(table_cmd);
  format_opt(table_cmd, {"text", "csv", "json"});

  auto* scramble_cmd = app.add_subcommand("scramble", "scramble a file in n*n-byte blocks");
  auto* descramble_cmd = app.add_subcommand("descramble", "invert scramble");
  order_opt(scramble_cmd, 2);
  scramble_cmd->add_option("--iterations,-k", cfg.iterations, "applications per block")
      ->required()
      ->check(CLI::PositiveNumber);
  std::uint32_t expect_order = 0;
  std::uint32_t expect_iterations = 0;
  descramble_cmd->add_option("--order,-n", expect_order, "expected order (checked against the header)");
  descramble_cmd->add_option("--iterations,-k", expect_iterations, "expected iterations (checked against the header)");
  for (auto* sub : {scramble_cmd, descramble_cmd}) {
    sub->add_option("--in", cfg.in_path, "input file")->required();
    sub->add_option("--out", cfg.out_path, "output file")->required();
  }

  auto* bits_cmd = app.add_subcommand("bits", "parity bit sequence of longest cycles");
  range_opts(bits_cmd);
  auto* autocorr_cmd = app.add_subcommand("autocorr", "autocorrelation of the polar parity sequence (CSV)");
  range_opts(autocorr_cmd);
  autocorr_cmd->add_option("--max-k", cfg.max_k, "largest lag")->capture_default_str();
  autocorr_cmd->add_option("--out", cfg.out_path, "CSV output file (default stdout)");
  for (auto* sub : {bits_cmd, autocorr_cmd}) {
    sub->add_option("--map", cfg.map, "which parity maps to 1")
        ->check(CLI::IsMember({"even1", "odd1"}))
        ->capture_default_str();
  }

  auto* primes_cmd = app.add_subcommand("primes", "count prime longest cycles per order bucket");
  range_opts(primes_cmd);
  primes_cmd->add_option("--bucket", cfg.bucket, "bucket width in orders")->check(CLI::PositiveNumber);
  format_opt(primes_cmd, {"text", "json"});

  auto* simulate_cmd = app.add_subcommand("simulate", "run the mesh simulator on matrix files");
  simulate_cmd->add_option("--a", cfg.a_path, "first factor")->required();
  simulate_cmd->add_option("--b", cfg.b_path, "last factor")->required();
  simulate_cmd->add_option("--x", cfg.x_path, "middle factor; enables Y = AXB");
  simulate_cmd->add_option("--trace", cfg.trace_path, "write the event trace as CSV");
  simulate_cmd->add_flag("--real", cfg.real, "read real-valued entries instead of integers");

  auto* verify_cmd = app.add_subcommand("verify", "replay every reference check");
  verify_cmd->add_option("--report", cfg.report_path, "write a JSON report");
  verify_cmd->add_option("--seed", cfg.seed, "seed for the randomized simulator checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*arrangement_cmd) {
      out << cmd_arrangement(cfg);
    } else if (*cycles_cmd) {
      out << cmd_cycles(cfg);
    } else if (*period_cmd) {
      out << period_lcm(cfg.order).str() << '\n';
    } else if (*table_cmd) {
      out << cmd_table(cfg);
    } else if (*scramble_cmd) {
      const auto payload = read_file(cfg.in_path);
      write_file(cfg.out_path, codec::scramble_stream(cfg.order, cfg.iterations, payload));
    } else if (*descramble_cmd) {
      const auto file = read_file(cfg.in_path);
      const codec::Header header = codec::decode_header(file);
      if ((expect_order != 0 && expect_order != header.order) ||
          (expect_iterations != 0 && expect_iterations != header.iterations)) {
        throw MeshError(ErrorCode::kHeaderPayloadMismatch,
                        cfg.in_path + ": header records order " + std::to_string(header.order) +
                            ", iterations " + std::to_string(header.iterations));
      }
      write_file(cfg.out_path, codec::descramble_stream(file));
    } else if (*bits_cmd) {
      out << cmd_bits(cfg);
    } else if (*autocorr_cmd) {
      emit(cfg, out, cmd_autocorr(cfg));
    } else if (*primes_cmd) {
      out << cmd_primes(cfg);
    } else if (*simulate_cmd) {
      out << (cfg.real ? simulate_as<double>(cfg) : simulate_as<std::int64_t>(cfg));
    } else if (*verify_cmd) {
      return cmd_verify(cfg, out);
    }
  } catch (const MeshError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace meshscramble::cli
