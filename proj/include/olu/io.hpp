#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "olu/driver.hpp"
#include "olu/learner.hpp"
#include "olu/regret.hpp"
#include "olu/rng.hpp"
#include "olu/stream.hpp"
#include "olu/version.hpp"

namespace olu {

// Shortest round-trip decimal form. CSV consumers get back the exact double.
inline std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  double parsed = 0.0;
  std::sscanf(buf, "%lg", &parsed);
  if (parsed == x) {
    // try shorter forms while they still round-trip
    for (int prec = 1; prec <= 16; ++prec) {
      char shorter[40];
      std::snprintf(shorter, sizeof(shorter), "%.*g", prec, x);
      std::sscanf(shorter, "%lg", &parsed);
      if (parsed == x) return shorter;
    }
  }
  return buf;
}

inline void write_file(const std::filesystem::path& path,
                       const std::string& bytes) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out.write(bytes.data(), std::streamsize(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::uint64_t file_hash(const std::filesystem::path& path) {
  return fnv1a64(read_file(path));
}

// -- CSV schemas (version tag on the first comment line; consumers must
//    tolerate added columns) --------------------------------------------

inline std::string sequence_csv(const LossSequence& losses,
                                const ComparatorSequence* comparators) {
  std::ostringstream out;
  out << "# schema: olu.sequence v1\n";
  const int d = losses.dim();
  out << "t";
  for (int i = 0; i < d; ++i) out << ",v" << i;
  if (comparators) {
    for (int i = 0; i < d; ++i) out << ",u" << i;
  }
  out << "\n";
  for (long t = 0; t < losses.horizon(); ++t) {
    out << (t + 1);
    for (int i = 0; i < d; ++i) out << ',' << fmt_double(losses.values[t][i]);
    if (comparators) {
      for (int i = 0; i < d; ++i) {
        out << ',' << fmt_double(comparators->values[t][i]);
      }
    }
    out << "\n";
  }
  return out.str();
}

inline std::string ledger_csv(const RegretLedger& ledger) {
  std::ostringstream out;
  out << "# schema: olu.ledger v1\n";
  out << "t,v,play,comparator\n";
  for (long t = 0; t < ledger.horizon(); ++t) {
    out << (t + 1) << ',' << fmt_double(ledger.losses[t]) << ','
        << fmt_double(ledger.plays[t]) << ','
        << fmt_double(ledger.comparators[t]) << "\n";
  }
  return out.str();
}

inline nlohmann::json sequence_manifest_json(std::uint64_t seed, int d, long T,
                                             const std::string& generator) {
  return {{"seed", seed}, {"d", d}, {"T", T}, {"generator", generator}};
}

inline std::string trajectory_csv(const Trajectory& traj) {
  if (!traj.full_record) {
    throw std::invalid_argument("trajectory was run in streaming mode");
  }
  std::ostringstream out;
  out << "# schema: olu.trajectory v1\n";
  out << "t";
  for (int i = 0; i < traj.d; ++i) out << ",w" << i;
  for (int i = 0; i < traj.d; ++i) out << ",delta" << i;
  for (int i = 0; i < traj.d; ++i) out << ",g" << i;
  out << ",s,F\n";
  auto f_at = [&](long t) -> std::string {
    for (const auto& [step, f] : traj.f_evals) {
      if (step == t) return fmt_double(f);
    }
    return "";
  };
  for (long t = 1; t <= traj.T; ++t) {
    out << t;
    for (int i = 0; i < traj.d; ++i) {
      out << ',' << fmt_double(traj.iterates[std::size_t(t)][i]);
    }
    for (int i = 0; i < traj.d; ++i) {
      out << ',' << fmt_double(traj.updates[std::size_t(t - 1)][i]);
    }
    for (int i = 0; i < traj.d; ++i) {
      out << ',' << fmt_double(traj.gradients[std::size_t(t - 1)][i]);
    }
    out << ',' << fmt_double(traj.s[std::size_t(t - 1)]) << ',' << f_at(t)
        << "\n";
  }
  return out.str();
}

inline nlohmann::json trajectory_summary_json(const Trajectory& traj,
                                              const std::string& learner,
                                              std::uint64_t seed,
                                              double final_f) {
  return {{"T", traj.T},         {"d", traj.d},
          {"learner", learner},  {"total_loss", traj.total_loss},
          {"final_F", final_f},  {"seed", seed}};
}

// {kind, alpha|gamma, eta, beta1, beta2, clipD} -> LearnerConfig. Unknown
// kinds and malformed fields throw invalid_argument.
inline LearnerConfig learner_config_from_json(const nlohmann::json& j) {
  LearnerConfig config;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "OGD") {
    config.kind = LearnerKind::ogd;
  } else if (kind == "NoMomentumSGD") {
    config.kind = LearnerKind::no_momentum_sgd;
  } else if (kind == "NoMomentumAdaGrad") {
    config.kind = LearnerKind::no_momentum_adagrad;
  } else if (kind == "ScaleFreeFTRL") {
    config.kind = LearnerKind::scale_free_ftrl;
  } else if (kind == "DiscountedFTRL") {
    config.kind = LearnerKind::discounted_ftrl;
  } else if (kind == "DiscountedFTRLClipped") {
    config.kind = LearnerKind::discounted_ftrl_clipped;
  } else {
    throw std::invalid_argument("unknown learner kind: " + kind);
  }
  if (j.contains("alpha")) config.alpha = j["alpha"].get<double>();
  if (j.contains("gamma")) config.gamma = j["gamma"].get<double>();
  if (j.contains("eta")) config.eta = j["eta"].get<double>();
  if (j.contains("beta1")) config.beta1 = j["beta1"].get<double>();
  if (j.contains("beta2")) config.beta2 = j["beta2"].get<double>();
  if (j.contains("clipD")) config.clip_d = j["clipD"].get<double>();
  if (j.contains("domain")) config.ogd_domain = j["domain"].get<double>();
  config.validate();
  return config;
}

struct BoundReport {
  std::string bound_name;
  double value = 0.0;
  double regret = 0.0;

  double slack() const { return value - regret; }

  nlohmann::json to_json() const {
    return {{"bound_name", bound_name},
            {"value", value},
            {"regret", regret},
            {"slack", slack()}};
  }
};

/// What a subcommand did: resolved config, seed, emitted files with content
/// hashes. Re-running the same command with the same seed must reproduce
/// every listed file byte for byte.
struct RunManifest {
  std::string command;
  nlohmann::json config;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::uint64_t>> artifacts;
  double duration_seconds = 0.0;

  void add_artifact(const std::filesystem::path& path) {
    artifacts.emplace_back(path.string(), file_hash(path));
  }

  nlohmann::json to_json() const {
    nlohmann::json files = nlohmann::json::array();
    for (const auto& [path, hash] : artifacts) {
      char hex[32];
      std::snprintf(hex, sizeof(hex), "%016llx", (unsigned long long)hash);
      files.push_back({{"path", path}, {"fnv1a64", hex}});
    }
    return {{"command", command},
            {"config", config},
            {"seed", seed},
            {"artifacts", files},
            {"duration_seconds", duration_seconds},
            {"version", kVersion}};
  }

  void save(const std::filesystem::path& path) const {
    write_file(path, to_json().dump(2) + "\n");
  }
};

}  // namespace olu
