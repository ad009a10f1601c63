#include "gsep/state_io.hpp"

#include <fstream>
#include <sstream>

#include "gsep/errors.hpp"
#include "json.hpp"

namespace gsep {

using nlohmann::json;

namespace {

std::vector<std::size_t> mode_list(const json& j, const char* side) {
  if (!j.is_array()) throw InvalidInput(std::string("partition.") + side + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0) {
      throw InvalidInput(std::string("partition.") + side + " entries must be non-negative integers");
    }
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

}  // namespace

StateDocument parse_state_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("state document must be a JSON object");

  if (!doc.contains("n_modes") || !doc["n_modes"].is_number_integer() ||
      doc["n_modes"].get<long long>() < 1) {
    throw InvalidInput("n_modes must be a positive integer");
  }
  const auto n = doc["n_modes"].get<std::size_t>();
  if (doc.contains("ordering") && doc["ordering"] != "xp-interleaved") {
    throw InvalidInput("unsupported ordering; expected \"xp-interleaved\"");
  }

  const std::size_t d = 2 * n;
  if (!doc.contains("matrix") || !doc["matrix"].is_array() || doc["matrix"].size() != d) {
    throw InvalidInput("matrix must be an array of " + std::to_string(d) + " rows");
  }
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& row = doc["matrix"][i];
    if (!row.is_array() || row.size() != d) {
      throw InvalidInput("matrix row " + std::to_string(i) + " must have " + std::to_string(d) +
                         " entries");
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (!row[j].is_number()) throw InvalidInput("matrix entries must be numbers");
      m(i, j) = row[j].get<double>();
    }
  }
  if (const double asym = max_asymmetry(m); asym > kMaxInputAsymmetry) {
    std::ostringstream msg;
    msg << "matrix is not symmetric (max asymmetry " << asym << ")";
    throw InvalidInput(msg.str());
  }

  std::optional<ModePartition> partition;
  if (doc.contains("partition")) {
    const auto& p = doc["partition"];
    if (!p.is_object() || !p.contains("A") || !p.contains("B")) {
      throw InvalidInput("partition must be an object with A and B");
    }
    try {
      partition.emplace(mode_list(p["A"], "A"), mode_list(p["B"], "B"));
    } catch (const IndexError& e) {
      throw InvalidInput(std::string("invalid partition: ") + e.what());
    }
    if (partition->n_modes() != n) throw InvalidInput("partition does not cover n_modes modes");
  }
  return {CovarianceMatrix(m), std::move(partition)};
}

StateDocument read_state_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_document(buf.str());
}

std::string dump_state_document(const StateDocument& doc) {
  const std::size_t d = doc.state.matrix().dim();
  json rows = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < d; ++j) row.push_back(doc.state(i, j));
    rows.push_back(std::move(row));
  }
  json out = {
      {"n_modes", doc.state.n_modes()},
      {"ordering", "xp-interleaved"},
      {"matrix", std::move(rows)},
  };
  if (doc.partition) {
    out["partition"] = {{"A", doc.partition->a()}, {"B", doc.partition->b()}};
  }
  return out.dump(2) + "\n";
}

void write_state_document(const std::filesystem::path& path, const StateDocument& doc) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << dump_state_document(doc);
}

}  // namespace gsep
