#include "orddiv/export.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace orddiv::census {
namespace {

constexpr int kPlaces = 8;

u64 parse_u64(std::string_view text) {
  u64 value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("expected an unsigned integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view row, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = row.find(sep, pos);
    out.push_back(row.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

void check_rendering(const CensusSummary& s, std::string_view ratio, std::string_view abs_error) {
  if (s.ratio().to_decimal(kPlaces) != ratio || s.abs_error().to_decimal(kPlaces) != abs_error) {
    throw std::invalid_argument("census row: decimal columns disagree with the counts");
  }
}

}  // namespace

ExactRational CensusSummary::ratio() const {
  if (considered == 0) {
    return ExactRational(0);
  }
  return ExactRational(BigInt(counted), BigInt(considered));
}

CensusSummary summarize(const CensusConfig& config, const CensusResult& result, const ExactRational& delta) {
  return {config.g, config.d, config.x_limit, result.counted, result.considered, delta};
}

std::string csv_header() { return "g,d,x,counted,considered,ratio,delta_exact,abs_error"; }

std::string to_csv_row(const CensusSummary& s) {
  return s.g.to_string() + "," + std::to_string(s.d) + "," + std::to_string(s.x) + "," + std::to_string(s.counted) +
         "," + std::to_string(s.considered) + "," + s.ratio().to_decimal(kPlaces) + "," + s.delta_exact.to_string() +
         "," + s.abs_error().to_decimal(kPlaces);
}

CensusSummary parse_csv_row(std::string_view row) {
  if (!row.empty() && row.back() == '\r') {
    row.remove_suffix(1);
  }
  const auto cells = split(row, ',');
  if (cells.size() != 8) {
    throw std::invalid_argument("census row: expected 8 columns, got " + std::to_string(cells.size()));
  }
  CensusSummary s{RationalBase::parse(cells[0]), parse_u64(cells[1]), parse_u64(cells[2]), parse_u64(cells[3]),
                  parse_u64(cells[4]), ExactRational::parse(cells[6])};
  check_rendering(s, cells[5], cells[7]);
  return s;
}

std::string to_json(const CensusSummary& s) {
  nlohmann::ordered_json j = {
      {"g", s.g.to_string()},
      {"d", s.d},
      {"x", s.x},
      {"counted", s.counted},
      {"considered", s.considered},
      {"ratio", s.ratio().to_decimal(kPlaces)},
      {"ratio_exact", s.ratio().to_string()},
      {"delta_exact", s.delta_exact.to_string()},
      {"abs_error", s.abs_error().to_decimal(kPlaces)},
  };
  return j.dump();
}

CensusSummary summary_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    CensusSummary s{RationalBase::parse(j.at("g").get<std::string>()),
                    j.at("d").get<u64>(),
                    j.at("x").get<u64>(),
                    j.at("counted").get<u64>(),
                    j.at("considered").get<u64>(),
                    ExactRational::parse(j.at("delta_exact").get<std::string>())};
    check_rendering(s, j.at("ratio").get<std::string>(), j.at("abs_error").get<std::string>());
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("census json: ") + e.what());
  }
}

}  // namespace orddiv::census
