#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seshadri/curve_search.hpp"
#include "seshadri/cxc_engine.hpp"
#include "seshadri/exact_arith.hpp"

namespace seshadri::cli {

enum class Format { Plain, Json, Csv };

/// One result line on stdout. Numbers are exact strings ("p/q"), surds are
/// {"sqrt_of": "p/q"}; nothing is ever a float.
struct OutputRecord {
  std::string command;
  std::map<std::string, std::string> inputs;
  nlohmann::json result;
  bool ok = true;
  std::optional<std::string> message;

  nlohmann::json to_json() const;
};

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const SqrtQuantity& s);
/// JSON integer when it fits in 64 bits, decimal string otherwise.
nlohmann::json integer_json(const BigInt& n);
nlohmann::json to_json(const RationalityVerdict& verdict);
nlohmann::json to_json(const SearchReport& report);

/// Column order of scan-rationality CSV output.
inline constexpr const char* kScanCsvHeader =
    "g,a1,a2,a3,cond1,cond2,cond3,cond4,cond5,k,l,submaximal_fiber,L2";

/// Runs the command line `args` (without the program name). Records go to
/// `out`, diagnostics to `err`. Returns 0 on success, 2 on invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seshadri::cli
