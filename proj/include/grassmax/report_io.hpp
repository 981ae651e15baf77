#ifndef GRASSMAX_REPORT_IO_HPP
#define GRASSMAX_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "grassmax/counting.hpp"

namespace grassmax::reportio {

// CSV column order: k,c1,c2,c3,d,e,qk_num,qk_den,qk_lt_1 (booleans as 0/1).
std::string csv_header();
std::string csv_row(const counting::CountReport& rep);
counting::CountReport from_csv_row(const std::string& line);

// JSON carries the same fields plus the per-identity booleans; big integers
// are serialized as decimal strings, qk as "num/den".
nlohmann::json to_json(const counting::CountReport& rep);
counting::CountReport from_json(const nlohmann::json& j);

// Human-oriented one-report block.
std::string render_text(const counting::CountReport& rep);

}  // namespace grassmax::reportio

#endif
