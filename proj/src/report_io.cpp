#include "grassmax/report_io.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace grassmax::reportio {

namespace {

std::string bool_cell(bool b) { return b ? "1" : "0"; }

bool parse_bool_cell(const std::string& s) {
  if (s == "1") return true;
  if (s == "0") return false;
  throw std::runtime_error("expected 0 or 1, got '" + s + "'");
}

BigRat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return BigRat(BigInt(s));
  return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace

std::string csv_header() { return "k,c1,c2,c3,d,e,qk_num,qk_den,qk_lt_1"; }

std::string csv_row(const counting::CountReport& rep) {
  std::ostringstream out;
  out << rep.k << ',' << rep.c1 << ',' << rep.c2 << ',' << rep.c3 << ',' << rep.d << ','
      << rep.e << ',' << boost::multiprecision::numerator(rep.qk) << ','
      << boost::multiprecision::denominator(rep.qk) << ',' << bool_cell(rep.qk_lt_1);
  return out.str();
}

counting::CountReport from_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (cells.size() != 9) {
    throw std::runtime_error("expected 9 CSV cells, got " + std::to_string(cells.size()));
  }
  counting::CountReport rep;
  rep.k = std::stol(cells[0]);
  rep.c1 = BigInt(cells[1]);
  rep.c2 = BigInt(cells[2]);
  rep.c3 = BigInt(cells[3]);
  rep.d = BigInt(cells[4]);
  rep.e = BigInt(cells[5]);
  rep.qk = BigRat(BigInt(cells[6]), BigInt(cells[7]));
  rep.qk_lt_1 = parse_bool_cell(cells[8]);
  return rep;
}

nlohmann::json to_json(const counting::CountReport& rep) {
  return nlohmann::json{
      {"k", rep.k},
      {"c1", rep.c1.str()},
      {"c2", rep.c2.str()},
      {"c3", rep.c3.str()},
      {"d", rep.d.str()},
      {"e", rep.e.str()},
      {"qk", rat_str(rep.qk)},
      {"qk_lt_1", rep.qk_lt_1},
      {"zero_binomial_term", rep.zero_binomial_term},
      {"routes_agree", rep.routes_agree},
      {"e_integral", rep.e_integral},
      {"c3_closed_form", rep.c3_closed_form},
      {"dim_translation", rep.dim_translation},
  };
}

counting::CountReport from_json(const nlohmann::json& j) {
  counting::CountReport rep;
  rep.k = j.at("k").get<long>();
  rep.c1 = BigInt(j.at("c1").get<std::string>());
  rep.c2 = BigInt(j.at("c2").get<std::string>());
  rep.c3 = BigInt(j.at("c3").get<std::string>());
  rep.d = BigInt(j.at("d").get<std::string>());
  rep.e = BigInt(j.at("e").get<std::string>());
  rep.qk = parse_rat(j.at("qk").get<std::string>());
  rep.qk_lt_1 = j.at("qk_lt_1").get<bool>();
  rep.zero_binomial_term = j.at("zero_binomial_term").get<bool>();
  rep.routes_agree = j.at("routes_agree").get<bool>();
  rep.e_integral = j.at("e_integral").get<bool>();
  rep.c3_closed_form = j.at("c3_closed_form").get<bool>();
  rep.dim_translation = j.at("dim_translation").get<bool>();
  return rep;
}

std::string render_text(const counting::CountReport& rep) {
  std::ostringstream out;
  out << "k=" << rep.k << " c1=" << rep.c1 << " c2=" << rep.c2 << " c3=" << rep.c3
      << " d=" << rep.d << " e=" << rep.e << " qk=" << rat_str(rep.qk)
      << " qk<1=" << (rep.qk_lt_1 ? "yes" : "no")
      << (rep.zero_binomial_term ? " (zero binomial term)" : "");
  return out.str();
}

}  // namespace grassmax::reportio
