#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "grassmax/report_io.hpp"

using namespace grassmax;
using grassmax::counting::CountReport;

TEST_CASE("csv rows round-trip") {
  CHECK(reportio::csv_header() == "k,c1,c2,c3,d,e,qk_num,qk_den,qk_lt_1");
  for (long k = 1; k <= 12; ++k) {
    const CountReport rep = counting::count_report(k);
    const std::string row = reportio::csv_row(rep);
    const CountReport back = reportio::from_csv_row(row);
    CHECK(back.k == rep.k);
    CHECK(back.c1 == rep.c1);
    CHECK(back.c2 == rep.c2);
    CHECK(back.c3 == rep.c3);
    CHECK(back.d == rep.d);
    CHECK(back.e == rep.e);
    CHECK(back.qk == rep.qk);
    CHECK(back.qk_lt_1 == rep.qk_lt_1);
    CHECK(reportio::csv_row(back) == row);
  }
}

TEST_CASE("csv golden row for k = 2") {
  const std::string row = reportio::csv_row(counting::count_report(2));
  CHECK(row == "2,1590,15781,14893,17371,17875,4033,4096,1");
}

TEST_CASE("json documents round-trip with all flags") {
  for (long k = 1; k <= 12; ++k) {
    const CountReport rep = counting::count_report(k);
    const nlohmann::json doc = reportio::to_json(rep);
    CHECK(doc.at("qk").get<std::string>().find('/') != std::string::npos);
    const CountReport back = reportio::from_json(doc);
    CHECK(back == rep);
  }
}

TEST_CASE("json golden fields for k = 2") {
  const nlohmann::json doc = reportio::to_json(counting::count_report(2));
  CHECK(doc.at("k") == 2);
  CHECK(doc.at("c1") == "1590");
  CHECK(doc.at("qk") == "4033/4096");
  CHECK(doc.at("qk_lt_1") == true);
  CHECK(doc.at("zero_binomial_term") == false);
  CHECK(doc.at("routes_agree") == true);
  CHECK(doc.at("e_integral") == true);
  CHECK(doc.at("c3_closed_form") == true);
  CHECK(doc.at("dim_translation") == true);
}

TEST_CASE("text rendering") {
  const std::string line = reportio::render_text(counting::count_report(2));
  CHECK(line.find("k=2") != std::string::npos);
  CHECK(line.find("qk=4033/4096") != std::string::npos);
  CHECK(line.find("qk<1=yes") != std::string::npos);
  const std::string first = reportio::render_text(counting::count_report(1));
  CHECK(first.find("zero binomial term") != std::string::npos);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(reportio::from_csv_row("1,2,3"));
  CHECK_THROWS(reportio::from_csv_row("x,1,1,1,1,1,1,1,1"));
  CHECK_THROWS(reportio::from_csv_row("1,1,1,1,1,1,1,1,maybe"));
  nlohmann::json doc = reportio::to_json(counting::count_report(1));
  doc.erase("c3");
  CHECK_THROWS(reportio::from_json(doc));
}
