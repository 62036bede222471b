#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "bohrlab/cli.hpp"
#include "bohrlab/radius.hpp"

using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = bohrlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto o = run(std::move(args));
  REQUIRE(o.code == 0);
  return Json::parse(o.out);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<double> column(const std::string& csv, std::size_t index) {
  std::vector<double> out;
  const auto rows = lines(csv);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream cells(rows[i]);
    std::string cell;
    for (std::size_t k = 0; k <= index; ++k) std::getline(cells, cell, ',');
    out.push_back(std::stod(cell));
  }
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("radius examples") {
    const auto rs = run_json({"radius", "--name", "rstar", "--tol", "1e-12"});
    CHECK(rs["schema_version"] == "1");
    CHECK(rs["command"] == "radius");
    CHECK(std::abs(rs["result"]["value"].get<double>() - 0.24683) <= 5e-6);
    CHECK(rs["result"].contains("residual"));
    CHECK(rs["result"].contains("bracket_lo"));
    CHECK(rs["result"].contains("iterations"));
    CHECK(rs["inputs"]["name"] == "rstar");

    const auto refined = run_json({"radius", "--name", "refined", "--a0", "0"});
    CHECK(refined["result"]["value"].get<double>() == 0.5);
    CHECK(refined["result"]["residual"].get<double>() == 0.0);

    const double r0 = run_json({"radius", "--name", "r0", "--a0", "0.5"})["result"]["value"].get<double>();
    CHECK(r0 > 0.24683);
    CHECK(r0 < 0.33334);

    const auto rg = run_json({"radius", "--name", "rg"});
    CHECK(std::abs(rg["result"]["value"].get<double>() - 0.128445) <= 5e-7);
    CHECK(run_json({"radius", "--name", "classical"})["result"]["value"].get<double>() == 1.0 / 3.0);
    CHECK(run_json({"radius", "--name", "pfamily", "--a0", "0", "--p", "1.5"})["result"]["value"].get<double>() ==
          0.5);
  }

  TEST_CASE("radius usage errors exit 2") {
    CHECK(run({"radius", "--name", "refined"}).code == 2);
    CHECK(run({"radius", "--name", "pfamily", "--a0", "0.5"}).code == 2);
    CHECK(run({"radius", "--name", "r0"}).code == 2);
    CHECK(run({"radius", "--name", "bogus"}).code == 2);
    CHECK(run({"radius", "--name", "refined", "--a0", "1.5"}).code == 2);
    CHECK(run({"radius", "--name", "rstar", "--tol", "0"}).code == 2);
    CHECK(run({"radius", "--name", "rstar", "--unknown", "1"}).code == 2);
    CHECK(run({"radius", "--name", "r0", "--a0", "abc"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const auto bad = run({"radius", "--name", "refined"});
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());
  }

  TEST_CASE("sweep examples") {
    const auto r0 = run({"sweep", "--target", "r0", "--from", "0.01", "--to", "0.99", "--steps", "25"});
    REQUIRE(r0.code == 0);
    CHECK(lines(r0.out).front() == "param,value");
    const auto values = column(r0.out, 1);
    CHECK(values.size() == 25);
    // r0 increases with a0 (Phi decreases in lambda = 1 - a0).
    for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i] > values[i - 1]);

    const auto pf = run({"sweep", "--target", "pfamily", "--from", "0.01", "--to", "0.99", "--steps", "10", "--p", "1"});
    const auto pv = column(pf.out, 1);
    CHECK(pv.front() == doctest::Approx(1.0 / 2.01).epsilon(1e-15));
    CHECK(pv.back() == doctest::Approx(1.0 / 2.99).epsilon(1e-15));
    CHECK(std::abs(pv.front() - 0.497) < 1e-3);
    CHECK(std::abs(pv.back() - 0.334) < 1e-3);

    const auto two = run({"sweep", "--target", "pfamily", "--from", "0.1", "--to", "0.2", "--steps", "2"});
    CHECK(lines(two.out).size() == 3);
  }

  TEST_CASE("sweep witness_thmB has predicted and found columns") {
    const auto w = run({"sweep", "--target", "witness_thmB", "--from", "0.1", "--to", "0.9", "--steps", "5", "--p", "2"});
    REQUIRE(w.code == 0);
    CHECK(lines(w.out).front() == "param,value,predicted,found");
    const auto predicted = column(w.out, 2);
    const auto found = column(w.out, 3);
    for (std::size_t i = 0; i < found.size(); ++i) CHECK(std::abs(predicted[i] - found[i]) <= 1e-8);
  }

  TEST_CASE("sweep formats with 17 significant digits and LF") {
    const auto o = run({"sweep", "--target", "pfamily", "--from", "0.1", "--to", "0.3", "--steps", "3"});
    CHECK(o.out.find('\r') == std::string::npos);
    CHECK(lines(o.out)[1].rfind("0.10000000000000001,", 0) == 0);
  }

  TEST_CASE("sweep usage errors exit 2 without output") {
    CHECK(run({"sweep", "--target", "r0", "--from", "0.5", "--to", "0.4", "--steps", "3"}).code == 2);
    CHECK(run({"sweep", "--target", "r0", "--from", "0.1", "--to", "0.4", "--steps", "1"}).code == 2);
    const auto dom = run({"sweep", "--target", "r0", "--from", "0.0", "--to", "0.4", "--steps", "3"});
    CHECK(dom.code == 2);
    CHECK(dom.out.empty());
    CHECK(run({"sweep", "--target", "nope", "--from", "0.1", "--to", "0.4", "--steps", "3"}).code == 2);
    CHECK(run({"sweep", "--target", "r0", "--to", "0.4", "--steps", "3"}).code == 2);
  }

  TEST_CASE("verify examples") {
    const auto id = run({"verify", "--suite", "identities"});
    CHECK(id.code == 0);
    const auto idj = Json::parse(id.out);
    CHECK(idj["pass"] == true);
    CHECK(idj["result"]["checks"].size() > 0);

    const auto lemma = run({"verify", "--suite", "lemma1", "--trials", "200", "--seed", "42"});
    CHECK(lemma.code == 0);
    const auto lj = Json::parse(lemma.out);
    CHECK(lj["result"]["per_trial"].size() == 200);
    CHECK(lj["result"]["per_trial"][0].contains("worst_margin"));
    CHECK(lj["result"]["per_trial"][0].contains("max_tail"));
    CHECK(lj["result"]["violations"] == 0);

    const auto thmb = run({"verify", "--suite", "thmB", "--trials", "50"});
    CHECK(thmb.code == 0);
    CHECK(Json::parse(thmb.out)["inputs"]["trials"] == 50);
  }

  TEST_CASE("verify usage errors exit 2") {
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "--suite", "thmA", "--trials", "0"}).code == 2);
    CHECK(run({"verify", "--suite", "thmA", "--order", "2"}).code == 2);
    CHECK(run({"verify", "--suite", "thmA", "--seed", "-1"}).code == 2);
  }

  TEST_CASE("witness examples") {
    const auto t3 = run_json({"witness", "--theorem", "thm3"});
    CHECK(std::abs(t3["result"]["threshold_found"].get<double>() - 0.128445) <= 5e-7);
    CHECK(t3["pass"] == true);

    const auto tb = run_json({"witness", "--theorem", "thmB", "--a", "0.9", "--p", "1"});
    CHECK(std::abs(tb["result"]["threshold_found"].get<double>() - 1.0 / 2.9) <= 1e-9);
    CHECK(tb["result"].contains("difference"));

    // a0 -> 1 sends the threshold to 1/3; r* is the a0 -> 0 limit.
    const auto t1 = run_json({"witness", "--theorem", "thm1", "--a0", "0.99"});
    CHECK(std::abs(t1["result"]["threshold_found"].get<double>() - 1.0 / 3.0) <= 2e-3);
    const auto t1_low = run_json({"witness", "--theorem", "thm1", "--a0", "0.001"});
    CHECK(std::abs(t1_low["result"]["threshold_found"].get<double>() - bohrlab::rstar_cardano()) <= 2e-3);
  }

  TEST_CASE("witness usage errors exit 2") {
    CHECK(run({"witness", "--theorem", "thmB", "--a", "0.5"}).code == 2);
    CHECK(run({"witness", "--theorem", "thm1"}).code == 2);
    CHECK(run({"witness", "--theorem", "thm1", "--a0", "2"}).code == 2);
    CHECK(run({"witness", "--theorem", "thm9"}).code == 2);
  }

  TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::vector<std::string>> cmds = {
        {"verify", "--suite", "rogosinski", "--trials", "20", "--seed", "7"},
        {"sweep", "--target", "witness_thmB", "--from", "0.1", "--to", "0.9", "--steps", "7"},
        {"radius", "--name", "r0", "--a0", "0.3"},
        {"witness", "--theorem", "thm3"}};
    for (const auto& c : cmds) {
      const auto a = run(c);
      const auto b = run(c);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("every JSON number is finite and values carry an uncertainty") {
    const auto j = run_json({"verify", "--suite", "thm3_koebe", "--trials", "5"});
    std::function<void(const Json&)> walk = [&](const Json& v) {
      if (v.is_number_float()) CHECK(std::isfinite(v.get<double>()));
      if (v.is_structured())
        for (const auto& x : v) walk(x);
    };
    walk(j);
    for (const auto& t : j["result"]["per_trial"]) CHECK(t.contains("max_tail"));
    for (const auto& c : j["result"]["checks"]) CHECK(c.contains("tail"));
  }

  TEST_CASE("help exits 0") {
    const auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("radius") != std::string::npos);
  }
}
