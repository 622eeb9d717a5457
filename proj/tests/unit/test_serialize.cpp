#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "cheeger2d/cheeger.hpp"
#include "cheeger2d/errors.hpp"
#include "cheeger2d/families.hpp"
#include "cheeger2d/serialize.hpp"
#include "cheeger2d/verify.hpp"

using namespace cheeger2d;

TEST_CASE("doubles print as the shortest exact round trip") {
  CHECK(fmt_double(1.0) == "1");
  CHECK(fmt_double(0.1) == "0.1");
  CHECK(fmt_double(2.5) == "2.5");
  CHECK(fmt_double(-3.0) == "-3");
  CHECK(fmt_double(1.0 / 3.0) == "0.3333333333333333");
  for (double v : {0.1, -0.25, 1e-300, 6.02214076e23, kPi, kSqrt3,
                   123456.789012345, 5e-324}) {
    CHECK(std::strtod(fmt_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("shape JSON round trips bit for bit") {
  for (int s = 0; s < 15; ++s) {
    auto k = random_convex(3 + s % 10, 100 + s);
    auto text = shape_to_json(k);
    auto back = parse_shape_json(text);
    REQUIRE(back.size() == k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
      CHECK(back.vertex(i).x == k.vertex(i).x);
      CHECK(back.vertex(i).y == k.vertex(i).y);
    }
    // Emitting again reproduces the exact text.
    CHECK(shape_to_json(back) == text);
  }
}

TEST_CASE("shape parsing canonicalizes its input") {
  auto k = parse_shape_json(
      R"({"vertices": [[1, 1], [0, 0], [1, 0], [0.5, 0.0], [0, 1]]})");
  CHECK(k.size() == 4);
  CHECK(k.vertex(0).x == 0.0);
  CHECK(k.area() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("malformed shape JSON is rejected") {
  for (const char* bad : {
           "",                                     // empty
           "{",                                    // truncated
           "[]",                                   // not an object
           "{\"vertices\": 3}",                    // not an array
           "{\"points\": [[0,0],[1,0],[0,1]]}",    // wrong key
           "{\"vertices\": [[0,0],[1,0]]}",        // too few points
           "{\"vertices\": [[0,0],[1,0],[2,0]]}",  // collinear
           "{\"vertices\": [[0,0],[1,0],[0]]}",    // ragged pair
           "{\"vertices\": [[0,0],[1,0],[\"x\",1]]}",  // non-numeric
           "{\"vertices\": [[0,0],[1,0],[0,null]]}",   // null entry
       }) {
    CHECK_THROWS_AS(parse_shape_json(bad), DegenerateInput);
  }
}

TEST_CASE("shape reports round trip through JSON") {
  auto sq = rect_RL(1.0);
  for (bool asym : {false, true}) {
    auto rep = build_report(sq, asym);
    auto text = report_to_json(rep);
    auto back = report_from_json(text);
    CHECK(report_to_json(back) == text);
    CHECK(back.deficit == rep.deficit);
    REQUIRE(back.margins.size() == rep.margins.size());
    for (std::size_t i = 0; i < rep.margins.size(); ++i) {
      CHECK(back.margins[i].first == rep.margins[i].first);
      CHECK(back.margins[i].second == rep.margins[i].second);
    }
    CHECK(back.asymmetry_value.has_value() == asym);
  }
  auto with_stab =
      build_report(sq, false, stability_constant(2.0, default_c2()));
  auto text = report_to_json(with_stab);
  CHECK(report_to_json(report_from_json(text)) == text);
}

TEST_CASE("report JSON keys appear in a stable order") {
  auto rep = build_report(rect_RL(1.0), true);
  auto text = report_to_json(rep);
  CHECK(text.find("\"asymmetry\"") != std::string::npos);
  CHECK(text.find("\"deficit\"") != std::string::npos);
  CHECK(text.find("\"margins\"") != std::string::npos);
  CHECK(text.find("\"scalars\"") != std::string::npos);
  CHECK(text.find("\"asymmetry\"") < text.find("\"deficit\""));
  CHECK(text.find("\"deficit\"") < text.find("\"margins\""));
  CHECK(text.find("\"margins\"") < text.find("\"scalars\""));
}

TEST_CASE("asymmetry JSON carries value, pose, and distance") {
  auto sq = rect_RL(1.0);
  auto a = asymmetry(sq);
  auto text = asymmetry_to_json(a, sq.minimal_width().width);
  CHECK(text.find("\"hausdorff\":") != std::string::npos);
  CHECK(text.find("\"pose\":") != std::string::npos);
  CHECK(text.find("\"value\":") != std::string::npos);
  CHECK(text.find("\"rotation\":") != std::string::npos);
  CHECK(text.find(fmt_double(a.value)) != std::string::npos);
}

TEST_CASE("sweep CSV has one row per measurement") {
  std::vector<double> eps{0.125, 0.0625};
  auto recs = sweep_sharpness(eps);
  auto csv = sweep_to_csv(recs);
  CHECK(csv.rfind("param,name,measured,reference,rel_err\n", 0) == 0);
  std::size_t rows = 0;
  for (char c : csv)
    if (c == '\n') ++rows;
  CHECK(rows == 1 + 2 * 5);  // header + eps values x entries
  // Entries without a closed form leave reference and rel_err empty.
  CHECK(csv.find("ratio_alpha_delta") != std::string::npos);
  std::size_t pos = csv.find("ratio_alpha_delta");
  std::size_t eol = csv.find('\n', pos);
  std::string line = csv.substr(pos, eol - pos);
  CHECK(line.substr(line.size() - 2) == ",,");
}

TEST_CASE("corpus CSV grows stability columns only when present") {
  auto plain = verify_corpus(8, 5, {}, 1);
  auto plain_csv = corpus_to_csv(plain);
  CHECK(plain_csv.find("alpha") == std::string::npos);
  CHECK(plain_csv.rfind("index,n,w,r,area,", 0) == 0);

  auto stab = verify_corpus(8, 5, stability_constant(2.0, default_c2()), 1);
  auto stab_csv = corpus_to_csv(stab);
  CHECK(stab_csv.find("alpha") != std::string::npos);
  CHECK(stab_csv.find("stability_margin") != std::string::npos);

  // Same corpus, same geometry columns.
  CHECK(plain.rows.size() == stab.rows.size());
  for (std::size_t i = 0; i < plain.rows.size(); ++i)
    CHECK(plain.rows[i].scalars.wh == stab.rows[i].scalars.wh);
}

TEST_CASE("corpus summary mentions counts and clean margins") {
  auto rep = verify_corpus(8, 5, {}, 1);
  auto text = corpus_summary(rep);
  CHECK(text.find("8") != std::string::npos);
  CHECK(text.find("violations") != std::string::npos);
  CHECK(text.find("VIOLATION") == std::string::npos);

  // A hand-made violation surfaces with its title and shape.
  CorpusReport fake = rep;
  fake.violations.push_back(
      {3, "main", -0.5, "{\"vertices\": [[0, 0], [1, 0], [0, 1]]}"});
  auto bad = corpus_summary(fake);
  CHECK(bad.find("VIOLATION") != std::string::npos);
  CHECK(bad.find("w*h") != std::string::npos);
  CHECK(bad.find("[[0, 0], [1, 0], [0, 1]]") != std::string::npos);
}

TEST_CASE("search results serialize deterministically") {
  SearchConfig cfg;
  cfg.n_vertices = 3;
  cfg.seed = 21;
  cfg.iters = 150;
  cfg.restarts = 2;
  cfg.threads = 1;
  auto res = maximize_wh(cfg);
  auto json = search_result_to_json(res);
  CHECK(json.find("\"asym_of_best\":") != std::string::npos);
  CHECK(json.find("\"best_shape\":") != std::string::npos);
  CHECK(json.find("\"best_value\":") != std::string::npos);
  CHECK(json.find("\"trajectory\":") != std::string::npos);
  CHECK(json.find("\"winning_restart\":") != std::string::npos);

  auto csv = trajectory_to_csv(res);
  CHECK(csv.rfind("iteration,value\n", 0) == 0);
  std::size_t rows = 0;
  for (char c : csv)
    if (c == '\n') ++rows;
  CHECK(rows == 1 + res.trajectory.size());
}

TEST_CASE("the Cheeger set SVG is structurally sound") {
  auto sq = rect_RL(1.0);
  auto res = cheeger(sq);
  auto svg = svg_cheeger_set(sq, res);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<path") != std::string::npos);
  // One circular fillet per core vertex.
  std::size_t arcs = 0, pos = 0;
  while ((pos = svg.find(" A ", pos)) != std::string::npos) {
    ++arcs;
    pos += 3;
  }
  CHECK(arcs == res.cheeger_set.core.size());
  // Deterministic output.
  CHECK(svg == svg_cheeger_set(sq, cheeger(sq)));
}
