#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "lexis/io.hpp"
#include "support/testenv.hpp"

namespace fs = std::filesystem;
using testenv::run_cli;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = testenv::temp_dir() / ("cli-" + std::to_string(::getpid()) + "-" +
                                  std::to_string(counter_++));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  fs::path file(const std::string& name, const std::string& content) const {
    const fs::path p = path / name;
    lexis::io::write_text_file(p, content);
    return p;
  }
  static inline int counter_ = 0;
};

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

const std::string kFigureList =
    "ισομετρία\nισομετρίας\nισομετρίες\nισομοιρία\nισομοιρίας\nισομοιρίες\n";

}  // namespace

TEST_CASE("cli: build prints stats and the compression ratio") {
  TempDir tmp;
  const auto list = tmp.file("words.txt", kFigureList);
  const auto out = tmp.path / "lex.mdg";
  const auto r = run_cli("build " + q(list) + " -o " + q(out));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "nodes=13 transitions=14 terminals=2 bytes=193\n"
                 "raw_bytes=122 compiled_bytes=193 ratio=158.2%\n");

  const auto s = run_cli("stats " + q(out));
  CHECK(s.exit_code == 0);
  CHECK(s.out == "nodes=13 transitions=14 terminals=2 bytes=193\n");
}

TEST_CASE("cli: build accepts an empty list and rejects a missing file") {
  TempDir tmp;
  const auto list = tmp.file("empty.txt", "# nothing here\n");
  const auto out = tmp.path / "lex.mdg";
  const auto r = run_cli("build " + q(list) + " -o " + q(out));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("nodes=1 transitions=0 terminals=0") == 0);

  const auto bad = run_cli("build " + q(tmp.path / "missing.txt") + " -o " + q(out));
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("error:") != std::string::npos);
}

TEST_CASE("cli: spell check reports unknown words with offsets, exit 1") {
  TempDir tmp;
  const auto list = tmp.file("words.txt", "θέλω\n");
  const auto out = tmp.path / "lex.mdg";
  REQUIRE(run_cli("build " + q(list) + " -o " + q(out)).exit_code == 0);

  const auto text = tmp.file("text.txt", "θέλω ΠΣΙΧΥ.\n");
  const auto r = run_cli("spell check " + q(out) + " " + q(text));
  CHECK(r.exit_code == 1);
  CHECK(r.out == "5\tΠΣΙΧΥ\n");

  const auto clean = tmp.file("clean.txt", "θέλω θέλω.\n");
  const auto ok = run_cli("spell check " + q(out) + " " + q(clean));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.empty());
}

TEST_CASE("cli: spell suggest reproduces the worked example") {
  TempDir tmp;
  const auto list = tmp.file("words.txt", "ΨΑΡΙ\nΨΥΧΕΙ\nΨΥΧΗ\nΨΥΧΟΙ\n");
  const auto out = tmp.path / "lex.mdg";
  REQUIRE(run_cli("build " + q(list) + " -o " + q(out)).exit_code == 0);
  const std::string classes = (testenv::data_dir() / "classes_default.txt").string();

  const auto r = run_cli("spell suggest " + q(out) + " ΠΣΙΧΥ --classes '" + classes + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "ΨΥΧΗ\t4\tphonographic\n"
        "ΨΥΧΕΙ\t5\tphonographic\n"
        "ΨΥΧΟΙ\t5\tphonographic\n");

  const auto capped =
      run_cli("spell suggest " + q(out) + " ΠΣΙΧΥ --max-distance 4 --classes '" + classes + "'");
  CHECK(capped.exit_code == 0);
  CHECK(capped.out == "ΨΥΧΗ\t4\tphonographic\n");

  // No class table from flag or config: usage error.
  const auto missing = run_cli("spell suggest " + q(out) + " ΠΣΙΧΥ");
  CHECK(missing.exit_code == 2);

  // Nothing found: findings exit code.
  const auto none = run_cli("spell suggest " + q(out) + " ββββββββ --classes '" + classes + "'");
  CHECK(none.exit_code == 1);
  CHECK(none.out.empty());
}

TEST_CASE("cli: config file supplies defaults") {
  TempDir tmp;
  const auto list = tmp.file("words.txt", "ΨΑΡΙ\nΨΥΧΕΙ\nΨΥΧΗ\nΨΥΧΟΙ\n");
  const auto out = tmp.path / "lex.mdg";
  REQUIRE(run_cli("build " + q(list) + " -o " + q(out)).exit_code == 0);
  const auto config = tmp.file(
      "config.json", "{\"classes\": \"" + (testenv::data_dir() / "classes_default.txt").string() +
                         "\", \"limit\": 1}\n");

  const auto r = run_cli("--config " + q(config) + " spell suggest " + q(out) + " ΠΣΙΧΥ");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "ΨΥΧΗ\t4\tphonographic\n");

  const auto bad = tmp.file("bad.json", "{\"classes\": \"/nonexistent/path.txt\"}\n");
  const auto err = run_cli("--config " + q(bad) + " spell suggest " + q(out) + " ΠΣΙΧΥ");
  CHECK(err.exit_code == 2);
}

TEST_CASE("cli: hyph train, exceptions, split round-trip") {
  TempDir tmp;
  const std::string corpus_path = (testenv::data_dir() / "hyph_corpus.txt").string();
  const std::string homographs = (testenv::data_dir() / "homographs.txt").string();
  const auto model = tmp.path / "model.json";

  const auto train = run_cli("hyph train '" + corpus_path + "' -o " + q(model));
  CHECK(train.exit_code == 0);
  CHECK(train.out.find("trees=24") != std::string::npos);

  const auto exceptions = run_cli("hyph exceptions '" + corpus_path + "' " + q(model) +
                                  " --homographs '" + homographs + "'");
  CHECK(exceptions.exit_code == 0);
  CHECK(exceptions.out.find("exceptions=") == 0);

  const auto split = run_cli("hyph split " + q(model) + " θέλω");
  CHECK(split.exit_code == 0);
  CHECK(split.out == "θέ-λω\n");

  const auto words = tmp.file("words.txt", "παράθυρο\nάδεια\nφως\n");
  const auto batch = run_cli("hyph split " + q(model) + " " + q(words));
  CHECK(batch.exit_code == 0);
  CHECK(batch.out == "πα-ρά-θυ-ρο\nά-δεια\nφως\n");

  const auto bad = run_cli("hyph split " + q(model) + " latin");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: hyph stats matches the documented shape") {
  TempDir tmp;
  const auto corpus = tmp.file("corpus.txt", "δό-λια\nδό-λι-α\nφτώ-χεια\n");
  const auto r = run_cli("hyph stats " + q(corpus));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# bigram\toccurrences\tsplit_pct\tnonsplit_pct\n") == 0);
  CHECK(r.out.find("ια\t3\t33.3\t66.7\n") != std::string::npos);
  CHECK(r.out.find("# total\t3\t33.3\t66.7\n") != std::string::npos);
  CHECK(r.out.find("# forms\t3\tambiguous\t3\tfraction\t100.0%\n") != std::string::npos);
}

TEST_CASE("cli: hyph stats on the bundled corpus is byte-stable") {
  const auto r =
      run_cli("hyph stats '" + (testenv::data_dir() / "hyph_corpus.txt").string() + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# bigram\toccurrences\tsplit_pct\tnonsplit_pct\nια\t59\t42.4\t57.6\n") == 0);
  CHECK(r.out.find("# forms\t1428\tambiguous\t730\tfraction\t51.1%\n") != std::string::npos);
}

TEST_CASE("cli: thes lookup, check, stats") {
  const std::string file = (testenv::data_dir() / "thesaurus_sample.json").string();

  const auto lookup = run_cli("thes lookup '" + file + "' αγκυλώνει");
  CHECK(lookup.exit_code == 0);
  CHECK(lookup.out ==
        "αγκυλώνω (id 1)\n"
        "  1) τσιμπάω, κεντάω, τρυπάω, βελονιάζω\n"
        "     π.χ. με αγκύλωσε μια μέλισσα\n"
        "  2) καθελώνω, παραλύω, παγώνω\n");

  const auto tsv = run_cli("thes lookup '" + file + "' αγκαζάρω --format tsv");
  CHECK(tsv.exit_code == 0);
  CHECK(tsv.out == "12\tαγκαζάρω\t1\tκλείνω;κρατώ\t\tinformal\t\n");

  const auto missing = run_cli("thes lookup '" + file + "' ανύπαρκτο");
  CHECK(missing.exit_code == 1);

  const auto check = run_cli("thes check '" + file + "'");
  CHECK(check.exit_code == 0);
  CHECK(check.out == "# resolved: headword=46 form_only=0 violations=0\n");

  const auto stats = run_cli("thes stats '" + file + "'");
  CHECK(stats.exit_code == 0);
  CHECK(stats.out.find("lemmas=22 forms=91\n") == 0);

  // A broken reference produces findings and exit 1.
  TempDir tmp;
  const auto broken = tmp.file("broken.json", R"([
    {"id": 1, "headword": "α", "forms": ["α"],
     "meanings": [{"synonyms": ["χαμένο"], "antonyms": [], "examples": []}]}
  ])");
  const auto violations = run_cli("thes check " + q(broken));
  CHECK(violations.exit_code == 1);
  CHECK(violations.out.find("lemma 1\tmeaning 1\tsynonym\tχαμένο\n") == 0);
}

TEST_CASE("cli: bench runs and reports") {
  TempDir tmp;
  const auto list = tmp.file("words.txt", kFigureList);
  const auto out = tmp.path / "lex.mdg";
  REQUIRE(run_cli("build " + q(list) + " -o " + q(out)).exit_code == 0);
  const auto queries = tmp.file("queries.txt", "ισομετρία\nλάθος\n");
  const auto r = run_cli("bench " + q(out) + " " + q(queries) +
                         " --iterations 2 --threads 2 --classes '" +
                         (testenv::data_dir() / "classes_default.txt").string() + "' --suggest 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# cpu:") != std::string::npos);
  CHECK(r.out.find("lookup_single_thread_words_per_s=") != std::string::npos);
  CHECK(r.out.find("lookup_threads_2_words_per_s=") != std::string::npos);
  CHECK(r.out.find("suggest_latency_ms") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("spell").exit_code == 2);
  CHECK(run_cli("build onlyonearg").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
