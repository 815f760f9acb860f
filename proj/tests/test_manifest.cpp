#include "daggerkit/manifest.hpp"

#include <doctest.h>

#include "support.hpp"

using namespace daggerkit;
using namespace daggerkit::test;

namespace {

const char* kMinimalCategory = R"({
  "kind": "category",
  "objects": ["*"],
  "morphisms": [{"id": "id", "src": "*", "tgt": "*"}],
  "identities": {"*": "id"},
  "compose": [["id", "id", "id"]]
})";

const char* kZ2Dagger = R"({
  "kind": "dagger-category",
  "category": {
    "objects": ["*"],
    "morphisms": [
      {"id": "e", "src": "*", "tgt": "*"},
      {"id": "g", "src": "*", "tgt": "*"}
    ],
    "identities": {"*": "e"},
    "compose": [["e", "e", "e"], ["e", "g", "g"], ["g", "e", "g"], ["g", "g", "e"]]
  },
  "dagger": {"e": "e", "g": "g"}
})";

}  // namespace

TEST_CASE("parse a minimal one-object category manifest") {
  Manifest m = parse_manifest(kMinimalCategory);
  CHECK(m.kind == ManifestKind::Category);
  REQUIRE(m.category.has_value());
  CHECK(m.category->objects.size() == 1);
  CHECK(validate_category(*m.category).ok());
}

TEST_CASE("parse a builder manifest") {
  Manifest m = parse_manifest(R"({"kind":"builder","builder":"mat","q":2,"dmax":1})");
  CHECK(m.kind == ManifestKind::Builder);
  REQUIRE(m.builder.has_value());
  CHECK(m.builder->name == "mat");
  CHECK(m.builder->q == 2);
  CHECK(m.builder->dmax == 1);
}

TEST_CASE("a morphism referencing an unknown object is a parse error naming it") {
  const char* bad = R"({
    "kind": "category",
    "objects": ["*"],
    "morphisms": [{"id": "f", "src": "*", "tgt": "ghost"}],
    "identities": {"*": "f"},
    "compose": []
  })";
  try {
    parse_manifest(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("ghost") != std::string::npos);
  }
}

TEST_CASE("unknown fields are rejected") {
  const char* bad = R"({
    "kind": "category",
    "objects": ["*"],
    "morphisms": [{"id": "id", "src": "*", "tgt": "*"}],
    "identities": {"*": "id"},
    "compose": [["id", "id", "id"]],
    "color": "blue"
  })";
  CHECK_THROWS_AS(parse_manifest(bad), ParseError);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_manifest("{\n  \"kind\": \"category\",\n  !\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.col > 0);
  }
}

TEST_CASE("serialize ∘ parse is byte-stable") {
  for (const char* text : {kMinimalCategory, kZ2Dagger}) {
    Manifest m = parse_manifest(text);
    std::string s1 = serialize_manifest(m);
    std::string s2 = serialize_manifest(parse_manifest(s1));
    CHECK(s1 == s2);
  }

  // and for a structure-valued manifest produced in memory
  Manifest flagged;
  flagged.kind = ManifestKind::FlaggedDagger;
  flagged.flagged = coherentify(build_inverse_dagger_groupoid(cyclic_group(2)));
  std::string s1 = serialize_manifest(flagged);
  std::string s2 = serialize_manifest(parse_manifest(s1));
  CHECK(s1 == s2);
}

TEST_CASE("check command passes on the Z/2 dagger manifest") {
  Report rep = run_command("check", parse_manifest(kZ2Dagger));
  CHECK(rep.pass);
  CHECK(report_exit_code(rep) == 0);
}

TEST_CASE("check command fails with witnesses on a broken dagger") {
  Manifest m = parse_manifest(kZ2Dagger);
  m.dagger->dag["g"] = "e";
  Report rep = run_command("check", m);
  CHECK_FALSE(rep.pass);
  CHECK(report_exit_code(rep) == 1);
  CHECK_FALSE(rep.validation.violations.empty());
}

TEST_CASE("fixed-points on the Mat(2,1) builder reports the Hermitian point") {
  Manifest m = parse_manifest(R"({"kind":"builder","builder":"mat","q":2,"dmax":1})");
  Report rep = run_command("fixed-points", m);
  REQUIRE(rep.pass);
  bool saw_counts = false;
  for (const auto& [k, v] : rep.data) {
    if (k == "point_list") {
      CHECK(v.find("\"obj\":\"1\"") != std::string::npos);
      CHECK(v.find("\"automorphisms\":3") != std::string::npos);
      saw_counts = true;
    }
  }
  CHECK(saw_counts);
}

TEST_CASE("strictify then check passes on a coherentified manifest") {
  Report coh = run_command("coherentify", parse_manifest(kZ2Dagger));
  REQUIRE(coh.artifact.has_value());

  // every emitted artifact re-parses and re-validates
  Manifest reparsed = parse_manifest(serialize_manifest(*coh.artifact));
  Report check1 = run_command("check", reparsed);
  CHECK(check1.pass);

  Report strict = run_command("strictify", reparsed);
  REQUIRE(strict.artifact.has_value());
  Manifest strict_reparsed = parse_manifest(serialize_manifest(*strict.artifact));
  Report check2 = run_command("check", strict_reparsed);
  CHECK(check2.pass);
}

TEST_CASE("univalentize and complete emit valid artifacts") {
  Report coh = run_command("coherentify", parse_manifest(kZ2Dagger));
  Manifest flagged = parse_manifest(serialize_manifest(*coh.artifact));

  Report univ = run_command("univalentize", flagged);
  REQUIRE(univ.artifact.has_value());
  CHECK(run_command("check", parse_manifest(serialize_manifest(*univ.artifact))).pass);

  Report comp = run_command("complete", parse_manifest(kZ2Dagger));
  REQUIRE(comp.artifact.has_value());
  CHECK(run_command("check", parse_manifest(serialize_manifest(*comp.artifact))).pass);
}

TEST_CASE("adjoints command lists right adjoints of graded lines") {
  Manifest m = parse_manifest(R"({"kind":"builder","builder":"graded-lines","group":"z3","m":3})");
  Report rep = run_command("adjoints", m);
  REQUIRE(rep.pass);
  REQUIRE_FALSE(rep.data.empty());
  CHECK(rep.data.front().second.find("\"found\":false") == std::string::npos);
}

TEST_CASE("command/kind mismatches are usage errors") {
  Manifest cat = parse_manifest(kMinimalCategory);
  CHECK_THROWS_AS(run_command("unitaries", cat), UsageError);
  CHECK_THROWS_AS(run_command("strictify", cat), UsageError);
  CHECK_THROWS_AS(run_command("frobnicate", cat), UsageError);
}

TEST_CASE("machine reports are deterministic and capped") {
  Report rep = run_command("check", parse_manifest(kZ2Dagger));
  CHECK(emit_report(rep, ReportFormat::Machine) ==
        emit_report(rep, ReportFormat::Machine));

  // a manifest with dozens of missing compose entries caps at 20 witnesses
  FinCategory big;
  for (int i = 0; i < 6; ++i) {
    const std::string o = "o" + std::to_string(i);
    big.objects.push_back(o);
    big.morphisms.push_back({"id" + o, o, o});
    big.identities[o] = "id" + o;
  }
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      // morphisms o_i -> o_j with no compose table at all
      big.morphisms.push_back(
          {"f" + std::to_string(i) + std::to_string(j), "o" + std::to_string(i),
           "o" + std::to_string(j)});
    }
  }
  Manifest m;
  m.kind = ManifestKind::Category;
  m.category = big;
  Report failing = run_command("check", m);
  REQUIRE_FALSE(failing.pass);
  std::string out = emit_report(failing, ReportFormat::Text);
  CHECK(out.find("more totality-missing witness(es) elided") != std::string::npos);

  std::string machine = emit_report(failing, ReportFormat::Machine);
  CHECK(machine.find("\"violations_elided\"") != std::string::npos);
}

TEST_CASE("builder manifests for groups and rel run end to end") {
  CHECK(run_command("check", parse_manifest(R"({"kind":"builder","builder":"group","group":"s3"})")).pass);
  CHECK(run_command("check", parse_manifest(R"({"kind":"builder","builder":"rel","nmax":2})")).pass);
  Report us = run_command("unitaries", parse_manifest(R"({"kind":"builder","builder":"group","group":"z4"})"));
  REQUIRE(us.pass);
  CHECK(us.data.front().second == "4");
}

TEST_CASE("all structure kinds round-trip through serialize/parse/check") {
  // two-category
  {
    Manifest m;
    m.kind = ManifestKind::TwoCategory;
    m.two_category = *build_graded_lines_2cat(cyclic_group(2), 2).base;
    Manifest back = parse_manifest(serialize_manifest(m));
    CHECK(run_command("check", back).pass);
    CHECK(serialize_manifest(back) == serialize_manifest(m));
  }
  // bi-involutive
  {
    Manifest m;
    m.kind = ManifestKind::BiInvolutive;
    m.bi = build_graded_lines_2cat(cyclic_group(3), 3);
    Manifest back = parse_manifest(serialize_manifest(m));
    CHECK(run_command("check", back).pass);
    CHECK(serialize_manifest(back) == serialize_manifest(m));
  }
  // anti-involutive
  {
    Manifest m;
    m.kind = ManifestKind::AntiInvolutive;
    m.anti = walking_iso_swap();
    Manifest back = parse_manifest(serialize_manifest(m));
    CHECK(run_command("check", back).pass);
    Report comp = run_command("complete", back);
    REQUIRE(comp.artifact.has_value());
    CHECK(run_command("check", parse_manifest(serialize_manifest(*comp.artifact))).pass);
  }
  // coherent-dagger-2 and strictify-2
  {
    Manifest m;
    m.kind = ManifestKind::CoherentDagger2;
    m.coherent = trivial_coherent_input(build_graded_lines_2cat(cyclic_group(2), 2));
    Manifest back = parse_manifest(serialize_manifest(m));
    CHECK(run_command("check", back).pass);
    Report strict = run_command("strictify-2", back);
    CHECK(strict.pass);
    REQUIRE(strict.artifact.has_value());
    CHECK(run_command("check", parse_manifest(serialize_manifest(*strict.artifact))).pass);
  }
  // pivotal and check-pivotal
  {
    BiInvolutive v = build_graded_lines_2cat(cyclic_group(3), 3);
    Pivotal p;
    p.base = v.base;
    for (const auto& f : v.base->one_morphisms) {
      p.adjoint_choice[f.id] = *find_right_adjoint(*v.base, f.id);
      p.tau[f.id] = v.base->two_identities.at(f.id);
    }
    p.theta["*"] = "e";
    Manifest m;
    m.kind = ManifestKind::Pivotal;
    m.pivotal = p;
    Manifest back = parse_manifest(serialize_manifest(m));
    Report rep = run_command("check-pivotal", back);
    CHECK(rep.pass);
    CHECK(serialize_manifest(back) == serialize_manifest(m));
  }
}

TEST_CASE("builder manifests accept explicit group tables") {
  const char* text = R"({
    "kind": "builder",
    "builder": "group",
    "group": {"elements": ["e", "a"], "table": [[0, 1], [1, 0]]}
  })";
  Manifest m = parse_manifest(text);
  Report rep = run_command("check", m);
  CHECK(rep.pass);
  // round-trips through the explicit-table serialization
  Manifest back = parse_manifest(serialize_manifest(m));
  CHECK(serialize_manifest(back) == serialize_manifest(m));
}

TEST_CASE("unknown builders and group names are parse errors") {
  CHECK_THROWS_AS(parse_manifest(R"({"kind":"builder","builder":"frob","q":1})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_manifest(R"({"kind":"builder","builder":"group","group":"z9"})"),
      ParseError);
}

TEST_CASE("fixed-points accepts flagged-dagger manifests") {
  Report coh = run_command("coherentify", parse_manifest(kZ2Dagger));
  Manifest flagged = parse_manifest(serialize_manifest(*coh.artifact));
  Report rep = run_command("fixed-points", flagged);
  CHECK(rep.pass);
}
