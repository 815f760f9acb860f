#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daggerkit/dagger1.hpp"
#include "daggerkit/dagger2.hpp"
#include "daggerkit/examples.hpp"
#include "daggerkit/fin2cat.hpp"
#include "daggerkit/fincat.hpp"

namespace daggerkit {

// Builder invocation embedded in a manifest.
struct BuilderSpec {
  std::string name;  // mat | rel | group | graded-lines
  int q = 0;
  int dmax = 0;
  int nmax = 0;
  int m = 0;
  std::string group_name;            // z1..z6, s3, klein
  std::optional<GroupTable> group;   // explicit table alternative
};

enum class ManifestKind {
  Category,
  DaggerCategory,
  AntiInvolutive,
  FlaggedDagger,
  TwoCategory,
  BiInvolutive,
  CoherentDagger2,
  Pivotal,
  Builder,
};

const char* manifest_kind_name(ManifestKind k);

// A fully resolved manifest: exactly the payload matching `kind` is set.
struct Manifest {
  ManifestKind kind = ManifestKind::Category;
  std::optional<FinCategory> category;
  std::optional<StrictDagger> dagger;
  std::optional<AntiInvolutive> anti;
  std::optional<FlaggedDagger> flagged;
  std::optional<Fin2Category> two_category;
  std::optional<BiInvolutive> bi;
  std::optional<CoherentDagger2Input> coherent;
  std::optional<Pivotal> pivotal;
  std::optional<BuilderSpec> builder;
};

// Throws ParseError with a 1-based line/column on syntax errors and with a
// field path in the message on schema violations. Unknown fields are
// rejected.
Manifest parse_manifest(const std::string& bytes);

// Canonical serialization: 2-space indent, fixed key order, trailing
// newline. parse(serialize(m)) reproduces m and serialize is a fixed point
// on its own output.
std::string serialize_manifest(const Manifest& m);

enum class ReportFormat { Text, Machine };

struct Report {
  std::string command;
  std::string kind;
  bool pass = true;
  ValidationReport validation;
  // Ordered command-specific key/value output (JSON-encoded values).
  std::vector<std::pair<std::string, std::string>> data;
  std::optional<Manifest> artifact;
};

struct RunOptions {
  long long max_search = 1'000'000;  // candidate ceiling for searches
};

// cmd ∈ {check, unitaries, fixed-points, strictify, univalentize, complete,
// coherentify, adjoints, strictify-2, check-pivotal}. Throws UsageError on a
// cmd/kind mismatch.
Report run_command(const std::string& cmd, const Manifest& m,
                   const RunOptions& opts = {});

// Text is human-readable; machine is schema-versioned JSON with
// deterministic key order. Witnesses are capped at 20 per axiom class with
// an elided count.
std::string emit_report(const Report& r, ReportFormat format);

int report_exit_code(const Report& r);

}  // namespace daggerkit
