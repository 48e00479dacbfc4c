#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tiling/complex.hpp"
#include "tiling/excise.hpp"
#include "tiling/trimat.hpp"

namespace tiling {

enum class LeafKind { Tautology, AxiomContradiction, Elementary };
std::string to_string(LeafKind k);

struct Justification {
  LeafKind kind = LeafKind::Tautology;
  std::optional<PatternWitness> expected;       // AxiomContradiction only
  std::optional<MarkedComplex> complex;         // Elementary only
  std::optional<std::pair<int, int>> target;    // proof by contradiction on this cell
  std::string source;                           // file the complex came from, if any
};

// Internal nodes split on a cell: minus seeds -1, plus seeds +1.
struct CaseNode {
  std::optional<std::pair<int, int>> cell; // 1-based; absent on leaves
  std::shared_ptr<CaseNode> minus, plus;
  Justification leaf;
  bool is_leaf() const { return !cell; }
};

struct Certificate {
  IncidenceMatrix base{1, 1};
  std::vector<AuxKind> aux;
  GroupSpec group;
  std::shared_ptr<CaseNode> tree;
};

// Complexes given as strings are paths relative to base_dir.
Certificate certificate_from_json(const nlohmann::json &j, const std::string &base_dir = ".");
Certificate load_certificate(const std::string &path);
nlohmann::json certificate_to_json(const Certificate &C);

struct LeafResult {
  std::vector<Seed> path;
  LeafKind kind;
  bool passed = false;
  std::vector<std::string> diagnostics;
  std::optional<ValidationReport> report; // Elementary leaves
};

struct CertificateReport {
  int rows = 0, cols = 0; // after the auxiliary steps
  std::vector<LeafResult> leaves; // tree order, minus before plus
  bool ok() const;
};

CertificateReport validate_certificate(const Certificate &C); // CoverageGap
nlohmann::json certificate_report_to_json(const CertificateReport &R);

} // namespace tiling
