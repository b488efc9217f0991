#pragma once

#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rmab/environment.hpp"
#include "rmab/errors.hpp"

namespace rmab::dsl {

// Expression tree for the single-line reward language the LLM emits.
// Nodes are immutable once built and safe to share across threads.
enum class NodeKind {
  kNumber,
  kState,
  kFeature,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kAnd,
  kOr,
  kNeg,
};

struct AstNode;
using AstRef = std::shared_ptr<const AstNode>;

struct AstNode {
  NodeKind kind;
  double number = 0.0;  // kNumber
  int index = 0;        // kFeature, 0..33
  AstRef lhs;           // binary ops; operand of kNeg
  AstRef rhs;           // binary ops
};

struct RewardAst {
  AstRef root;
  bool valid() const { return root != nullptr; }
};

enum class ParseErrorKind {
  kSyntax,
  kIndexOutOfRange,
  kUnsupportedConstruct,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& msg)
      : Error(msg), kind_(kind), position_(position) {}
  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

class ExtractionError : public Error {
 public:
  using Error::Error;
};

enum class EvalErrorKind {
  kDivisionByZero,
  kNonFinite,
};

class EvalError : public Error {
 public:
  EvalError(EvalErrorKind kind, const std::string& msg)
      : Error(msg), kind_(kind) {}
  EvalErrorKind kind() const { return kind_; }

 private:
  EvalErrorKind kind_;
};

// Returns the body of the first $$$ ... $$$ block, trimmed, with a leading
// `return` token removed. Later blocks are ignored.
std::string extract_candidate(std::string_view llm_text);

// Grammar, lowest to highest precedence:
//   or < and < add/sub < mul/div < unary minus < atom
// Atoms are numeric literals, `state`, `agent_feats[<int>]` and parenthesized
// expressions. Everything else is rejected with a typed error.
RewardAst parse(std::string_view expr);

// Python float semantics: `a or b` yields a if a != 0 else b; `a and b`
// yields b if a != 0 else a; the unused operand is never evaluated.
// Division by zero and non-finite intermediates raise EvalError.
double evaluate(const RewardAst& ast, int state, std::span<const double> feats);

// Canonical single-line form with minimal parentheses. Re-parsing the result
// reproduces the tree exactly.
std::string to_string(const RewardAst& ast);

std::set<int> referenced_slots(const RewardAst& ast);
std::set<env::Feature> referenced_features(const RewardAst& ast,
                                           const env::FeatureSchema& schema);

struct ValidationReport {
  bool parse_ok = false;
  std::set<int> indices_used;
  std::set<env::Feature> feature_groups_used;
  bool positivity_ok = false;
  bool monotone_in_state_ok = false;
  std::optional<std::string> failure_reason;
  // One of: extraction, syntax, index-out-of-range, unsupported-construct,
  // evaluation, positivity, monotonicity. Empty when the candidate is usable.
  std::string failure_code;

  bool usable() const {
    return parse_ok && positivity_ok && monotone_in_state_ok;
  }
};

using ProbeVector = std::array<double, env::kSlotCount>;

// Evaluates the expression at state 0 and 1 on every probe vector.
// positivity requires every value finite and >= 0; monotonicity requires
// r(1) >= r(0) on every probe. Failures land in the report, not exceptions.
ValidationReport validate(const RewardAst& ast,
                          std::span<const ProbeVector> probes);

// extract -> parse -> validate, folding every failure into the report.
struct CandidateCheck {
  std::string expression;  // empty when extraction failed
  std::optional<RewardAst> ast;
  ValidationReport report;
};

CandidateCheck check_llm_response(std::string_view llm_text,
                                  std::span<const ProbeVector> probes);

// Distinct feature vectors of a cohort, capped, for validation probes.
std::vector<ProbeVector> collect_probes(
    const std::vector<env::ArmProfile>& cohort, std::size_t cap = 200);

}  // namespace rmab::dsl
