#pragma once

#include <optional>
#include <vector>

#include "deglab/term.hpp"
#include "deglab/typing.hpp"

namespace deglab {

enum class StepKind : uint8_t { Beta, G };

// A step is determined by its source term's alpha-class and the position of
// the contracted redex (the App node of the applied m-abstraction).
struct Step {
  TermPtr source;
  Position pos;
  StepKind kind = StepKind::G;
  int degree = 0;
};

// Erases the Wrap node at pos, keeping its body.
struct ForgetStep {
  TermPtr source;
  Position pos;
};

bool step_equal(const Step& a, const Step& b);
bool forget_equal(const ForgetStep& a, const ForgetStep& b);

// Validates that pos addresses a redex in source and computes its degree.
Step make_step(const TermPtr& source, const Position& pos, StepKind kind);
ForgetStep make_forget(const TermPtr& source, const Position& pos);

TermPtr apply_step(const Step& s);
TermPtr apply_forget(const ForgetStep& s);

// All redex occurrences, leftmost-outermost (position-lexicographic).
std::vector<Step> enumerate_redexes(const TermPtr& t);
std::vector<Step> enumerate_steps_of_degree(const TermPtr& t, int d);
// Beta steps of a pure term (NotPure otherwise).
std::vector<Step> enumerate_beta_redexes(const TermPtr& t);
std::vector<ForgetStep> enumerate_forget_steps(const TermPtr& t);

// Maximum redex degree, 0 if redex-free.
int maxdeg(const TermPtr& t);
bool is_g_normal(const TermPtr& t);

// The G-step contracting the same redex as a Beta step on a pure term.
Step corresponding_step(const Step& beta);

class ReductionSeq {
 public:
  ReductionSeq() = default;
  explicit ReductionSeq(TermPtr source) : source_(std::move(source)), target_(source_) {}

  const TermPtr& source() const { return source_; }
  const TermPtr& target() const { return target_; }
  const std::vector<Step>& steps() const { return steps_; }
  size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  // The step's source must be alpha-equal to the current target.
  void push(const Step& s);
  ReductionSeq tail() const;

  // Every step of the same degree, or nothing (empty sequences report 0).
  std::optional<int> uniform_degree() const;

  static ReductionSeq concat(const ReductionSeq& a, const ReductionSeq& b);

 private:
  TermPtr source_, target_;
  std::vector<Step> steps_;
};

class ForgetSeq {
 public:
  ForgetSeq() = default;
  explicit ForgetSeq(TermPtr source) : source_(std::move(source)), target_(source_) {}

  const TermPtr& source() const { return source_; }
  const TermPtr& target() const { return target_; }
  const std::vector<ForgetStep>& steps() const { return steps_; }
  size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  void push(const ForgetStep& s);
  ForgetSeq tail() const;

  static ForgetSeq concat(const ForgetSeq& a, const ForgetSeq& b);

 private:
  TermPtr source_, target_;
  std::vector<ForgetStep> steps_;
};

bool seq_equal(const ReductionSeq& a, const ReductionSeq& b);

}  // namespace deglab
