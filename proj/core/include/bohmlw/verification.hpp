/// \file verification.hpp
/// The verification suite behind `verify` and the acceptance tests: one
/// entry per criterion, each returning pass/fail plus a deterministic detail
/// string (no timings, so reports are byte-identical across runs and thread
/// counts).
#pragma once

#include <span>
#include <string>
#include <vector>

namespace bohmlw {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string details;
};

struct VerifyOptions {
  int threads = 1;
};

std::vector<CriterionResult> run_acceptance_suite(const VerifyOptions& opts = {});

std::string format_report(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

/// Least-squares slope of ln|y| against ln(x).
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace bohmlw
