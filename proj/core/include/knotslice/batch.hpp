#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "knotslice/record.hpp"

namespace knotslice {

struct BatchInput {
  std::string name;
  InputFormat format = InputFormat::dt;
  std::string code;
};

// One knot per non-blank line, '#' starts a comment. An optional "name:"
// prefix; unnamed lines are called "line<N>" after their 1-based number.
std::vector<BatchInput> read_inputs(std::istream& in);

// Names of the records already in a results stream; unreadable lines are
// ignored so a truncated last line is simply redone.
std::set<std::string> logged_names(std::istream& results);

struct BatchOptions {
  SearchConfig config;
  unsigned jobs = 1;
  bool timings = true;
};

// Classifies every input not in `skip` and writes one record per line in
// input order. Workers never touch the stream. Returns the records written.
std::size_t run_batch(const std::vector<BatchInput>& inputs, std::ostream& out, const BatchOptions& opts,
                      const std::set<std::string>& skip = {});

}  // namespace knotslice
