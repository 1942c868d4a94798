#include "knotslice/batch.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <thread>

namespace knotslice {

std::vector<BatchInput> read_inputs(std::istream& in) {
  std::vector<BatchInput> out;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    NamedCode nc = split_name(line);
    BatchInput b;
    b.name = nc.name.empty() ? "line" + std::to_string(number) : nc.name;
    b.format = detect_format(nc.code);
    b.code = std::move(nc.code);
    out.push_back(std::move(b));
  }
  return out;
}

std::set<std::string> logged_names(std::istream& results) {
  std::set<std::string> names;
  std::string line;
  while (std::getline(results, line)) {
    try {
      names.insert(parse_record(line).name);
    } catch (const Error&) {
    }
  }
  return names;
}

std::size_t run_batch(const std::vector<BatchInput>& inputs, std::ostream& out, const BatchOptions& opts,
                      const std::set<std::string>& skip) {
  std::vector<const BatchInput*> todo;
  for (const auto& in : inputs)
    if (!skip.contains(in.name)) todo.push_back(&in);
  const unsigned jobs = std::max(1u, opts.jobs);
  // Chunks keep memory bounded and let the output grow steadily for resume.
  const std::size_t chunk = 16 * static_cast<std::size_t>(jobs);
  std::size_t written = 0;
  for (std::size_t base = 0; base < todo.size(); base += chunk) {
    const std::size_t end = std::min(todo.size(), base + chunk);
    std::vector<ResultRecord> records(end - base);
    std::atomic<std::size_t> next{base};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < end;)
        records[i - base] = make_record(todo[i]->name, todo[i]->format, todo[i]->code, opts.config, opts.timings);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& r : records) out << serialize(r) << '\n';
    out.flush();
    written += records.size();
  }
  return written;
}

}  // namespace knotslice
