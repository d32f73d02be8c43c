#include "surfem/section_timer.hpp"

#include <cstdio>

namespace surfem {

SectionTimer::Scope::Scope(SectionTimer *timer, std::string section)
    : timer_(timer), section_(std::move(section)), start_(std::chrono::steady_clock::now()) {}

SectionTimer::Scope::~Scope() {
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
  timer_->add(section_, elapsed.count());
}

SectionTimer::SectionTimer() : start_(std::chrono::steady_clock::now()) {}

void SectionTimer::add(const std::string &section, double seconds) {
  auto &e = entries_[section];
  ++e.calls;
  e.seconds += seconds;
}

double SectionTimer::total_elapsed() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

void SectionTimer::print_summary(std::ostream &os) const {
  const double total = total_elapsed();
  char line[128];

  os << "+---------------------------------------------+------------+------------+\n";
  std::snprintf(line, sizeof line, "| %-43s | %.3es |            |\n",
                "Total wallclock time elapsed since start", total);
  os << line;
  os << "|                                             |            |            |\n";
  os << "| Section                         | no. calls |  wall time | % of total |\n";
  os << "+---------------------------------+-----------+------------+------------+\n";
  for (const auto &[name, e] : entries_) {
    std::snprintf(line, sizeof line, "| %-31s | %9zu | %.3es | %9.2f%% |\n", name.c_str(), e.calls, e.seconds,
                  total > 0.0 ? 100.0 * e.seconds / total : 0.0);
    os << line;
  }
  os << "+---------------------------------+-----------+------------+------------+\n";
}

}  // namespace surfem
