#ifndef SURFEM_SECTION_TIMER_HPP
#define SURFEM_SECTION_TIMER_HPP

#include <chrono>
#include <map>
#include <ostream>
#include <string>

namespace surfem {

// Accumulates wall time per named section and prints the run summary table.
class SectionTimer {
 public:
  class Scope {
   public:
    Scope(SectionTimer *timer, std::string section);
    ~Scope();
    Scope(const Scope &) = delete;
    Scope &operator=(const Scope &) = delete;

   private:
    SectionTimer *timer_;
    std::string section_;
    std::chrono::steady_clock::time_point start_;
  };

  SectionTimer();

  Scope scope(std::string section) { return {this, std::move(section)}; }
  void add(const std::string &section, double seconds);

  double total_elapsed() const;
  void print_summary(std::ostream &os) const;

 private:
  struct Entry {
    std::size_t calls = 0;
    double seconds = 0.0;
  };
  std::map<std::string, Entry> entries_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace surfem

#endif
