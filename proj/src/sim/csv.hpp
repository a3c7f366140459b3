#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pb {

struct BlerPoint {
  double ebn0_db = 0.0;
  double fer = 0.0;
  long errors = 0;
  long blocks = 0;
};

struct MdrRow {
  std::string method;
  int effort = 0;
  int b = 0;
  double mdr = 0.0;
  long misses = 0;
  long trials = 0;
};

// Locale-independent shortest-round-trip formatting; CSV output must be
// byte-identical across runs and host locales.
std::string format_double(double v);

// Comment lines are prefixed with "# "; the header row and data follow.
void write_bler_csv(std::ostream& os, const std::vector<std::string>& comments,
                    const std::vector<BlerPoint>& points);

void write_mdr_csv(std::ostream& os, const std::vector<std::string>& comments,
                   const std::vector<MdrRow>& rows);

}  // namespace pb
