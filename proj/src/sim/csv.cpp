#include "sim/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace pb {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, res.ptr);
}

namespace {

void write_comments(std::ostream& os, const std::vector<std::string>& comments) {
  for (const auto& c : comments) os << "# " << c << "\n";
}

}  // namespace

void write_bler_csv(std::ostream& os, const std::vector<std::string>& comments,
                    const std::vector<BlerPoint>& points) {
  write_comments(os, comments);
  os << "EbN0dB,FER,errors,blocks\n";
  for (const auto& p : points) {
    os << format_double(p.ebn0_db) << ',' << format_double(p.fer) << ',' << p.errors << ','
       << p.blocks << "\n";
  }
}

void write_mdr_csv(std::ostream& os, const std::vector<std::string>& comments,
                   const std::vector<MdrRow>& rows) {
  write_comments(os, comments);
  os << "method,effort,B,MDR,misses,trials\n";
  for (const auto& r : rows) {
    os << r.method << ',' << r.effort << ',' << r.b << ',' << format_double(r.mdr) << ','
       << r.misses << ',' << r.trials << "\n";
  }
}

}  // namespace pb
