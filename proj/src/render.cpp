#include "nsgp/render.hpp"

#include <sstream>

namespace nsgp {

namespace {

void join_into(std::ostringstream& out, const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ',';
    out << v[i];
  }
}

}  // namespace

std::string render_generators(const NumericalSemigroup& s) {
  std::ostringstream out;
  out << '<';
  join_into(out, s.min_generators());
  out << '>';
  return out.str();
}

std::string render_int_list(const std::vector<int>& v) {
  std::ostringstream out;
  out << '[';
  join_into(out, v);
  out << ']';
  return out.str();
}

std::string render_offset_family(const std::vector<std::vector<int>>& fam) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (i > 0) out << ',';
    out << '[';
    join_into(out, fam[i]);
    out << ']';
  }
  out << '}';
  return out.str();
}

std::string render_basis(const StandardBasis& basis) {
  std::ostringstream out;
  out << '{';
  join_into(out, basis.sorted_elements());
  out << '}';
  return out.str();
}

}  // namespace nsgp
