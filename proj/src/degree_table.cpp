#include <algorithm>
#include <stdexcept>

#include "coxfar/coxeter.hpp"

namespace coxfar {
namespace {

std::vector<int> irreducible_degrees(const Factor& f) {
  switch (f.family) {
    case Family::A: {
      std::vector<int> d;
      for (int i = 2; i <= f.rank + 1; ++i) d.push_back(i);
      return d;
    }
    case Family::B: {
      std::vector<int> d;
      for (int i = 1; i <= f.rank; ++i) d.push_back(2 * i);
      return d;
    }
    case Family::D: {
      std::vector<int> d;
      for (int i = 1; i < f.rank; ++i) d.push_back(2 * i);
      d.push_back(f.rank);
      std::sort(d.begin(), d.end());
      return d;
    }
    case Family::E:
      if (f.rank == 6) return {2, 5, 6, 8, 9, 12};
      if (f.rank == 7) return {2, 6, 8, 10, 12, 14, 18};
      return {2, 8, 12, 14, 18, 20, 24, 30};
    case Family::F:
      return {2, 6, 8, 12};
    case Family::H:
      return f.rank == 3 ? std::vector<int>{2, 6, 10}
                         : std::vector<int>{2, 12, 20, 30};
    case Family::I2:
      return {2, f.m};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

DegreeTable degree_table(const CoxeterType& t) {
  DegreeTable dt;
  dt.order = 1;
  dt.num_reflections = 0;
  for (const Factor& f : t.factors) {
    for (int d : irreducible_degrees(f)) {
      dt.degrees.push_back(d);
      dt.order *= d;
      dt.num_reflections += d - 1;
    }
  }
  std::sort(dt.degrees.begin(), dt.degrees.end());
  for (int d : dt.degrees) dt.exponents.push_back(d - 1);
  dt.coxeter_number = dt.degrees.empty() ? 0 : dt.degrees.back();
  return dt;
}

}  // namespace coxfar
